"""Vectorized kernels over many two-letter words of one content.

Words are rows of a uint8 array (0 = a, 1 = b).  ``degree_one_keys`` gives
an exact fixed-width encoding of the degree-1 signature; ``degree_two_fingerprints``
gives support-function values of every degree-2 polytope along fixed
directions (unequal fingerprints imply unequal polytopes).
"""

from __future__ import annotations

import itertools
from math import comb

import numpy as np

from .words import Word


def words_array(la: int, lb: int) -> np.ndarray:
    """All words of W(la, lb) as rows, in lexicographic order."""
    n = la + lb
    total = comb(n, la)
    out = np.ones((total, n), dtype=np.uint8)
    if la == 0 or total == 0:
        return out
    # lexicographic order over {a<b} = combinations of a-positions in order
    pos = np.fromiter(
        itertools.chain.from_iterable(itertools.combinations(range(n), la)),
        dtype=np.int16,
        count=total * la,
    ).reshape(total, la)
    out[np.arange(total)[:, None], pos] = 0
    return out


def to_word(row) -> Word:
    return Word(tuple(int(x) for x in row), 2)


def from_words(words) -> np.ndarray:
    return np.array([w.letters for w in words], dtype=np.uint8)


def heights_array(W: np.ndarray, letter: int) -> np.ndarray:
    """Per-row heights: for each occurrence of ``letter``, the count of the other letter before it."""
    other = (W != letter).astype(np.int32)
    before = np.cumsum(other, axis=1) - other
    mask = W == letter
    k = int(mask[0].sum()) if len(W) else 0
    return before[mask].reshape(len(W), k)


def _vertex_mask(h: np.ndarray) -> np.ndarray:
    """Which points (i, h_i) are vertices of conv{(i, h_i)}, per row."""
    N, k = h.shape
    mask = np.ones((N, k), dtype=bool)
    if k <= 2:
        return mask
    h = h.astype(np.int64)
    for i in range(1, k - 1):
        above = np.ones(N, dtype=bool)
        below = np.ones(N, dtype=bool)
        for j in range(i):
            for l in range(i + 1, k):
                lhs = h[:, i] * (l - j)
                rhs = h[:, j] * (l - i) + h[:, l] * (i - j)
                above &= lhs > rhs
                below &= lhs < rhs
        mask[:, i] = above | below
    return mask


def degree_one_keys(W: np.ndarray) -> np.ndarray:
    """Rows equal iff the words have equal degree-1 signatures."""
    alpha = heights_array(W, 0)
    beta = heights_array(W, 1)
    ka = np.where(_vertex_mask(alpha), alpha, -1)
    kb = np.where(_vertex_mask(beta), beta, -1)
    return np.concatenate([ka, kb], axis=1).astype(np.int16)


def group_rows(keys: np.ndarray, min_size: int = 2) -> list:
    """Index arrays of rows sharing a key, for groups of at least ``min_size``."""
    if len(keys) == 0:
        return []
    _, inverse, counts = np.unique(keys, axis=0, return_inverse=True, return_counts=True)
    inverse = inverse.ravel()
    order = np.argsort(inverse, kind="stable")
    bounds = np.concatenate([[0], np.cumsum(counts)])
    return [order[bounds[g]:bounds[g + 1]] for g in range(len(counts)) if counts[g] >= min_size]


def fingerprint_directions(count: int, seed: int = 0) -> np.ndarray:
    """Fixed pseudo-random integer directions in R^4."""
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([104729, count, seed])))
    return rng.integers(-1000, 1001, size=(count, 4))


def degree_two_fingerprints(W: np.ndarray, directions=None, chunk: int | None = None) -> np.ndarray:
    """Support-function maxima of the four degree-2 polytopes along ``directions``.

    Along a direction t the support point of positions i < j scores
    F(i) + G(j), so each maximum is a prefix-max scan rather than a sweep
    over all pairs.  Output has shape (N, 4 * len(directions)), grouped by
    subword aa, ab, ba, bb; absent subwords score int64 min.
    """
    D = fingerprint_directions(32) if directions is None else np.asarray(directions, dtype=np.int64)
    N, n = W.shape
    nd = len(D)
    if chunk is None:
        chunk = max(1, (1 << 22) // max(1, n * nd))
    low = np.iinfo(np.int64).min // 4
    out = np.empty((N, 4 * nd), dtype=np.int64)
    d0, d1, d2, d3 = (D[:, k][None, None, :] for k in range(4))
    for s in range(0, N, chunk):
        isb = W[s:s + chunk].astype(np.int64)
        M = len(isb)
        cb = np.cumsum(isb, axis=1) - isb  # b's strictly before position
        ca = np.arange(n)[None, :] - cb
        isb3 = isb[:, :, None]
        ca3, cb3 = ca[:, :, None], cb[:, :, None]
        # prefix (ca_i, cb_i), middle (ca_j - ca_{i+1}, cb_j - cb_{i+1})
        F = (d0 - d2) * ca3 + (d1 - d3) * cb3 - d2 * (1 - isb3) - d3 * isb3
        G = d2 * ca3 + d3 * cb3
        for x in (0, 1):
            Fx = np.where(isb3 == x, F, low)
            pm = np.maximum.accumulate(Fx, axis=1)
            prev = np.concatenate([np.full((M, 1, nd), low), pm[:, :-1]], axis=1)
            tot = G + prev
            for y in (0, 1):
                c = 2 * x + y
                out[s:s + M, c * nd:(c + 1) * nd] = np.where(isb3 == y, tot, low).max(axis=1)
    out[out < low // 2] = np.iinfo(np.int64).min
    return out
