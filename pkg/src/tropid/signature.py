"""Degree-d signatures of words.

The support of g_u^w has one point per occurrence of ``u`` as a scattered
subword of ``w``: block k of the point is the content of the factor strictly
between the (k-1)-th and k-th chosen letters (block 1 is the prefix before
the first one).  ``support_points`` computes this straight from the
definition; ``support_table`` computes all supports of one degree at once
from a prefix-count table, the way the signature algorithm does.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from math import comb

import numpy as np

from .geometry import (
    ConvexHull,
    LatticePolytope,
    PointSet,
    empty_polytope,
    hull_2d,
    intersect_constraint,
    pi_map,
    product,
)
from .words import ALPHABET, Word, content, letter_height

# fixed probe directions for support-function fingerprints
_FP_DIRECTIONS = 48
_direction_cache: dict = {}


def _directions(dim):
    if dim not in _direction_cache:
        rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([7919, dim])))
        _direction_cache[dim] = rng.integers(-997, 998, size=(_FP_DIRECTIONS, dim))
    return _direction_cache[dim]


def u_label(code: int, m: int, d: int) -> str:
    letters = []
    for _ in range(d):
        code, r = divmod(code, m)
        letters.append(ALPHABET[r])
    return "".join(reversed(letters))


# --- oracle ------------------------------------------------------------------


def support_points(w: Word, u: Word) -> PointSet:
    """Support of g_u^w, enumerated directly from its definition."""
    if len(u) < 1:
        raise ValueError("u must be nonempty")
    if u.m != w.m:
        raise ValueError("w and u must share an alphabet")
    m, d = w.m, len(u)
    s = w.letters
    pts = set()
    for pos in itertools.combinations(range(len(s)), d):
        if any(s[q] != u[k] for k, q in enumerate(pos)):
            continue
        point = []
        prev = -1
        for q in pos:
            factor = s[prev + 1:q]
            point.extend(factor.count(x) for x in range(m))
            prev = q
        pts.add(tuple(point))
    return PointSet(m * d, tuple(pts))


# --- fast tables -------------------------------------------------------------


def _positions(n, d):
    if d == 1:
        return np.arange(n, dtype=np.int64).reshape(n, 1)
    if d == 2:
        i, j = np.triu_indices(n, k=1)
        return np.stack([i, j], axis=1).astype(np.int64)
    flat = np.fromiter(
        itertools.chain.from_iterable(itertools.combinations(range(n), d)),
        dtype=np.int64,
        count=comb(n, d) * d,
    )
    return flat.reshape(-1, d)


def prefix_counts(w: Word) -> np.ndarray:
    """Row i is the content of the length-i prefix."""
    s = np.asarray(w.letters, dtype=np.int64)
    onehot = np.zeros((len(s), w.m), dtype=np.int64)
    onehot[np.arange(len(s)), s] = 1
    return np.vstack([np.zeros((1, w.m), dtype=np.int64), np.cumsum(onehot, axis=0)])


def support_table(w: Word, d: int):
    """Exponent vectors of every position tuple of size ``d``.

    Returns ``(codes, points)`` where ``codes[t]`` is the lexicographic
    index of the subword read off tuple ``t``.
    """
    m = w.m
    s = np.asarray(w.letters, dtype=np.int64)
    if d > len(s):
        return np.zeros(0, dtype=np.int64), np.zeros((0, m * d), dtype=np.int64)
    pos = _positions(len(s), d)
    c = prefix_counts(w)
    blocks = [c[pos[:, 0]]]
    for k in range(1, d):
        blocks.append(c[pos[:, k]] - c[pos[:, k - 1] + 1])
    points = np.concatenate(blocks, axis=1)
    codes = np.zeros(len(pos), dtype=np.int64)
    for k in range(d):
        codes = codes * m + s[pos[:, k]]
    return codes, points


def _grouped(codes, points, ncodes):
    order = np.argsort(codes, kind="stable")
    codes, points = codes[order], points[order]
    bounds = np.searchsorted(codes, np.arange(ncodes + 1))
    return [points[bounds[k]:bounds[k + 1]] for k in range(ncodes)]


# --- signatures --------------------------------------------------------------


@dataclass(frozen=True)
class DegreeSignature:
    m: int
    d: int
    entries: tuple  # LatticePolytope per u, lexicographic in u

    def __getitem__(self, u) -> LatticePolytope:
        if isinstance(u, Word):
            u = str(u)
        code = 0
        for ch in u:
            code = code * self.m + ALPHABET.index(ch)
        return self.entries[code]

    def labels(self):
        return [u_label(k, self.m, self.d) for k in range(len(self.entries))]

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "d": self.d,
            "entries": [
                {"u": u, "polytope": p.to_dict()} for u, p in zip(self.labels(), self.entries)
            ],
        }


@dataclass(frozen=True)
class UTnSignature:
    n: int
    per_degree: dict  # d -> DegreeSignature for d = 1..n-1

    def to_dict(self) -> dict:
        return {
            "m": self.per_degree[1].m,
            "n": self.n,
            "degrees": [self.per_degree[d].to_dict() for d in sorted(self.per_degree)],
        }

    def key(self) -> bytes:
        return signature_key(self)


def signature_key(sig) -> bytes:
    """Byte-canonical form; equal keys iff equal signatures."""
    return json.dumps(sig.to_dict(), sort_keys=True, separators=(",", ":")).encode()


def degree_signature(w: Word, d: int) -> DegreeSignature:
    if d < 1:
        raise ValueError("degree must be positive")
    m = w.m
    if d == 1 and m == 2:
        entries = tuple(
            hull_2d(PointSet(2, h.points)) if h.points else empty_polytope(2)
            for h in (letter_height(w, 0), letter_height(w, 1))
        )
        return DegreeSignature(m, d, entries)
    codes, points = support_table(w, d)
    groups = _grouped(codes, points, m**d)
    entries = tuple(
        ConvexHull(g, m * d).polytope() if len(g) else empty_polytope(m * d) for g in groups
    )
    return DegreeSignature(m, d, entries)


def utn_signature(w: Word, n: int) -> UTnSignature:
    if n < 2:
        raise ValueError("n must be at least 2")
    return UTnSignature(n, {d: degree_signature(w, d) for d in range(1, n)})


def check_recursion(w: Word, u: Word, j: int) -> bool:
    """Compare both sides of the product/slice recursion for supports of u.a_j."""
    if u.m != w.m:
        raise ValueError("w and u must share an alphabet")
    m, d = w.m, len(u)
    uj = Word(u.letters + (j,), m)
    lhs = {pi_map(p, content(u), m, d) for p in support_points(w, uj).points}
    aj = Word((j,), m)
    rhs = intersect_constraint(product(support_points(w, u), support_points(w, aj)), content(u))
    return lhs == set(rhs.points)


# --- exact comparison of support clouds ---------------------------------------


class SupportCloud:
    """All degree-``d`` supports of one word, with cheap exact comparisons.

    Support-function values along fixed integer directions separate most
    unequal polytopes without building any hull; when they agree, equality
    is settled exactly against the hull of this cloud.
    """

    def __init__(self, w: Word, d: int):
        self.word = w
        self.m = w.m
        self.d = d
        codes, points = support_table(w, d)
        self.groups = _grouped(codes, points, self.m**d)
        self._hulls = {}

    @cached_property
    def fingerprint(self) -> np.ndarray:
        D = _directions(self.m * self.d)
        out = np.full((len(self.groups), len(D)), np.iinfo(np.int64).min, dtype=np.int64)
        for k, g in enumerate(self.groups):
            if len(g):
                out[k] = (g @ D.T).max(axis=0)
        return out

    def hull(self, k: int) -> ConvexHull:
        if k not in self._hulls:
            self._hulls[k] = ConvexHull(self.groups[k], self.m * self.d)
        return self._hulls[k]

    def polytope(self, k: int) -> LatticePolytope:
        if not len(self.groups[k]):
            return empty_polytope(self.m * self.d)
        return self.hull(k).polytope()

    def signature(self) -> DegreeSignature:
        return DegreeSignature(self.m, self.d, tuple(self.polytope(k) for k in range(len(self.groups))))

    def same_as(self, other: "SupportCloud") -> bool:
        if (self.m, self.d) != (other.m, other.d):
            return False
        if not np.array_equal(self.fingerprint, other.fingerprint):
            return False
        for k, (g, h) in enumerate(zip(self.groups, other.groups)):
            if not len(g) or not len(h):
                if len(g) or len(h):
                    return False
                continue
            if len(g) == len(h) and np.array_equal(g, h):
                continue
            if not self.hull(k).same_hull(h):
                return False
        return True
