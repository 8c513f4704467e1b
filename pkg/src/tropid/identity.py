"""Identity checks for the upper-triangular tropical monoid UT_n.

``check_identity`` compares signatures degree by degree.  The tropical
matrix evaluation below is an independent necessary-condition check: a
sound identity can never be separated by any morphism.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .signature import SupportCloud, degree_signature
from .words import Word, content, neighbors, swap_at

# -inf sentinel; far below any reachable finite value, so max-plus stays exact
NEG_INF = np.iinfo(np.int64).min // 4


def _saturate(a):
    a[a < NEG_INF // 2] = NEG_INF
    return a


def tropical_matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Max-plus product; works on stacks of matrices (leading axes broadcast)."""
    C = (A[..., :, :, None] + B[..., None, :, :]).max(axis=-2)
    return _saturate(C)


@dataclass(frozen=True)
class TropicalMatrix:
    entries: np.ndarray

    def __post_init__(self):
        e = np.array(self.entries, dtype=np.int64)
        if e.ndim != 2 or e.shape[0] != e.shape[1]:
            raise ValueError("tropical matrix must be square")
        if (e[np.tril_indices(len(e), -1)] != NEG_INF).any():
            raise ValueError("entries strictly below the diagonal must be -inf")
        object.__setattr__(self, "entries", _saturate(e))

    @property
    def n(self):
        return len(self.entries)

    def __matmul__(self, other: "TropicalMatrix") -> "TropicalMatrix":
        return TropicalMatrix(tropical_matmul(self.entries, other.entries))

    def __eq__(self, other):
        return isinstance(other, TropicalMatrix) and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash(self.entries.tobytes())

    def tolist(self):
        return [[None if x == NEG_INF else int(x) for x in row] for row in self.entries]


@dataclass(frozen=True)
class Morphism:
    """Images of the alphabet letters in UT_n."""

    matrices: tuple

    def __post_init__(self):
        sizes = {M.n for M in self.matrices}
        if len(sizes) != 1:
            raise ValueError("all letter images must share a dimension")

    @property
    def n(self):
        return self.matrices[0].n


def tropical_product(phi: Morphism, w: Word) -> TropicalMatrix:
    if len(phi.matrices) < w.m:
        raise ValueError("morphism does not cover the alphabet")
    acc = phi.matrices[w.letters[0]].entries
    for x in w.letters[1:]:
        acc = tropical_matmul(acc, phi.matrices[x].entries)
    return TropicalMatrix(acc)


@dataclass(frozen=True)
class MorphismTestResult:
    distinguished: bool
    morphism: Morphism | None = None
    trials: int = 0

    def __bool__(self):
        return self.distinguished


def trial_generator(seed: int, stream: int) -> np.random.Generator:
    """Counter-based stream ``stream`` under ``seed``; independent of scheduling."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, stream])))


def random_upper_triangular(rng: np.random.Generator, m: int, n: int, low: int, high: int):
    """``m`` random UT_n matrices with integer entries in [low, high]."""
    mats = rng.integers(low, high + 1, size=(m, n, n), dtype=np.int64)
    below = np.tril_indices(n, -1)
    mats[:, below[0], below[1]] = NEG_INF
    return mats


def _evaluate(mats: np.ndarray, w: Word) -> np.ndarray:
    # mats: (trials, m, n, n) -> products (trials, n, n)
    acc = mats[:, w.letters[0]]
    for x in w.letters[1:]:
        acc = tropical_matmul(acc, mats[:, x])
    return acc


def random_morphism_test(
    w: Word,
    v: Word,
    n: int,
    trials: int = 1000,
    seed: int = 0,
    low: int = -10,
    high: int = 10,
    batch: int = 256,
) -> MorphismTestResult:
    """Evaluate both words under random morphisms into UT_n.

    Trial ``t`` draws its matrices from stream ``t`` of ``seed``, so the
    verdict does not depend on how trials are batched.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    if w.m != v.m:
        raise ValueError("words must share an alphabet")
    m = w.m
    for start in range(0, trials, batch):
        idx = range(start, min(trials, start + batch))
        mats = np.stack([random_upper_triangular(trial_generator(seed, t), m, n, low, high) for t in idx])
        diff = (_evaluate(mats, w) != _evaluate(mats, v)).any(axis=(1, 2))
        if diff.any():
            k = int(np.argmax(diff))
            phi = Morphism(tuple(TropicalMatrix(M) for M in mats[k]))
            return MorphismTestResult(True, phi, idx[k] + 1)
    return MorphismTestResult(False, None, trials)


# --- signature-based predicates ----------------------------------------------


def check_identity(w: Word, v: Word, n: int) -> bool:
    """w ~_n v, by equality of degree-d signatures for d = 1..n-1."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if w.m != v.m:
        raise ValueError("words must share an alphabet")
    if w == v:
        return True
    if content(w) != content(v):
        return False
    for d in range(1, n):
        if d == 1 and w.m == 2:
            if degree_signature(w, 1) != degree_signature(v, 1):
                return False
        elif not SupportCloud(w, d).same_as(SupportCloud(v, d)):
            return False
    return True


def is_locally_isolated(w: Word, n: int) -> bool:
    """No single adjacent swap of ``w`` gives a UT_n identity."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if w.m == 2:
        from .minmax import equivalent_swaps

        nbrs = [swap_at(w, k) for k in equivalent_swaps(w)]
        degrees = range(2, n)
    else:
        nbrs = neighbors(w)
        degrees = range(1, n)
    clouds = {}
    for u in nbrs:
        for d in degrees:
            if d not in clouds:
                clouds[d] = SupportCloud(w, d)
            if not clouds[d].same_as(SupportCloud(u, d)):
                break
        else:
            return False
    return True


def is_isoterm(w: Word, n: int) -> bool:
    """``w`` is alone in its UT_n class."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if w.m == 2 and n == 2:
        from .minmax import max_word, min_word

        return min_word(w) == max_word(w)
    from .enumeration import equivalence_class

    return len(equivalence_class(w, n)) == 1
