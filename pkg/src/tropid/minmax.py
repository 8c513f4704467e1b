"""Extremal words of a two-letter ~_2 class.

A class of W(l_a, l_b) under ~_2 is an interval of the height lattice.  Its
top is found by walking between consecutive vertices of the two height
polygons A = conv{(i, alpha_i)} and B = conv{(beta_j, j)}, moving North as
far as A allows and East as little as B allows.  The bottom is the dual of
the top of the dual class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .geometry import LatticePolytope, empty_polytope, hull_2d_sorted
from .words import Word, a_height, b_height, content, dual, word_from_height

A_LABEL, B_LABEL, END_LABEL = "a", "b", "end"


# --- polygon slices ----------------------------------------------------------


def _envelope(points, upper: bool):
    """Concave (upper) or convex (lower) envelope over distinct x."""
    best = {}
    for x, y in points:
        if x not in best or (y > best[x] if upper else y < best[x]):
            best[x] = y
    chain = []
    for p in sorted(best.items()):
        while len(chain) >= 2:
            (x0, y0), (x1, y1) = chain[-2], chain[-1]
            cross = (x1 - x0) * (p[1] - y0) - (y1 - y0) * (p[0] - x0)
            if (cross >= 0) if upper else (cross <= 0):
                chain.pop()
            else:
                break
        chain.append(p)
    return chain


def _column_intervals(vertices) -> dict:
    """x -> (lowest, highest) integer y inside the polygon at column x."""
    if not vertices:
        return {}
    lower = _envelope(vertices, upper=False)
    upper = _envelope(vertices, upper=True)

    def walk(chain, round_up):
        out = {}
        if len(chain) == 1:
            out[chain[0][0]] = chain[0][1]
            return out
        for (x0, y0), (x1, y1) in zip(chain, chain[1:]):
            dx = x1 - x0
            for x in range(x0, x1 + 1):
                num = y0 * dx + (y1 - y0) * (x - x0)
                out[x] = -((-num) // dx) if round_up else num // dx
        return out

    lo, hi = walk(lower, True), walk(upper, False)
    return {x: (lo[x], hi[x]) for x in lo if lo[x] <= hi[x]}


class PolygonSlices:
    """Constant-time lattice membership for the degree-1 polygons A and B."""

    def __init__(self, A: LatticePolytope, B: LatticePolytope):
        self.A = A
        self.B = B
        self._cols = _column_intervals(A.vertices)
        self._rows = _column_intervals([(y, x) for x, y in B.vertices])
        self._rows_A = _column_intervals([(y, x) for x, y in A.vertices])
        self._cols_B = _column_intervals(B.vertices)
        self._above = _above_ranges(self._cols)

    def in_A(self, x: int, y: int) -> bool:
        iv = self._cols.get(x)
        return iv is not None and iv[0] <= y <= iv[1]

    def in_B(self, x: int, y: int) -> bool:
        iv = self._rows.get(y)
        return iv is not None and iv[0] <= x <= iv[1]

    def top_of_A(self, x: int):
        iv = self._cols.get(x)
        return None if iv is None else iv[1]

    def north_stop(self, x: int, y: int, y_max: int):
        """Largest k in (y, y_max] with (x, k) in A and (x, k - 1) in B."""
        a, b = self._cols.get(x), self._cols_B.get(x)
        if a is None or b is None:
            return None
        lo, hi = max(y + 1, a[0], b[0] + 1), min(y_max, a[1], b[1] + 1)
        return hi if lo <= hi else None

    def east_stop(self, x: int, y: int, x_max: int):
        """Least k in (x, x_max] with (k, y) in B, (k - 1, y) in A and A above row y at k."""
        b, a, up = self._rows.get(y), self._rows_A.get(y), self._above.get(y)
        if a is None or b is None or up is None:
            return None
        lo = max(x + 1, b[0], a[0] + 1, up[0])
        hi = min(x_max, b[1], a[1] + 1, up[1])
        return lo if lo <= hi else None


def _above_ranges(cols: dict) -> dict:
    """y -> (first, last) column whose top lattice point is above row y.

    The tops follow a concave envelope, so each such set of columns is an
    interval; one sweep from each side finds all of them.
    """
    xs = sorted(cols)
    first, last = {}, {}
    for order, out in ((xs, first), (xs[::-1], last)):
        reach = 0
        for x in order:
            top = cols[x][1]
            for y in range(reach, top):
                out[y] = x
            reach = max(reach, top)
    return {y: (first[y], last[y]) for y in first}


def _as_slices(A, B) -> PolygonSlices:
    if isinstance(A, PolygonSlices):
        return A
    return PolygonSlices(A, B)


# --- vertex chain ------------------------------------------------------------


@dataclass(frozen=True)
class LabeledVertexChain:
    points: tuple
    labels: tuple

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(zip(self.points, self.labels))


def _leq(p, q):
    return p[0] <= q[0] and p[1] <= q[1]


def vertex_chain(A: LatticePolytope, B: LatticePolytope, c: Sequence[int]) -> LabeledVertexChain:
    la, lb = c
    items = [(tuple(p), A_LABEL) for p in A.vertices]
    items += [(tuple(p), B_LABEL) for p in B.vertices]
    items.append(((la, lb), END_LABEL))
    items.sort(key=lambda t: (t[0][0] + t[0][1], t[0]))
    for (p, _), (q, _) in zip(items, items[1:]):
        if p == q or not _leq(p, q):
            raise ValueError(f"vertices {p} and {q} are not strictly increasing; not a word signature")
    if items[0][0] != (0, 0):
        raise ValueError("vertex chain must start at the origin")
    return LabeledVertexChain(tuple(p for p, _ in items), tuple(l for _, l in items))


# --- the walk ----------------------------------------------------------------


def max_segment(p, p_next, label, label_next, A, B=None):
    """One straight move of the maximal path from ``p`` towards ``p_next``.

    ``A`` and ``B`` are the degree-1 polygons, or a ready ``PolygonSlices``
    passed as ``A``.
    """
    S = _as_slices(A, B)
    x, y = p
    xn, yn = p_next
    if x == xn or y == yn:
        return tuple(p_next), label_next
    if label == B_LABEL:
        k = S.north_stop(x, y, yn)
        if k is None:
            raise ValueError(f"no North move from {p}; inconsistent signature")
        return (x, k), A_LABEL
    if label == A_LABEL:
        k = S.east_stop(x, y, xn)
        if k is None:
            raise ValueError(f"no East move from {p}; inconsistent signature")
        return (k, y), B_LABEL
    raise ValueError(f"cannot move from a point labelled {label!r}")


def max_path(A: LatticePolytope, B: LatticePolytope, c: Sequence[int]) -> list:
    """Corner points of the maximal staircase path with signature (A, B)."""
    chain = vertex_chain(A, B, c)
    S = PolygonSlices(A, B)
    corners = [chain.points[0]]
    for i in range(len(chain) - 1):
        p, lab = chain.points[i], chain.labels[i]
        target, target_label = chain.points[i + 1], chain.labels[i + 1]
        while p != target:
            p, lab = max_segment(p, target, lab, target_label, S)
            corners.append(p)
    return corners


def _word_from_corners(corners) -> Word:
    letters = []
    for (x0, y0), (x1, y1) in zip(corners, corners[1:]):
        if x1 != x0 and y1 != y0:
            raise AssertionError("path segment is not axis-parallel")
        letters.extend([0] * (x1 - x0))
        letters.extend([1] * (y1 - y0))
    return Word(tuple(letters), 2)


def _degree_one_polygons(w: Word):
    # both height sequences come out sorted and distinct
    la, lb = content(w)
    A = hull_2d_sorted(list(enumerate(a_height(w)))) if la else empty_polytope(2)
    B = hull_2d_sorted([(x, j) for j, x in enumerate(b_height(w))]) if lb else empty_polytope(2)
    return A, B


def _require_binary(w: Word):
    if w.m != 2:
        raise ValueError("min/max words are defined for two-letter alphabets")


def max_word(w: Word) -> Word:
    """Top of the ~_2 class of ``w`` in the height order."""
    _require_binary(w)
    c = content(w)
    if 0 in c:
        return w
    A, B = _degree_one_polygons(w)
    return _word_from_corners(max_path(A, B, c))


def min_word(w: Word) -> Word:
    _require_binary(w)
    return dual(max_word(dual(w)))


# --- class intervals -----------------------------------------------------------


@dataclass(frozen=True)
class ClassInterval:
    min_word: Word
    max_word: Word

    @property
    def content(self):
        return content(self.min_word)


def class_interval(w: Word) -> ClassInterval:
    return ClassInterval(min_word(w), max_word(w))


def _bounds(ci: ClassInterval):
    lo, hi = a_height(ci.min_word), a_height(ci.max_word)
    if content(ci.min_word) != content(ci.max_word) or any(x > y for x, y in zip(lo, hi)):
        raise ValueError("min_word must precede max_word")
    return lo, hi


def class_size(ci: ClassInterval) -> int:
    """Number of non-decreasing height vectors between the two bounds."""
    lo, hi = _bounds(ci)
    if not lo:
        return 1
    # ways[y - lo_k] = number of prefixes ending with alpha_k = y
    prev_lo = lo[0]
    ways = [1] * (hi[0] - lo[0] + 1)
    for k in range(1, len(lo)):
        acc, run = [], 0
        # prefix sums of the previous column
        pref = []
        for v in ways:
            run += v
            pref.append(run)
        for y in range(lo[k], hi[k] + 1):
            top = min(y, prev_lo + len(ways) - 1) - prev_lo
            acc.append(pref[top] if top >= 0 else 0)
        ways, prev_lo = acc, lo[k]
    return sum(ways)


def interval_words(ci: ClassInterval) -> Iterator[Word]:
    """Every word of the interval, in lexicographic order of heights."""
    lo, hi = _bounds(ci)
    lb = content(ci.min_word)[1]
    if not lo:
        yield ci.min_word
        return
    alpha = [0] * len(lo)

    def rec(k, floor):
        if k == len(lo):
            yield word_from_height(alpha, lb)
            return
        for y in range(max(lo[k], floor), hi[k] + 1):
            alpha[k] = y
            yield from rec(k + 1, y)

    yield from rec(0, 0)


# --- the Catalan-type family -------------------------------------------------------


def catalan_max_word(r: int, k: int) -> Word:
    """(a b^k)(ab)^r(a^k b), the top of its class."""
    if r < 0 or k < 0:
        raise ValueError("r and k must be non-negative")
    s = "a" + "b" * k + "ab" * r + "a" * k + "b"
    return Word(tuple(0 if ch == "a" else 1 for ch in s), 2)


def catalan_min_word(r: int, k: int) -> Word:
    if r < 0 or k < 0:
        raise ValueError("r and k must be non-negative")
    if r < k:
        mid = "a" * r + "b" * r
    else:
        mid = "a" * k + "ba" * (r - k) + "b" * k
    s = "a" + "b" * k + mid + "a" * k + "b"
    return Word(tuple(0 if ch == "a" else 1 for ch in s), 2)


def catalan_size_formula(r: int, k: int) -> int:
    """Closed form for the size of the class of catalan_max_word(r, k).

    Counts lattice paths of length 2r confined to a strip of width k.
    """
    import mpmath

    with mpmath.workdps(50 + 2 * r):
        n = k + 2
        total = mpmath.mpf(0)
        for j in range(1, (k + 1) // 2 + 1):
            t = mpmath.pi * j / n
            total += mpmath.cos(t) ** (2 * r) * mpmath.sin(t) ** 2
        val = mpmath.mpf(2) ** (2 * r + 2) / n * total
        return int(mpmath.nint(val))


# --- single swaps --------------------------------------------------------------


def equivalent_swaps(w: Word) -> list:
    """Positions k where swapping letters k, k+1 gives a ~_2-equivalent word.

    A swap moves one point of each height set by one unit; a polygon is
    unchanged exactly when the moved point was not a vertex and its new
    position lies in the old polygon.
    """
    _require_binary(w)
    c = content(w)
    if 0 in c:
        return []
    alpha, beta = a_height(w), b_height(w)
    A, B = _degree_one_polygons(w)
    S = PolygonSlices(A, B)
    va, vb = set(A.vertices), set(B.vertices)
    out = []
    s = w.letters
    na = 0
    for k in range(len(s) - 1):
        x, y = s[k], s[k + 1]
        if x == 0 and y == 1:
            i, j = na, k - na  # this a is a_i, the next b is b_j
            pa, qa = (i, alpha[i]), (i, alpha[i] + 1)
            pb, qb = (beta[j], j), (beta[j] - 1, j)
        elif x == 1 and y == 0:
            j, i = k - na, na
            pa, qa = (i, alpha[i]), (i, alpha[i] - 1)
            pb, qb = (beta[j], j), (beta[j] + 1, j)
        else:
            if x == 0:
                na += 1
            continue
        if pa not in va and pb not in vb and S.in_A(*qa) and S.in_B(*qb):
            out.append(k)
        if x == 0:
            na += 1
    return out
