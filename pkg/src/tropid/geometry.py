"""Exact convex hulls of integer point sets.

Every geometric decision is made over the integers (or ``fractions.Fraction``
inside the simplex solver).

``hull_nd`` reduces the input to its affine hull.  In three or more
dimensions Qhull proposes a triangulated boundary, which is accepted only
after an exact check: each simplex spans a hyperplane with every point on
one side, and every ridge is shared by exactly two simplices.  A closed
surface of supporting simplices must be the whole boundary.  If the check
fails the hull is rebuilt by an exact incremental beneath-beyond pass.
``point_in_hull`` is an independent route through an exact phase-one
simplex and is what ``hulls_equal`` uses.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np

# int64 products are used only while this bound holds; otherwise object arrays.
_INT64_SAFE = 2**62


@dataclass(frozen=True)
class PointSet:
    dim: int
    points: tuple

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be non-negative")
        pts = sorted({tuple(int(x) for x in p) for p in self.points})
        for p in pts:
            if len(p) != self.dim:
                raise ValueError(f"point {p} does not have dimension {self.dim}")
        object.__setattr__(self, "points", tuple(pts))

    @classmethod
    def of(cls, points: Iterable[Sequence[int]], dim: int | None = None) -> "PointSet":
        pts = [tuple(int(x) for x in p) for p in points]
        if dim is None:
            if not pts:
                raise ValueError("dimension of an empty point set must be given")
            dim = len(pts[0])
        return cls(dim, tuple(pts))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return tuple(p) in set(self.points)

    def array(self) -> np.ndarray:
        return np.array(self.points, dtype=np.int64).reshape(len(self.points), self.dim)


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of integer points, stored as its sorted vertex tuple."""

    dim: int
    vertices: tuple

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def to_dict(self) -> dict:
        return {"dim": self.dim, "vertices": [list(v) for v in self.vertices]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "LatticePolytope":
        verts = tuple(sorted(tuple(int(x) for x in v) for v in d["vertices"]))
        dim = int(d["dim"])
        for v in verts:
            if len(v) != dim:
                raise ValueError(f"vertex {v} does not have dimension {dim}")
        return cls(dim, verts)

    @classmethod
    def from_json(cls, text: str) -> "LatticePolytope":
        return cls.from_dict(json.loads(text))


def empty_polytope(dim: int) -> LatticePolytope:
    return LatticePolytope(dim, ())


def _as_pointset(S) -> PointSet:
    return S if isinstance(S, PointSet) else PointSet.of(S)


# --- small exact linear algebra ---------------------------------------------


def _det(rows) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _primitive(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        return tuple(x // g for x in v)
    return tuple(v)


class _Echelon:
    """Incremental row echelon basis over the rationals."""

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = []  # (pivot, row) with row[pivot] == 1

    def reduce(self, v):
        v = [Fraction(x) for x in v]
        for piv, row in self.rows:
            c = v[piv]
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        return v

    def add(self, v) -> bool:
        v = self.reduce(v)
        for piv, x in enumerate(v):
            if x:
                row = [y / x for y in v]
                # keep the basis fully reduced so pivots form an identity block
                self.rows = [
                    (p, [a - r[piv] * b for a, b in zip(r, row)]) for p, r in self.rows
                ]
                self.rows.append((piv, row))
                return True
        return False

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return sorted(p for p, _ in self.rows)

    def nullspace(self):
        """Integer basis of the orthogonal complement of the row space."""
        pivots = {p: r for p, r in self.rows}
        free = [j for j in range(self.ncols) if j not in pivots]
        out = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for p, r in pivots.items():
                v[p] = -r[f]
            den = 1
            for x in v:
                den = den * x.denominator // gcd(den, x.denominator)
            out.append(_primitive([int(x * den) for x in v]))
        return out


def _rank(vectors, ncols) -> int:
    e = _Echelon(ncols)
    for v in vectors:
        e.add(v)
        if e.rank == ncols:
            break
    return e.rank


# --- planar hull --------------------------------------------------------------


def _half_chain(pts):
    out = []
    for p in pts:
        px, py = p
        while len(out) >= 2:
            (ox, oy), (ax, ay) = out[-2], out[-1]
            if (ax - ox) * (py - oy) - (ay - oy) * (px - ox) > 0:
                break
            out.pop()
        out.append(p)
    return out


def _monotone_chain(pts):
    """Counter-clockwise hull vertices of sorted, distinct planar points."""
    if len(pts) <= 2:
        return list(pts)
    return _half_chain(pts)[:-1] + _half_chain(reversed(pts))[:-1]


def hull_2d(points) -> LatticePolytope:
    """Andrew's monotone chain on planar integer points.

    Heights arrive sorted, in which case this is a single linear pass.
    """
    S = _as_pointset(points)
    if S.dim != 2:
        raise ValueError(f"hull_2d needs planar points, got dimension {S.dim}")
    return hull_2d_sorted(S.points)


def hull_2d_sorted(points: Sequence[tuple]) -> LatticePolytope:
    """hull_2d for integer pairs already sorted and distinct; no validation."""
    return LatticePolytope(2, tuple(sorted(_monotone_chain(list(points)))))


# --- general hull -------------------------------------------------------------


def _abs_max(X) -> int:
    if X.dtype != object:
        return int(np.abs(X).max())
    return max(abs(int(x)) for x in X.flat)


def _matmul_exact(P, N):
    """P @ N.T with exact integers, using int64 when it cannot overflow."""
    if P.size == 0 or N.size == 0:
        return np.zeros((P.shape[0], N.shape[0]), dtype=np.int64)
    pmax = _abs_max(P)
    nmax = _abs_max(N)
    if pmax * nmax * P.shape[1] < _INT64_SAFE:
        return P.astype(np.int64) @ N.astype(np.int64).T
    return P.astype(object) @ N.astype(object).T


def _unique_maximisers(Q, used, N, B) -> np.ndarray:
    """Mask over ``used``: is the point the unique maximiser of its tight normals' sum?

    The sum lies inside the normal cone of the smallest face containing the
    point, so it singles the point out exactly when that face is a vertex.
    """
    tight = (_matmul_exact(Q[used], N) - B == 0).astype(np.int64)
    C = tight @ N.astype(object) if N.dtype == object else tight @ N
    S = _matmul_exact(Q, np.asarray(C))
    own = S[used, np.arange(len(used))]
    return ((S == own[None, :]).sum(axis=0) == 1) & (S <= own[None, :]).all(axis=0)


class ConvexHull:
    """Exact hull of an integer point cloud: vertices plus an H-description.

    ``equations`` pin down the affine hull; ``normals``/``offsets`` are facet
    inequalities ``n.x <= b`` in the projected coordinates ``coords``.
    """

    def __init__(self, points, dim: int | None = None):
        arr = np.asarray(points, dtype=np.int64) if not isinstance(points, np.ndarray) else points
        if arr.ndim != 2:
            if dim is None:
                raise ValueError("dimension of an empty point set must be given")
            arr = arr.reshape(0, dim)
        if dim is None:
            dim = arr.shape[1]
        if arr.shape[1] != dim:
            raise ValueError(f"points have dimension {arr.shape[1]}, expected {dim}")
        self.dim = dim
        arr = np.unique(arr, axis=0) if len(arr) else arr
        self.points = arr
        self.equations = np.zeros((0, dim), dtype=object)
        self.eq_offsets = np.zeros(0, dtype=object)
        self.coords = ()
        self.normals = np.zeros((0, 0), dtype=np.int64)
        self.offsets = np.zeros(0, dtype=np.int64)
        if len(arr) == 0:
            self.vertices = ()
            return
        self._frame()
        self._build()

    # affine hull and projection coordinates
    def _frame(self):
        P = self.points
        p0 = [int(x) for x in P[0]]
        D = P[1:] - P[0]
        ech = _Echelon(self.dim)
        # the next basis row is the first difference off the current span
        while ech.rank < self.dim:
            normals = np.array(ech.nullspace(), dtype=object).reshape(-1, self.dim)
            off = np.flatnonzero((_matmul_exact(D, normals) != 0).any(axis=1))
            if not len(off):
                break
            ech.add([int(x) for x in D[off[0]]])
        self.rank = ech.rank
        self.coords = tuple(ech.pivots())
        if self.rank < self.dim:
            eqs = ech.nullspace()
            self.equations = np.array(eqs, dtype=object).reshape(len(eqs), self.dim)
            self.eq_offsets = np.array(
                [sum(a * b for a, b in zip(e, p0)) for e in eqs], dtype=object
            )

    def _build(self):
        r = self.rank
        Q = self.points[:, list(self.coords)] if r else self.points[:, :0]
        if r == 0:
            self.vertices = (tuple(int(x) for x in self.points[0]),)
            return
        if r == 1:
            lo = int(np.argmin(Q[:, 0]))
            hi = int(np.argmax(Q[:, 0]))
            self.normals = np.array([[-1], [1]], dtype=np.int64)
            self.offsets = np.array([-int(Q[lo, 0]), int(Q[hi, 0])], dtype=np.int64)
            self._set_vertices([lo, hi])
            return
        if r == 2:
            qpts = sorted({(int(a), int(b)): k for k, (a, b) in enumerate(Q)}.items())
            ring = _monotone_chain([p for p, _ in qpts])
            index = dict(qpts)
            normals, offsets = [], []
            for u, v in zip(ring, ring[1:] + ring[:1]):
                n = _primitive((v[1] - u[1], u[0] - v[0]))
                normals.append(n)
                offsets.append(n[0] * u[0] + n[1] * u[1])
            self.normals = np.array(normals, dtype=np.int64)
            self.offsets = np.array(offsets, dtype=np.int64)
            self._set_vertices([index[p] for p in ring])
            return
        if not self._certified_qhull(Q):
            self._beneath_beyond(Q)

    def _certified_qhull(self, Q) -> bool:
        """Accept Qhull's triangulated boundary only if it is exactly a closed cover.

        Checks: each simplex lies on an exact hyperplane with every point on
        one side (zero-volume simplices from triangulated coplanar facets are
        matched to the hyperplane of their facet); every ridge lies in exactly
        two simplices, so the surface covers each generic boundary point an
        odd or an even number of times throughout; and the barycentre of one
        simplex lies in no other simplex, so that number is one.
        """
        r = self.rank
        n = len(Q)
        if n <= r + 1 or int(np.abs(Q).max()) > 2**20:
            return False
        try:
            from scipy.spatial import ConvexHull as _Qhull
            from scipy.spatial import QhullError
        except ImportError:  # pragma: no cover
            return False
        try:
            qh = _Qhull(Q.astype(np.float64))
        except QhullError:
            return False
        simp = np.sort(qh.simplices, axis=1)
        Q = Q.astype(np.int64)
        base = Q[simp[:, 0]]
        D = Q[simp[:, 1:]] - base[:, None, :]
        cols = []
        for j in range(r):
            minor = np.delete(D, j, axis=2).astype(np.float64)
            cols.append((-1) ** j * np.rint(np.linalg.det(minor)))
        N = np.stack(cols, axis=1).astype(np.int64)
        if (np.einsum("fkr,fr->fk", D, N) != 0).any():
            return False
        good = ~(N == 0).all(axis=1)
        if not good.any():
            return False
        N[good] //= np.gcd.reduce(np.abs(N[good]), axis=1)[:, None]
        off = (N * base).sum(axis=1)
        centre = Q.sum(axis=0)
        side = N @ centre - n * off
        if (side[good] == 0).any():
            return False
        flip = side > 0
        N[flip] *= -1
        off[flip] *= -1
        # zero-volume simplices borrow the plane of a coplanar simplex
        bad = np.nonzero(~good)[0]
        if len(bad):
            gidx = np.nonzero(good)[0]
            sim = qh.equations[bad, :-1] @ qh.equations[gidx, :-1].T
            for b, row in zip(bad, sim):
                for g in gidx[np.argsort(-row)[:4]]:
                    if (Q[simp[b]] @ N[g] == off[g]).all():
                        N[b], off[b] = N[g], off[g]
                        break
                else:
                    return False
        H, plane = np.unique(np.concatenate([N, off[:, None]], axis=1), axis=0, return_inverse=True)
        plane = plane.ravel()
        if ((Q @ H[:, :-1].T) > H[:, -1]).any():
            return False
        if len(np.unique(simp, axis=0)) != len(simp):
            return False
        ridges = np.concatenate([np.delete(simp, k, axis=1) for k in range(r)])
        _, counts = np.unique(ridges, axis=0, return_counts=True)
        if (counts != 2).any():
            return False
        f = int(np.nonzero(good)[0][0])
        bary = Q[simp[f]].sum(axis=0)  # r times the barycentre
        for g in np.nonzero(plane == plane[f])[0]:
            if g != f and _phase_one_feasible(
                [[r * int(x) for x in Q[v]] + [r] for v in simp[g]], [int(x) for x in bary] + [r]
            ):
                return False
        self.normals = H[:, :-1]
        self.offsets = H[:, -1]
        used = np.unique(simp)
        self._set_vertices(used[_unique_maximisers(Q, used, self.normals, self.offsets)])
        return True

    def _set_vertices(self, idx):
        self.vertices = tuple(sorted({tuple(int(x) for x in self.points[i]) for i in idx}))

    def _beneath_beyond(self, Q):
        r = self.rank
        qs = [tuple(int(x) for x in row) for row in Q]
        n = len(qs)

        # initial simplex from extreme points first
        order = [int(np.argmin(Q[:, j])) for j in range(r)] + [
            int(np.argmax(Q[:, j])) for j in range(r)
        ]
        order += list(range(n))
        simplex = []
        ech = _Echelon(r)
        for i in order:
            if i in simplex:
                continue
            if not simplex:
                simplex.append(i)
                continue
            if ech.add([a - b for a, b in zip(qs[i], qs[simplex[0]])]):
                simplex.append(i)
                if len(simplex) == r + 1:
                    break
        centre = [sum(qs[i][j] for i in simplex) for j in range(r)]
        scale = r + 1

        facets = {}
        ridges = {}
        counter = [0]

        def add_facet(verts):
            verts = tuple(sorted(verts))
            base = qs[verts[0]]
            rows = [[a - b for a, b in zip(qs[v], base)] for v in verts[1:]]
            normal = []
            for j in range(r):
                minor = [row[:j] + row[j + 1:] for row in rows]
                normal.append((-1) ** j * _det(minor))
            normal = _primitive(normal)
            off = sum(a * b for a, b in zip(normal, base))
            if sum(a * b for a, b in zip(normal, centre)) > scale * off:
                normal = tuple(-x for x in normal)
                off = -off
            fid = counter[0]
            counter[0] += 1
            facets[fid] = (verts, normal, off)
            for k in range(r):
                ridges.setdefault(verts[:k] + verts[k + 1:], set()).add(fid)

        def drop_facet(fid):
            verts = facets.pop(fid)[0]
            for k in range(r):
                key = verts[:k] + verts[k + 1:]
                s = ridges[key]
                s.discard(fid)
                if not s:
                    del ridges[key]

        for k in range(r + 1):
            add_facet(simplex[:k] + simplex[k + 1:])

        in_simplex = set(simplex)
        cand = np.array([i for i in range(n) if i not in in_simplex], dtype=np.int64)
        while len(cand):
            fids = list(facets)
            N = np.array([facets[f][1] for f in fids], dtype=object)
            B = np.array([facets[f][2] for f in fids], dtype=object)
            V = _matmul_exact(Q[cand], N) - B
            outside = (V > 0).any(axis=1)
            cand, V = cand[outside], V[outside]
            if not len(cand):
                break
            k = int(np.argmax(V.max(axis=1)))
            p = int(cand[k])
            visible = {fids[j] for j in np.nonzero(V[k] > 0)[0]}
            horizon = []
            for fid in visible:
                verts = facets[fid][0]
                for t in range(r):
                    ridge = verts[:t] + verts[t + 1:]
                    if any(o not in visible for o in ridges[ridge] if o != fid):
                        horizon.append(ridge)
            for fid in visible:
                drop_facet(fid)
            for ridge in horizon:
                add_facet(ridge + (p,))
            cand = np.delete(cand, k)

        fids = list(facets)
        N = np.array([facets[f][1] for f in fids], dtype=object)
        B = np.array([facets[f][2] for f in fids], dtype=object)
        used = np.array(sorted({v for f in fids for v in facets[f][0]}), dtype=np.int64)
        # duplicate hyperplanes from coplanar simplices are harmless but wasteful
        keep = {}
        for f in fids:
            keep.setdefault((facets[f][1], facets[f][2]), None)
        self.normals = np.array([k[0] for k in keep], dtype=object)
        self.offsets = np.array([k[1] for k in keep], dtype=object)
        if max(abs(int(x)) for x in self.normals.flat) < 2**31:
            self.normals = self.normals.astype(np.int64)
            self.offsets = self.offsets.astype(np.int64)
        self._set_vertices(used[_unique_maximisers(Q, used, self.normals, self.offsets)])

    def polytope(self) -> LatticePolytope:
        return LatticePolytope(self.dim, self.vertices)

    def contains(self, points) -> np.ndarray:
        """Exact membership of each row of ``points`` in the hull."""
        X = np.asarray(points, dtype=np.int64).reshape(-1, self.dim)
        if not self.vertices:
            return np.zeros(len(X), dtype=bool)
        ok = np.ones(len(X), dtype=bool)
        if len(self.equations):
            E = _matmul_exact(X, self.equations)
            ok &= (E == self.eq_offsets).all(axis=1)
        if self.rank:
            XJ = X[:, list(self.coords)]
            ok &= (_matmul_exact(XJ, self.normals) <= self.offsets).all(axis=1)
        return ok

    def same_hull(self, points) -> bool:
        """True iff conv(points) equals this hull."""
        X = np.asarray(points, dtype=np.int64).reshape(-1, self.dim)
        if not self.vertices or not len(X):
            return not self.vertices and not len(X)
        if not self.contains(X).all():
            return False
        V = np.array(self.vertices, dtype=np.int64)
        return bool(np.isin(_row_keys(V), _row_keys(X)).all())


def _row_keys(X: np.ndarray) -> np.ndarray:
    """One opaque scalar per row, for set operations on whole rows."""
    X = np.ascontiguousarray(X, dtype=np.int64)
    return X.view(np.dtype((np.void, X.itemsize * X.shape[1]))).ravel()


def hull_nd(points, dim: int | None = None) -> LatticePolytope:
    """Canonical vertex set of the convex hull in any dimension."""
    if isinstance(points, PointSet):
        dim = points.dim
        points = points.points
    pts = [tuple(int(x) for x in p) for p in points]
    if not pts:
        if dim is None:
            raise ValueError("dimension of an empty point set must be given")
        return empty_polytope(dim)
    if dim is None:
        dim = len(pts[0])
    return ConvexHull(np.array(pts, dtype=np.int64).reshape(len(pts), dim), dim).polytope()


# --- exact rational feasibility ---------------------------------------------


def _phase_one_feasible(columns, rhs) -> bool:
    """Does ``sum_j x_j columns[j] = rhs`` have a solution with x >= 0?

    Dense phase-one simplex over Fractions with Bland's rule.
    """
    m = len(rhs)
    ncol = len(columns)
    # tableau rows: [coeffs over columns | artificials | rhs]
    T = []
    for i in range(m):
        sign = -1 if rhs[i] < 0 else 1
        row = [Fraction(sign * c[i]) for c in columns]
        row += [Fraction(1 if k == i else 0) for k in range(m)]
        row.append(Fraction(sign * rhs[i]))
        T.append(row)
    width = ncol + m
    basis = [ncol + i for i in range(m)]
    # objective: minimise the sum of artificials -> reduced costs
    cost = [Fraction(0)] * (width + 1)
    for row in T:
        for j in range(width + 1):
            cost[j] -= row[j]
    for j in range(ncol, width):
        cost[j] += 1
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i, row in enumerate(T):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # unbounded cannot happen in phase one
            break
        i = best[1]
        piv = T[i][enter]
        T[i] = [x / piv for x in T[i]]
        for k in range(m):
            if k != i and T[k][enter]:
                f = T[k][enter]
                T[k] = [x - f * y for x, y in zip(T[k], T[i])]
        if cost[enter]:
            f = cost[enter]
            cost = [x - f * y for x, y in zip(cost, T[i])]
        basis[i] = enter
    return cost[-1] == 0


def point_in_hull(p: Sequence[int], S) -> bool:
    """Exact test of whether ``p`` is a convex combination of the points of ``S``."""
    S = _as_pointset(S)
    p = tuple(int(x) for x in p)
    if len(p) != S.dim:
        raise ValueError(f"point of dimension {len(p)} tested against dimension {S.dim}")
    if not S.points:
        return False
    if p in set(S.points):
        return True
    for j in range(S.dim):
        col = [q[j] for q in S.points]
        if not min(col) <= p[j] <= max(col):
            return False
    columns = [q + (1,) for q in S.points]
    return _phase_one_feasible(columns, p + (1,))


def hulls_equal(P, Q) -> bool:
    """conv(P) == conv(Q), decided by mutual point-in-hull inclusion."""
    P, Q = _as_pointset(P), _as_pointset(Q)
    if P.dim != Q.dim:
        raise ValueError(f"dimension mismatch: {P.dim} vs {Q.dim}")
    if not P.points or not Q.points:
        return not P.points and not Q.points
    sp, sq = set(P.points), set(Q.points)
    return all(point_in_hull(p, Q) for p in sp - sq) and all(
        point_in_hull(q, P) for q in sq - sp
    )


# --- products, slices and the affine recursion map ---------------------------


def product(P, Q) -> PointSet:
    P, Q = _as_pointset(P), _as_pointset(Q)
    return PointSet(P.dim + Q.dim, tuple(p + q for p in P.points for q in Q.points))


def _split_dims(dim, m):
    if m <= 0 or dim % m or dim // m < 2:
        raise ValueError(f"dimension {dim} is not m*(d+1) for m={m}, d>=1")
    return dim // m - 1


def satisfies_constraint(y: Sequence[int], u_content: Sequence[int]) -> bool:
    m = len(u_content)
    d = _split_dims(len(y), m)
    return all(
        sum(y[m * k + r] for k in range(d)) + u_content[r] <= y[m * d + r] for r in range(m)
    )


def intersect_constraint(S, u_content: Sequence[int]) -> PointSet:
    """Points of ``S`` whose final block dominates the summed blocks plus c(u)."""
    S = _as_pointset(S) if not isinstance(S, PointSet) else S
    _split_dims(S.dim, len(u_content))
    return PointSet(S.dim, tuple(y for y in S.points if satisfies_constraint(y, u_content)))


def pi_map(p: Sequence[int], u_content: Sequence[int], m: int, d: int) -> tuple:
    """Invertible affine map taking supports of u.a_j into the product side."""
    p = tuple(int(x) for x in p)
    if len(p) != m * (d + 1) or len(u_content) != m:
        raise ValueError(f"point of dimension {len(p)} does not match m={m}, d={d}")
    tail = tuple(sum(p[m * k + r] for k in range(d + 1)) + u_content[r] for r in range(m))
    return p[: m * d] + tail


def pi_inverse(q: Sequence[int], u_content: Sequence[int], m: int, d: int) -> tuple:
    q = tuple(int(x) for x in q)
    if len(q) != m * (d + 1) or len(u_content) != m:
        raise ValueError(f"point of dimension {len(q)} does not match m={m}, d={d}")
    tail = tuple(
        q[m * d + r] - u_content[r] - sum(q[m * k + r] for k in range(d)) for r in range(m)
    )
    return q[: m * d] + tail
