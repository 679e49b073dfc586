"""Projective spaces PG(d, q) over the integer-indexed fields of :mod:`field`.

Points are plain tuples of field indices, normalised so that the first
nonzero coordinate is 1; a tuple in that form *is* the point, so points hash
and compare directly.  Canonical order of points (and of plane coefficient
vectors) is lexicographic order of these tuples.

Hyperplanes are :class:`PlaneSpec` objects holding a canonical coefficient
vector ``(c_0 : ... : c_d)`` for the equation ``sum c_i X_i = 0``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import IdenticalPoints, NotAGrid
from .field import FieldSpec
from .matchings import GridSpec

Point = tuple


class ProjLine:
    """A line, stored with all of its q+1 points (sorted)."""

    __slots__ = ("points", "_set", "_hash")

    def __init__(self, points: Iterable[Point]):
        self.points = tuple(sorted(points))
        self._set = frozenset(self.points)
        self._hash = hash(self.points)

    @property
    def span(self) -> tuple[Point, Point]:
        return self.points[0], self.points[1]

    @property
    def dim(self) -> int:
        return len(self.points[0]) - 1

    def __contains__(self, P) -> bool:
        return P in self._set

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __eq__(self, other):
        return isinstance(other, ProjLine) and self.points == other.points

    def __lt__(self, other):
        return self.points < other.points

    def __hash__(self):
        return self._hash

    def __repr__(self):
        a, b = self.span
        return f"ProjLine({a}, {b})"

    def meet(self, other: "ProjLine"):
        """Common point of two lines, or None when they are skew or equal."""
        common = self._set & other._set
        if len(common) == 1:
            return next(iter(common))
        return None


@dataclass(frozen=True, order=True)
class PlaneSpec:
    coeffs: tuple

    @property
    def dim(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class QuadraticForm:
    """``Q(x) = sum_{i<=j} upper[i][j] x_i x_j`` with field-index coefficients."""

    dim: int
    upper: tuple

    @classmethod
    def from_terms(cls, dim: int, terms: dict) -> "QuadraticForm":
        m = [[0] * (dim + 1) for _ in range(dim + 1)]
        for (i, j), c in terms.items():
            i, j = min(i, j), max(i, j)
            m[i][j] = c
        return cls(dim, tuple(tuple(r) for r in m))

    def terms(self):
        for i in range(self.dim + 1):
            for j in range(i, self.dim + 1):
                if self.upper[i][j]:
                    yield i, j, self.upper[i][j]


@dataclass(frozen=True)
class OvalSpec:
    ambient: PlaneSpec
    points: tuple
    nucleus: Point | None
    kind: str


class ProjectiveSpace:
    def __init__(self, d: int, f: FieldSpec):
        if d < 1:
            raise ValueError("dimension must be positive")
        self.d = d
        self.f = f
        self.q = f.q
        self._add = f.add_table.tolist()
        self._mul = f.mul_table.tolist()
        self._neg = f.neg_table.tolist()
        self._inv = f.inv_table.tolist()

    def __repr__(self):
        return f"PG({self.d},{self.q})"

    # -- vectors -----------------------------------------------------------
    def canonical(self, v: Sequence[int]) -> Point:
        for x in v:
            if x:
                if x == 1:
                    return tuple(v)
                s = self._inv[x]
                mul = self._mul[s]
                return tuple(mul[y] for y in v)
        raise ValueError("the zero vector is not a projective point")

    def lin(self, a: int, u: Sequence[int], b: int, v: Sequence[int]) -> list[int]:
        """The vector a*u + b*v."""
        add, ma, mb = self._add, self._mul[a], self._mul[b]
        return [add[ma[x]][mb[y]] for x, y in zip(u, v)]

    def dot(self, c: Sequence[int], x: Sequence[int]) -> int:
        add, mul = self._add, self._mul
        s = 0
        for a, b in zip(c, x):
            if a and b:
                s = add[s][mul[a][b]]
        return s

    # -- enumeration ---------------------------------------------------------
    @functools.cached_property
    def _points(self) -> tuple[Point, ...]:
        n = self.d + 1
        pts = []
        for lead in range(n):
            for tail in itertools.product(range(self.q), repeat=n - lead - 1):
                pts.append((0,) * lead + (1,) + tail)
        pts.sort()
        return tuple(pts)

    def points(self) -> list[Point]:
        return list(self._points)

    def point_array(self) -> np.ndarray:
        return np.array(self._points, dtype=np.int64)

    # -- lines and hyperplanes ---------------------------------------------
    def line_through(self, P: Point, Q: Point) -> ProjLine:
        if len(P) != len(Q):
            raise ValueError("points live in different spaces")
        P, Q = self.canonical(P), self.canonical(Q)
        if P == Q:
            raise IdenticalPoints(f"{P} twice")
        pts = [P]
        for a in range(self.q):
            pts.append(self.canonical(self.lin(a, P, 1, Q)))
        return ProjLine(pts)

    def on_plane(self, P: Point, pl: PlaneSpec) -> bool:
        return self.dot(pl.coeffs, P) == 0

    def plane(self, coeffs: Sequence[int]) -> PlaneSpec:
        return PlaneSpec(self.canonical(coeffs))

    def nullspace(self, rows: Sequence[Sequence[int]]) -> list[list[int]]:
        """Basis of {x : r.x = 0 for every row r}, in reduced form."""
        n = self.d + 1
        add, mul, neg, inv = self._add, self._mul, self._neg, self._inv
        m = [list(r) for r in rows]
        pivots = []
        r = 0
        for c in range(n):
            piv = next((i for i in range(r, len(m)) if m[i][c]), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            s = inv[m[r][c]]
            m[r] = [mul[s][x] for x in m[r]]
            for i in range(len(m)):
                if i != r and m[i][c]:
                    fac = neg[m[i][c]]
                    m[i] = [add[x][mul[fac][y]] for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == len(m):
                break
        free = [c for c in range(n) if c not in pivots]
        basis = []
        for fc in free:
            v = [0] * n
            v[fc] = 1
            for i, pc in enumerate(pivots):
                v[pc] = neg[m[i][fc]]
            basis.append(v)
        return basis

    def span_points(self, basis: Sequence[Sequence[int]]) -> list[Point]:
        """All points of the subspace spanned by the given vectors."""
        out = set()
        for coefs in itertools.product(range(self.q), repeat=len(basis)):
            if not any(coefs):
                continue
            v = [0] * (self.d + 1)
            for a, b in zip(coefs, basis):
                v = self.lin(1, v, a, b)
            if any(v):
                out.add(self.canonical(v))
        return sorted(out)

    def hyperplane_through(self, *pts: Point) -> PlaneSpec:
        """The unique hyperplane containing the given points."""
        basis = self.nullspace(pts)
        if len(basis) != 1:
            raise ValueError(f"points span a subspace of codimension {len(basis)}")
        return PlaneSpec(self.canonical(basis[0]))

    def hyperplanes_containing(self, *pts: Point) -> list[PlaneSpec]:
        return [PlaneSpec(c) for c in self.span_points(self.nullspace(pts))]

    def points_of_plane(self, pl: PlaneSpec) -> list[Point]:
        return self.span_points(self.nullspace([pl.coeffs]))

    def lines_of_plane(self, pl: PlaneSpec) -> list[ProjLine]:
        pts = self.points_of_plane(pl)
        return self._lines_among(pts)

    def lines_through_in(self, P: Point, pts: Iterable[Point]) -> list[ProjLine]:
        """Lines joining P to the other given points (deduplicated)."""
        seen = {}
        covered = {P}
        for R in pts:
            if R in covered:
                continue
            line = self.line_through(P, R)
            covered.update(line.points)
            seen[line] = None
        return sorted(seen)

    def _lines_among(self, pts: Sequence[Point]) -> list[ProjLine]:
        lines = set()
        for P in pts:
            lines.update(self.lines_through_in(P, pts))
        return sorted(lines)

    def meet_line_plane(self, line: ProjLine, pl: PlaneSpec):
        """The incidence point, or the string ``"contained"``."""
        P, Q = line.span
        vp, vq = self.dot(pl.coeffs, P), self.dot(pl.coeffs, Q)
        if vp == 0 and vq == 0:
            return "contained"
        return self.canonical(self.lin(vq, P, self._neg[vp], Q))

    def collinear(self, P: Point, Q: Point, R: Point) -> bool:
        return len(self.nullspace([P, Q, R])) > self.d - 2

    # -- quadrics ----------------------------------------------------------
    def quadric_values(self, Q: QuadraticForm, pts: np.ndarray) -> np.ndarray:
        add, mul = self.f.add_table, self.f.mul_table
        acc = np.zeros(len(pts), dtype=np.int64)
        for i, j, c in Q.terms():
            acc = add[acc, mul[c, mul[pts[:, i], pts[:, j]]]]
        return acc

    def polar_matrix(self, Q: QuadraticForm, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """``Q(a+b) - Q(a) - Q(b)`` for every pair of rows of A and B."""
        add, mul = self.f.add_table, self.f.mul_table
        two = self.f.add(1, 1)
        acc = np.zeros((len(A), len(B)), dtype=np.int64)
        for i, j, c in Q.terms():
            if i == j:
                if two == 0:
                    continue
                term = mul[mul[c, two], mul[A[:, i, None], B[None, :, i]]]
            else:
                cross = add[mul[A[:, i, None], B[None, :, j]], mul[A[:, j, None], B[None, :, i]]]
                term = mul[c, cross]
            acc = add[acc, term]
        return acc

    def quadric_points(self, Q: QuadraticForm, within: PlaneSpec | None = None) -> list[Point]:
        pts = self.point_array()
        keep = self.quadric_values(Q, pts) == 0
        if within is not None:
            keep &= self._dot_rows(within.coeffs, pts) == 0
        return [tuple(int(x) for x in row) for row in pts[keep]]

    def quadric_lines(self, Q: QuadraticForm, within: PlaneSpec | None = None) -> list[ProjLine]:
        pts = self.quadric_points(Q, within)
        arr = np.array(pts, dtype=np.int64).reshape(-1, self.d + 1)
        conj = self.polar_matrix(Q, arr, arr) == 0
        return self._isotropic_lines(pts, conj)

    def _dot_rows(self, c: Sequence[int], pts: np.ndarray) -> np.ndarray:
        add, mul = self.f.add_table, self.f.mul_table
        acc = np.zeros(len(pts), dtype=np.int64)
        for i, ci in enumerate(c):
            if ci:
                acc = add[acc, mul[ci, pts[:, i]]]
        return acc

    def _isotropic_lines(self, pts: Sequence[Point], conj: np.ndarray) -> list[ProjLine]:
        """Lines spanned by pairs of mutually conjugate points of ``pts``.

        ``conj`` must describe a relation under which a line through two
        conjugate members lies entirely inside ``pts`` (true for quadrics
        and for totally isotropic lines of a symplectic form).
        """
        lines = set()
        for i, P in enumerate(pts):
            partners = [pts[j] for j in np.flatnonzero(conj[i]) if j != i]
            lines.update(self.lines_through_in(P, partners))
        return sorted(lines)

    # -- symplectic polarity (d == 3) ----------------------------------------
    def symplectic_form(self, a: Sequence[int], b: Sequence[int]) -> int:
        """``a1 b0 - a0 b1 + a3 b2 - a2 b3``."""
        add, mul, neg = self._add, self._mul, self._neg
        s = add[mul[a[1]][b[0]]][neg[mul[a[0]][b[1]]]]
        s = add[s][mul[a[3]][b[2]]]
        return add[s][neg[mul[a[2]][b[3]]]]

    def symplectic_polar(self, A: Point) -> PlaneSpec:
        self._need(3)
        neg = self._neg
        return PlaneSpec(self.canonical((A[1], neg[A[0]], A[3], neg[A[2]])))

    def pole(self, pl: PlaneSpec) -> Point:
        self._need(3)
        c, neg = pl.coeffs, self._neg
        return self.canonical((c[1], neg[c[0]], c[3], neg[c[2]]))

    def is_self_conjugate(self, line: ProjLine) -> bool:
        self._need(3)
        return self.symplectic_form(*line.span) == 0

    def self_conjugate_lines(self) -> list[ProjLine]:
        self._need(3)
        pts = self.points()
        arr = np.array(pts, dtype=np.int64)
        add, mul, neg = self.f.add_table, self.f.mul_table, self.f.neg_table
        a, b = arr[:, None, :], arr[None, :, :]
        form = add[
            add[mul[a[..., 1], b[..., 0]], neg[mul[a[..., 0], b[..., 1]]]],
            add[mul[a[..., 3], b[..., 2]], neg[mul[a[..., 2], b[..., 3]]]],
        ]
        return self._isotropic_lines(pts, form == 0)

    # -- conics --------------------------------------------------------------
    def conic_with_nucleus(self, ambient: PlaneSpec) -> OvalSpec:
        """The conic ``y1^2 = y0 y2`` in the ambient plane.

        Plane coordinates come from the reduced nullspace basis
        ``(b0, b1, b2)`` of the plane's equation; for ``X0 = 0`` this is the
        standard basis and the points are ``(0:1:t:t^2)`` and ``(0:0:0:1)``.
        """
        self._need(3)
        b0, b1, b2 = self.nullspace([ambient.coeffs])
        pts = []
        for t in range(self.q):
            v = self.lin(1, b0, t, b1)
            v = self.lin(1, v, self._mul[t][t], b2)
            pts.append(self.canonical(v))
        pts.append(self.canonical(b2))
        nucleus = self.canonical(b1) if self.f.p == 2 else None
        return OvalSpec(ambient, tuple(pts), nucleus, "conic")

    def no_three_collinear(self, pts: Sequence[Point]):
        """Return a collinear triple, or None if the set is an arc."""
        for P, Q, R in itertools.combinations(pts, 3):
            if self.collinear(P, Q, R):
                return P, Q, R
        return None

    def tangent_lines(self, oval: OvalSpec, P: Point) -> list[ProjLine]:
        """Lines of the ambient plane through P meeting the oval only in P."""
        others = [R for R in self.points_of_plane(oval.ambient) if R != P]
        members = set(oval.points)
        return [l for l in self.lines_through_in(P, others) if len(members.intersection(l.points)) == 1]

    def _need(self, d: int):
        if self.d != d:
            raise ValueError(f"operation needs PG({d},q), got {self!r}")


# -- module-level conveniences ----------------------------------------------


@functools.lru_cache(maxsize=None)
def space(d: int, f: FieldSpec) -> ProjectiveSpace:
    return ProjectiveSpace(d, f)


def enumerate_points(d: int, f: FieldSpec) -> list[Point]:
    return space(d, f).points()


def line_through(P: Point, Q: Point, f: FieldSpec) -> ProjLine:
    return space(len(P) - 1, f).line_through(P, Q)


def meet_line_plane(line: ProjLine, pl: PlaneSpec, f: FieldSpec):
    return space(line.dim, f).meet_line_plane(line, pl)


def quadric_points(Q: QuadraticForm, f: FieldSpec, within: PlaneSpec | None = None) -> list[Point]:
    return space(Q.dim, f).quadric_points(Q, within)


def quadric_lines(Q: QuadraticForm, f: FieldSpec, within: PlaneSpec | None = None) -> list[ProjLine]:
    return space(Q.dim, f).quadric_lines(Q, within)


def symplectic_polar(A: Point, f: FieldSpec) -> PlaneSpec:
    return space(3, f).symplectic_polar(A)


def pole(pl: PlaneSpec, f: FieldSpec) -> Point:
    return space(3, f).pole(pl)


def is_self_conjugate(line: ProjLine, f: FieldSpec) -> bool:
    return space(3, f).is_self_conjugate(line)


def conic_with_nucleus(ambient: PlaneSpec, f: FieldSpec) -> OvalSpec:
    return space(3, f).conic_with_nucleus(ambient)


def affine(P: Point) -> tuple:
    """Cartesian coordinates of a point with nonzero first coordinate.

    Canonical points already have ``x0 == 1`` when affine, so the Cartesian
    coordinates are just the remaining entries.
    """
    if P[0] != 1:
        raise ValueError(f"{P} is a point at infinity")
    return P[1:]


def hyperbolic_rulings(lines: Sequence[ProjLine]) -> GridSpec:
    """Split the lines of a hyperbolic quadric into its two reguli.

    The ruling containing the first line (in canonical order) gives the rows.
    """
    lines = sorted(lines)
    if not lines:
        raise NotAGrid("no lines")
    first = lines[0]
    rows = [l for l in lines if l == first or not l._set & first._set]
    cols = [l for l in lines if l != first and l._set & first._set]
    if len(rows) + len(cols) != len(lines):
        raise NotAGrid("lines neither meet nor avoid the first line")
    for group in (rows, cols):
        for a, b in itertools.combinations(group, 2):
            if a.meet(b) is not None or a == b:
                raise NotAGrid(f"{a} and {b} lie in one class but intersect")
    cells = {}
    for i, r in enumerate(rows):
        for j, c in enumerate(cols):
            P = r.meet(c)
            if P is None:
                raise NotAGrid(f"{r} and {c} are in opposite classes but skew")
            cells[i, j] = P
    if len(set(cells.values())) != len(cells):
        raise NotAGrid("grid points are not distinct")
    return GridSpec(tuple(rows), tuple(cols), cells)


def hyperbolic_rulings_of(Q: QuadraticForm, hyperplane: PlaneSpec, f: FieldSpec) -> GridSpec:
    return hyperbolic_rulings(quadric_lines(Q, f, within=hyperplane))
