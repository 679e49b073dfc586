"""Incidence structures, their Levi graphs, and graph surgery."""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable, Iterable, NamedTuple, Sequence

import numpy as np

from .errors import DuplicateEdge, SurgeryError, UnknownVertex
from .matchings import MatchingPlan

POINT = 0
LINE = 1
TYPE_NAMES = ("point", "line")


class Check(NamedTuple):
    ok: bool
    witness: object = None


@dataclass(frozen=True)
class IncidenceStructure:
    points: tuple
    lines: tuple
    incidence: tuple  # per line, sorted point indices
    order: tuple | None = None  # claimed (s, t)

    def __post_init__(self):
        if len(self.incidence) != len(self.lines):
            raise ValueError("one incidence list per line is required")
        np_ = len(self.points)
        for li, pts in enumerate(self.incidence):
            if len(set(pts)) != len(pts):
                raise ValueError(f"line {self.lines[li]!r} repeats a point")
            if any(not 0 <= p < np_ for p in pts):
                raise ValueError(f"line {self.lines[li]!r} refers to an unknown point")
        if self.order is not None:
            s, t = self.order
            if any(len(pts) != s + 1 for pts in self.incidence):
                raise ValueError(f"some line does not have {s + 1} points")
            if any(d != t + 1 for d in self.point_degrees()):
                raise ValueError(f"some point is not on {t + 1} lines")

    @classmethod
    def from_lines(cls, points: Sequence[Hashable], lines: Sequence[Iterable[Hashable]], line_labels=None, order=None):
        """Build from lines given as collections of point labels.

        Points of a line that are not in ``points`` are ignored, which is how
        affine slices drop their points at infinity.
        """
        idx = {P: i for i, P in enumerate(points)}
        inc = tuple(tuple(sorted(idx[P] for P in l if P in idx)) for l in lines)
        labels = tuple(line_labels) if line_labels is not None else tuple(lines)
        return cls(tuple(points), labels, inc, order)

    def point_degrees(self) -> list[int]:
        deg = [0] * len(self.points)
        for pts in self.incidence:
            for p in pts:
                deg[p] += 1
        return deg

    def incidence_matrix(self) -> np.ndarray:
        N = np.zeros((len(self.points), len(self.lines)), dtype=np.int64)
        for li, pts in enumerate(self.incidence):
            N[list(pts), li] = 1
        return N


class LeviGraph:
    """Simple undirected graph whose vertices carry a point/line tag.

    Instances are never mutated; surgery returns new graphs.  ``origin[v]``
    is the id of ``v`` in the graph this one was derived from (identity for
    graphs built from scratch) and ``labels[v]`` is the geometric object
    behind ``v`` when known.
    """

    def __init__(self, adjacency: Sequence[Iterable[int]], vertex_type: Sequence[int], labels=None, origin=None):
        self.adjacency = tuple(tuple(sorted(a)) for a in adjacency)
        vt = np.asarray(vertex_type, dtype=np.int8)
        if vt.shape != (len(self.adjacency),):
            raise ValueError("one type tag per vertex is required")
        vt.flags.writeable = False
        self.vertex_type = vt
        self.labels = tuple(labels) if labels is not None else None
        self.origin = tuple(origin) if origin is not None else tuple(range(len(self.adjacency)))
        self._validate()

    def _validate(self):
        n = len(self.adjacency)
        for u, nb in enumerate(self.adjacency):
            if len(set(nb)) != len(nb):
                raise ValueError(f"parallel edges at vertex {u}")
            for w in nb:
                if w == u:
                    raise ValueError(f"loop at vertex {u}")
                if not 0 <= w < n:
                    raise UnknownVertex(w)
        # symmetry: compare the directed edge multiset with its reverse
        src = np.repeat(np.arange(n), [len(a) for a in self.adjacency])
        dst = np.fromiter((w for a in self.adjacency for w in a), dtype=np.int64, count=len(src))
        fwd = np.sort(src * n + dst)
        rev = np.sort(dst * n + src)
        if not np.array_equal(fwd, rev):
            raise ValueError("adjacency is not symmetric")

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @functools.cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def __len__(self):
        return self.n

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> np.ndarray:
        return np.array([len(a) for a in self.adjacency], dtype=np.int64)

    def neighbors(self, v: int) -> tuple:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    @functools.cached_property
    def _adjsets(self):
        return tuple(frozenset(a) for a in self.adjacency)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u, nb in enumerate(self.adjacency) for w in nb if u < w]

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        return self._csr

    @functools.cached_property
    def _csr(self):
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(a) for a in self.adjacency])
        indices = np.fromiter((w for a in self.adjacency for w in a), dtype=np.int64, count=int(indptr[-1]))
        indptr.flags.writeable = False
        indices.flags.writeable = False
        return indptr, indices

    def type_name(self, v: int) -> str:
        return TYPE_NAMES[self.vertex_type[v]]

    @functools.cached_property
    def _index(self) -> dict:
        if self.labels is None:
            return {}
        return {(int(t), lab): v for v, (t, lab) in enumerate(zip(self.vertex_type, self.labels))}

    def point_id(self, label) -> int:
        try:
            return self._index[POINT, label]
        except KeyError:
            raise UnknownVertex(f"no point vertex labelled {label!r}") from None

    def line_id(self, label) -> int:
        try:
            return self._index[LINE, label]
        except KeyError:
            raise UnknownVertex(f"no line vertex labelled {label!r}") from None

    def same_adjacency(self, other: "LeviGraph") -> bool:
        return self.adjacency == other.adjacency

    def __repr__(self):
        return f"LeviGraph(n={self.n}, m={self.m})"


def levi_graph(s: IncidenceStructure) -> LeviGraph:
    """Points get ids 0..P-1, lines get ids P..P+L-1."""
    np_ = len(s.points)
    adj = [[] for _ in range(np_ + len(s.lines))]
    for li, pts in enumerate(s.incidence):
        v = np_ + li
        adj[v] = list(pts)
        for p in pts:
            adj[p].append(v)
    vt = [POINT] * np_ + [LINE] * len(s.lines)
    return LeviGraph(adj, vt, labels=s.points + s.lines)


@dataclass
class AxiomReport:
    pairwise_points: bool
    line_size: bool
    point_degree: bool
    unique_transversal: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.pairwise_points and self.line_size and self.point_degree and self.unique_transversal


def check_gq_axioms(s: IncidenceStructure, s_ord: int, t_ord: int) -> AxiomReport:
    """Exhaustive check of the four generalized quadrangle axioms."""
    N = s.incidence_matrix()
    wit = {}

    common = N @ N.T
    np.fill_diagonal(common, 0)
    bad = np.argwhere(common > 1)
    pairwise = bad.size == 0
    if not pairwise:
        i, j = bad[0]
        wit["pairwise_points"] = (s.points[i], s.points[j])

    sizes = N.sum(axis=0)
    bad = np.flatnonzero(sizes != s_ord + 1)
    line_size = bad.size == 0
    if not line_size:
        wit["line_size"] = (s.lines[bad[0]], int(sizes[bad[0]]))

    degs = N.sum(axis=1)
    bad = np.flatnonzero(degs != t_ord + 1)
    point_degree = bad.size == 0
    if not point_degree:
        wit["point_degree"] = (s.points[bad[0]], int(degs[bad[0]]))

    # count[P, l] = number of lines through P meeting l
    meets = (N.T @ N > 0).astype(np.int64)
    count = N @ meets
    bad = np.argwhere((N == 0) & (count != 1))
    transversal = bad.size == 0
    if not transversal:
        i, j = bad[0]
        wit["unique_transversal"] = (s.points[i], s.lines[j], int(count[i, j]))

    return AxiomReport(pairwise, line_size, point_degree, transversal, wit)


def is_deleteable(g: LeviGraph, w: Iterable[int], t: int | None = None) -> Check:
    """Closure test for a vertex set W.

    A vertex with two or more neighbours in W is the meeting point of two
    W-lines (or the joining line of two W-points), so it must itself be in W
    together with all of its neighbours.  The witness is the first vertex
    where that fails.
    """
    members = set(w)
    for v in range(g.n):
        nb = g.adjacency[v]
        if sum(x in members for x in nb) < 2:
            continue
        if v not in members or any(x not in members for x in nb):
            return Check(False, v)
        if t is not None and len(nb) != t:
            return Check(False, v)
    return Check(True, None)


def delete_vertices(g: LeviGraph, w: Iterable[int]) -> LeviGraph:
    """Induced subgraph on the complement of w; ids are remapped in order."""
    gone = set(w)
    for v in gone:
        if not 0 <= v < g.n:
            raise UnknownVertex(v)
    keep = [v for v in range(g.n) if v not in gone]
    new_id = {v: i for i, v in enumerate(keep)}
    adj = [[new_id[x] for x in g.adjacency[v] if x in new_id] for v in keep]
    labels = [g.labels[v] for v in keep] if g.labels is not None else None
    return LeviGraph(adj, g.vertex_type[keep], labels=labels, origin=keep)


def add_edges(g: LeviGraph, plan: MatchingPlan) -> LeviGraph:
    """Graph with the plan's edges (given as vertex ids) added."""
    adj = [list(a) for a in g.adjacency]
    added = set()
    for u, v in plan.edges:
        for x in (u, v):
            if not isinstance(x, (int, np.integer)) or not 0 <= x < g.n:
                raise UnknownVertex(x)
        if u == v:
            raise DuplicateEdge(f"loop at {u}")
        key = (min(u, v), max(u, v))
        if key in added or g.has_edge(u, v):
            raise DuplicateEdge(f"edge {key} already present")
        added.add(key)
        adj[u].append(v)
        adj[v].append(u)
    return LeviGraph(adj, g.vertex_type, labels=g.labels, origin=range(g.n))


def degree_audit(g: LeviGraph) -> Counter:
    return Counter(int(d) for d in g.degrees())


def restore_regularity(g: LeviGraph, plan: MatchingPlan, k: int) -> LeviGraph:
    """Add ``plan`` after checking that it covers exactly the degree deficit.

    Every vertex must lack exactly as many edges (relative to k) as the plan
    supplies at it; anything else aborts the surgery.
    """
    support = plan.support()
    for v, d in enumerate(g.degrees()):
        need = k - int(d)
        if need != support.get(v, 0):
            raise SurgeryError(
                f"vertex {v} ({g.type_name(v)}) has degree {d}, plan adds {support.get(v, 0)}, target {k}"
            )
    return add_edges(g, plan)
