"""Gadgets that put regularity back after vertices are deleted.

All plans here are label-agnostic: endpoints may be lattice coordinates,
geometric points or vertex ids, and :meth:`MatchingPlan.resolve` maps them to
whatever the caller needs.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from .errors import GridNotSquare, KTooSmall, OddK, OddLineLength


@dataclass(frozen=True)
class OneFactorization:
    k: int
    factors: tuple  # factor r (0-based here) is a tuple of k/2 pairs on 1..k


@dataclass(frozen=True)
class GridSpec:
    rows: tuple
    cols: tuple
    cells: dict = field(hash=False)  # (i, j) -> point on rows[i] and cols[j]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def map(self, point: Callable, line: Callable) -> "GridSpec":
        return GridSpec(
            tuple(line(r) for r in self.rows),
            tuple(line(c) for c in self.cols),
            {ij: point(P) for ij, P in self.cells.items()},
        )


@dataclass(frozen=True)
class MatchingPlan:
    """New edges, each tagged with what mediates it (a deleted vertex or a gadget).

    ``kind`` is ``"matching"`` (endpoints pairwise disjoint) or ``"cycles"``
    (every endpoint used at most twice).
    """

    edges: tuple
    provenance: tuple
    kind: str = "matching"

    def __post_init__(self):
        if len(self.edges) != len(self.provenance):
            raise ValueError("one provenance entry per edge is required")
        cap = {"matching": 1, "cycles": 2}[self.kind]
        over = [v for v, c in self.support().items() if c > cap]
        if over:
            raise ValueError(f"{self.kind} plan uses {over[0]!r} more than {cap} time(s)")

    def __len__(self):
        return len(self.edges)

    def support(self) -> Counter:
        """How many plan edges touch each endpoint."""
        return Counter(v for e in self.edges for v in e)

    def resolve(self, fn: Callable[[Hashable], Hashable]) -> "MatchingPlan":
        return MatchingPlan(tuple((fn(u), fn(v)) for u, v in self.edges), self.provenance, self.kind)

    def __add__(self, other: "MatchingPlan") -> "MatchingPlan":
        kind = "cycles" if "cycles" in (self.kind, other.kind) else "matching"
        return MatchingPlan(self.edges + other.edges, self.provenance + other.provenance, kind)

    @classmethod
    def empty(cls) -> "MatchingPlan":
        return cls((), ())


def one_factorization(k: int) -> OneFactorization:
    """Round-robin (circle method) one-factorization of K_k on labels 1..k.

    Label k is the hub; the other labels are residues mod k-1 written as
    1..k-1.  Factor r pairs the hub with r and r+i with r-i.
    """
    if k < 2 or k % 2:
        raise OddK(f"one-factorizations of K_k need even k >= 2, got {k}")
    m = k - 1

    def lab(x):
        return (x - 1) % m + 1

    factors = []
    for r in range(1, k):
        pairs = [(r, k)]
        for i in range(1, k // 2):
            a, b = lab(r + i), lab(r - i)
            pairs.append((min(a, b), max(a, b)))
        factors.append(tuple(sorted(pairs)))
    ofz = OneFactorization(k, tuple(factors))
    _check_one_factorization(ofz)
    return ofz


def _check_one_factorization(ofz: OneFactorization):
    k = ofz.k
    seen = Counter()
    for F in ofz.factors:
        if sorted(v for p in F for v in p) != list(range(1, k + 1)):
            raise AssertionError(f"{F} is not a perfect matching of K_{k}")
        seen.update(F)
    if len(seen) != k * (k - 1) // 2 or any(c != 1 for c in seen.values()):
        raise AssertionError("pairs are not covered exactly once")


def rectangle_free_matching(k: int) -> MatchingPlan:
    """Perfect matching of the lattice {(i, j): 1 <= i <= k-1, 1 <= j <= k}.

    (i, j1) and (i, j2) are matched when {j1, j2} lies in the i-th one-factor,
    so every edge is vertical and no pair {j1, j2} recurs in two columns.
    """
    if k % 2:
        raise OddK(f"k must be even, got {k}")
    ofz = one_factorization(k)
    edges, prov = [], []
    for i, F in enumerate(ofz.factors, start=1):
        for a, b in F:
            edges.append(((i, a), (i, b)))
            prov.append(("factor", i))
    return MatchingPlan(tuple(edges), tuple(prov))


def _is_rectangle(pts) -> bool:
    a, b, c, d = pts
    for (p, r), (s, t) in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
        mid1 = tuple(x + y for x, y in zip(p, r))
        mid2 = tuple(x + y for x, y in zip(s, t))
        if mid1 == mid2:
            l1 = sum((x - y) ** 2 for x, y in zip(p, r))
            l2 = sum((x - y) ** 2 for x, y in zip(s, t))
            if l1 == l2:
                return True
    return False


def is_rectangle_free(plan: MatchingPlan | Iterable) -> bool:
    """True unless the four endpoints of some two edges are the corners of a
    rectangle (any orientation) in the plane."""
    edges = plan.edges if isinstance(plan, MatchingPlan) else tuple(plan)
    for e1, e2 in itertools.combinations(edges, 2):
        pts = (*e1, *e2)
        if len(set(pts)) == 4 and _is_rectangle(pts):
            return False
    return True


def grid_row_cycles(grid: GridSpec) -> MatchingPlan:
    """Join consecutive points of every row into a k-cycle."""
    a, b = grid.shape
    if a != b:
        raise GridNotSquare(f"grid is {a}x{b}")
    k = a
    if k < 7:
        raise KTooSmall(f"row cycles need k >= 7, got {k}")
    edges, prov = [], []
    for i in range(k):
        for j in range(k):
            edges.append((grid.cells[i, j], grid.cells[i, (j + 1) % k]))
            prov.append(("row", i))
    return MatchingPlan(tuple(edges), tuple(prov), kind="cycles")


def per_line_pairing(lines: Sequence[Sequence[Hashable]], tags: Sequence[Hashable] | None = None) -> MatchingPlan:
    """Pair entries 2r and 2r+1 of every list (one list per deleted line)."""
    edges, prov = [], []
    for idx, pts in enumerate(lines):
        if len(pts) % 2:
            raise OddLineLength(f"line {idx} carries {len(pts)} points")
        tag = tags[idx] if tags is not None else ("line", idx)
        for r in range(0, len(pts), 2):
            edges.append((pts[r], pts[r + 1]))
            prov.append(tag)
    return MatchingPlan(tuple(edges), tuple(prov))


def involution_pairing(items: Iterable[Hashable], partner: Callable, tag: Callable | None = None) -> MatchingPlan:
    """Pair every item with ``partner(item)``.

    ``partner`` must be a fixed-point-free involution on ``items``; each pair
    is listed once, from its smaller member.
    """
    items = list(items)
    members = set(items)
    edges, prov = [], []
    for x in items:
        y = partner(x)
        if y == x:
            raise ValueError(f"{x!r} is a fixed point")
        if y not in members or partner(y) != x:
            raise ValueError(f"partner is not an involution at {x!r}")
        if x < y:
            edges.append((x, y))
            prov.append(tag(x) if tag else None)
    return MatchingPlan(tuple(edges), tuple(prov))
