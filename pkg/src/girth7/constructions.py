"""Geometric incidence structures and the (k,7)-graph builders.

Every builder starts from the Levi graph of a generalized quadrangle (or of
a regular induced substructure of one), deletes a geometrically chosen
vertex set, and adds new edges between the vertices that lost a neighbour.
Expected order and degree come from closed formulas kept in
:data:`FORMULAS`, independent of the build itself.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field, replace

from . import incidence as inc
from .errors import InvalidParams, KEqualsQUnsupported
from .field import FieldSpec, field_of_order, is_prime_power, prime_power
from .incidence import IncidenceStructure, LeviGraph, POINT, LINE
from .matchings import (
    GridSpec,
    MatchingPlan,
    grid_row_cycles,
    involution_pairing,
    per_line_pairing,
    rectangle_free_matching,
)
from .projgeom import PlaneSpec, ProjLine, ProjectiveSpace, QuadraticForm, hyperbolic_rulings, space

log = logging.getLogger(__name__)

SIGMA_INF = PlaneSpec((1, 0, 0, 0))

FORMULAS = {
    "thm-main-i": lambda q, k: (2 * q**3 + 2 * q**2, q + 1),
    "thm-main-ii": lambda q, k: (2 * q**3 - 2 * q, q),
    "thm-rectfree": lambda q, k: (2 * q**3 + 2 * q**2 + q + 2, q + 1),
    "thm-even-k": lambda q, k: (2 * k * q**2 - q, k),
    "thm-wq-even": lambda q, k: (2 * q**3 + q**2 + 2 * q, q + 1),
}

# constructions whose girth-7 argument compares the order with M(k, 8)
BELOW_MOORE8 = {"thm-main-i", "thm-rectfree", "thm-wq-even"}


@dataclass
class BuiltGraph:
    graph: LeviGraph
    construction: str
    q: int
    expected_order: int
    expected_degree: int
    provenance: list = field(default_factory=list)
    witness: tuple | None = None
    intermediate: LeviGraph | None = None  # after deletion, before new edges
    source: LeviGraph | None = None  # before deletion; ``deleted`` indexes it
    plan: MatchingPlan | None = None
    deleted: tuple = ()
    structure: IncidenceStructure | None = None
    params: object = None

    @property
    def k(self) -> int:
        return self.expected_degree

    @property
    def below_moore8(self) -> bool:
        return self.construction in BELOW_MOORE8


# -- incidence structures ---------------------------------------------------


def _field(q: int) -> FieldSpec:
    if not is_prime_power(q):
        raise InvalidParams("q is a prime power", f"q = {q}")
    return field_of_order(q)


def parabolic_form() -> QuadraticForm:
    """X0^2 + X1 X2 + X3 X4 on PG(4, q)."""
    return QuadraticForm.from_terms(4, {(0, 0): 1, (1, 2): 1, (3, 4): 1})


def build_Q4(q: int) -> IncidenceStructure:
    """Points and lines of the parabolic quadric of PG(4, q)."""
    sp = space(4, _field(q))
    Q = parabolic_form()
    pts = sp.quadric_points(Q)
    lines = sp.quadric_lines(Q)
    return IncidenceStructure.from_lines(pts, lines, order=(q, q))


def build_W(q: int) -> IncidenceStructure:
    """All points of PG(3, q) with the lines that are totally isotropic for
    the alternating form ``a1 b0 - a0 b1 + a3 b2 - a2 b3``."""
    sp = space(3, _field(q))
    return IncidenceStructure.from_lines(sp.points(), sp.self_conjugate_lines(), order=(q, q))


def affine_points(sp: ProjectiveSpace) -> list:
    return [P for P in sp.points() if P[0] == 1]


def _parallel_lines(sp: ProjectiveSpace, direction, affine_pts) -> list[ProjLine]:
    """The q^2 affine lines through a point at infinity."""
    covered = set()
    lines = []
    for P in affine_pts:
        if P in covered:
            continue
        l = sp.line_through(P, direction)
        covered.update(l.points)
        lines.append(l)
    return lines


def arc_at_infinity(sp: ProjectiveSpace) -> list:
    """The q-arc {(0:1:t:t^2)}: the standard conic of X0 = 0 minus (0:0:0:1).

    For odd q it completes to an oval by adding (0:0:0:1); for even q adding
    also the nucleus (0:0:1:0) gives a hyperoval.
    """
    conic = sp.conic_with_nucleus(SIGMA_INF)
    return sorted(P for P in conic.points if P != (0, 0, 0, 1))


def build_T2_slice(q: int) -> IncidenceStructure:
    """Affine points of AG(3, q) and the affine lines whose point at infinity
    lies on :func:`arc_at_infinity`.  q-regular on both sides."""
    sp = space(3, _field(q))
    pts = affine_points(sp)
    lines = []
    for d in arc_at_infinity(sp):
        lines.extend(_parallel_lines(sp, d, pts))
    return IncidenceStructure.from_lines(pts, sorted(lines), order=(q - 1, q - 1))


# -- surgery helpers ----------------------------------------------------------


def _resolver(g: LeviGraph):
    def fn(x):
        kind, label = x
        return g.point_id(label) if kind == POINT else g.line_id(label)

    return fn


def _surgery(name, q, G, W, plan, k, log_lines, **extra) -> BuiltGraph:
    order, degree = FORMULAS[name](q, k)
    Gp = inc.delete_vertices(G, W)
    log_lines.append(f"deleted {len(W)} vertices: order {G.n} -> {Gp.n}")
    audit = inc.degree_audit(Gp)
    log_lines.append(f"degree audit after deletion: {dict(sorted(audit.items()))}")
    resolved = plan.resolve(_resolver(Gp))
    Gamma = inc.restore_regularity(Gp, resolved, degree)
    log_lines.append(f"added {len(resolved)} edges ({resolved.kind}): order {Gamma.n}, m = {Gamma.m}")
    if Gamma.n != order:
        raise AssertionError(f"{name}: built order {Gamma.n} differs from formula {order}")
    log.info("%s q=%d: n=%d k=%d", name, q, Gamma.n, degree)
    return BuiltGraph(Gamma, name, q, order, degree, log_lines, intermediate=Gp, source=G, plan=resolved, deleted=tuple(sorted(W)), **extra)


def _affine_grid(rows, cols, keep) -> GridSpec:
    cells = {}
    for i, r in enumerate(rows):
        rs = set(r.points) & keep
        for j, c in enumerate(cols):
            common = rs.intersection(c.points)
            if len(common) != 1:
                raise InvalidParams("grid lines meet in one point", f"{r} and {c} share {len(common)}")
            cells[i, j] = common.pop()
    return GridSpec(tuple(rows), tuple(cols), cells)


def _hyperbolic_grid(S: IncidenceStructure) -> GridSpec:
    in_sigma = [l for l in S.lines if all(P[0] == 0 for P in l.points)]
    return hyperbolic_rulings(in_sigma)


# -- the five constructions ---------------------------------------------------


def construct_thm_main_i(q: int) -> BuiltGraph:
    """(q+1)-regular, order 2q^3 + 2q^2.

    Deletes the 2(q+1) lines of the hyperbolic quadric cut out of the
    parabolic quadric by X0 = 0, then closes each regulus row of grid points
    into a (q+1)-cycle.
    """
    validate_request("thm-main-i", q=q)
    S = build_Q4(q)
    G = inc.levi_graph(S)
    grid = _hyperbolic_grid(S)
    logs = [f"Q(4,{q}): {len(S.points)} points, {len(S.lines)} lines", f"grid {grid.shape[0]}x{grid.shape[1]} in X0=0"]
    W = [G.line_id(l) for l in grid.rows + grid.cols]
    plan = grid_row_cycles(grid.map(lambda P: (POINT, P), lambda l: l))
    return _surgery("thm-main-i", q, G, W, plan, q + 1, logs, structure=S)


@dataclass(frozen=True)
class MainIIChoices:
    A: tuple
    B: tuple
    plane: PlaneSpec
    C: tuple
    D: tuple
    E: tuple


def construct_thm_main_ii(q: int) -> BuiltGraph:
    """q-regular, order 2q^3 - 2q.

    In the affine slice over a q-arc, the 2q lines lying in an affine plane
    through a secant AB form a q x q grid; they are deleted and the rows
    (lines through A) are closed into q-cycles.  A 7-cycle through the new
    edge U1U2 is built from three further arc points C, D, E.
    """
    validate_request("thm-main-ii", q=q)
    f = _field(q)
    sp = space(3, f)
    arc = arc_at_infinity(sp)
    S = build_T2_slice(q)
    G = inc.levi_graph(S)
    A, B = arc[0], arc[1]
    planes = [pl for pl in sp.hyperplanes_containing(A, B) if pl != SIGMA_INF]
    Pi = planes[0]
    keep = set(S.points)
    in_pi = [l for l in S.lines if sp.on_plane(next(P for P in l.points if P[0] == 1), Pi) and (A in l or B in l)]
    rows = sorted(l for l in in_pi if A in l)
    cols = sorted(l for l in in_pi if B in l)
    grid = _affine_grid(rows, cols, keep)
    logs = [f"affine slice over a {q}-arc: {len(S.points)} points, {len(S.lines)} lines", f"grid {len(rows)}x{len(cols)} in plane {Pi.coeffs}"]
    W = [G.line_id(l) for l in rows + cols]
    plan = grid_row_cycles(grid.map(lambda P: (POINT, P), lambda l: l))

    C, D, E = arc[2], arc[3], arc[4]
    built = _surgery("thm-main-ii", q, G, W, plan, q, logs, structure=S, params=MainIIChoices(A, B, Pi, C, D, E))
    built.witness = main_ii_witness(built, grid, sp)
    return built


def main_ii_witness(built: BuiltGraph, grid: GridSpec, sp: ProjectiveSpace) -> tuple:
    """Vertex ids of u1 u2 v3 u4 v5 u6 v7."""
    ch = built.params
    U1, U2 = grid.cells[0, 0], grid.cells[0, 1]
    plane = sp.hyperplane_through(U1, ch.C, ch.E)
    v3 = sp.line_through(U2, ch.D)
    U4 = sp.meet_line_plane(v3, plane)
    v5 = sp.line_through(U4, ch.E)
    v7 = sp.line_through(U1, ch.C)
    U6 = v7.meet(v5)
    g = built.graph
    return (g.point_id(U1), g.point_id(U2), g.line_id(v3), g.point_id(U4), g.line_id(v5), g.point_id(U6), g.line_id(v7))


def construct_thm_rectfree(q: int) -> BuiltGraph:
    """(q+1)-regular, order 2q^3 + 2q^2 + q + 2, for odd q >= 3.

    Keeps one line l of the hyperbolic quadric and deletes the other q lines
    of its regulus; the points on each deleted line are paired by a
    one-factor of K_{q+1} on the row indices, a different factor per line.
    """
    validate_request("thm-rectfree", q=q)
    S = build_Q4(q)
    G = inc.levi_graph(S)
    grid = _hyperbolic_grid(S)
    k = q + 1
    ell, deleted = grid.cols[0], grid.cols[1:]
    logs = [f"Q(4,{q}): {len(S.points)} points, {len(S.lines)} lines", f"kept line {ell}, deleting {len(deleted)} lines of its regulus"]
    W = [G.line_id(l) for l in deleted]
    lattice = rectangle_free_matching(k)
    # lattice (i, j): i = deleted line f_i, j = row e_j
    plan = lattice.resolve(lambda ij: (POINT, grid.cells[ij[1] - 1, ij[0]]))
    return _surgery("thm-rectfree", q, G, W, plan, k, logs, structure=S)


@dataclass(frozen=True)
class ConstructionParams:
    """Named geometric choices for the even-degree construction.

    ``seed`` selects among the admissible (D, M1, M2) triples.
    """

    k: int
    q: int
    C: tuple
    D: tuple
    M1: tuple
    M2: tuple
    tangent: ProjLine
    external: ProjLine
    plane: PlaneSpec  # affine plane whose line at infinity is the tangent
    ell: ProjLine
    U1: tuple
    U2: tuple
    sigmas: tuple  # q - k affine planes through the external line
    removed: tuple  # q + 1 - k oval points F_j
    seed: int = 0

    def named_choices(self) -> dict:
        names = ("C", "D", "M1", "M2", "tangent", "external", "plane", "ell", "U1", "U2")
        out = {n: getattr(self, n) for n in names}
        out.update({f"Sigma{j}": pl for j, pl in enumerate(self.sigmas, 1)})
        out.update({f"F{j}": P for j, P in enumerate(self.removed, 1)})
        return out


def smallest_prime_power_above(k: int) -> int:
    q = k + 1
    while not is_prime_power(q):
        q += 1
    return q


def _pencil_line(sp: ProjectiveSpace, f1: ProjLine, f2: ProjLine, X) -> ProjLine | None:
    """Common line of the planes <f1, X> and <f2, X> (None if they coincide)."""
    p1 = sp.hyperplane_through(*f1.span, X)
    p2 = sp.hyperplane_through(*f2.span, X)
    if p1 == p2:
        return None
    basis = sp.nullspace([p1.coeffs, p2.coeffs])
    return sp.line_through(sp.canonical(basis[0]), sp.canonical(basis[1]))


def even_k_cycle_points(sp: ProjectiveSpace, prm: ConstructionParams):
    """f1, f2, g, R1, R2 for the 7-cycle (U1, U2, f2, R2, g, R1, f1).

    g is taken in the pencil of planes through D: the planes <f_i, C> both
    contain the line U1U2 = l, so their intersection is l itself.
    """
    f1 = sp.line_through(prm.U1, prm.M1)
    f2 = sp.line_through(prm.U2, prm.M2)
    g = _pencil_line(sp, f1, f2, prm.D)
    if g is None:
        return None
    return f1, f2, g, f1.meet(g), f2.meet(g)


def default_even_k_params(k: int, q: int | None = None, seed: int = 0) -> ConstructionParams:
    """Deterministic choices: first qualifying objects in canonical order.

    ``seed`` skips that many valid (D, M1, M2) triples, for experiments.
    """
    validate_request("thm-even-k", k=k, q=q)
    q = q or smallest_prime_power_above(k)
    f = _field(q)
    sp = space(3, f)
    oval = sp.conic_with_nucleus(SIGMA_INF)
    O = sorted(oval.points)
    N = oval.nucleus
    C = O[0]
    tangent = sp.tangent_lines(oval, C)[0]
    external = next(
        l for l in sp.lines_of_plane(SIGMA_INF)
        if not set(l.points) & set(O) and (N is None or N not in l)
    )
    plane = next(pl for pl in sp.hyperplanes_containing(*tangent.span) if pl != SIGMA_INF)
    pi_affine = [P for P in sp.points_of_plane(plane) if P[0] == 1]
    ell = sorted(_parallel_lines(sp, C, pi_affine))[0]
    U1, U2 = [P for P in ell.points if P[0] == 1][:2]
    sigma_pool = [pl for pl in sp.hyperplanes_containing(*external.span) if pl != SIGMA_INF]

    skip = seed
    for D, M1, M2 in itertools.permutations(O[1:], 3):
        trial = ConstructionParams(k, q, C, D, M1, M2, tangent, external, plane, ell, U1, U2, (), ())
        pts = even_k_cycle_points(sp, trial)
        if pts is None:
            continue
        _, _, _, R1, R2 = pts
        cyc = {U1, U2, R1, R2}
        if R1 is None or R2 is None or len(cyc) != 4 or R1[0] != 1 or R2[0] != 1:
            continue
        if skip:
            skip -= 1
            continue
        sigmas = tuple(pl for pl in sigma_pool if not any(sp.on_plane(P, pl) for P in cyc))[: q - k]
        removed = tuple(P for P in O if P not in (C, D, M1, M2))[: q + 1 - k]
        prm = replace(trial, sigmas=sigmas, removed=removed, seed=seed)
        validate_even_k_params(sp, prm)
        return prm
    raise InvalidParams("witness cycle exists", f"no choice of D, M1, M2 works for k={k}, q={q}")


def validate_even_k_params(sp: ProjectiveSpace, prm: ConstructionParams):
    """Raise :class:`InvalidParams` naming the first violated predicate."""
    k, q = prm.k, prm.q
    oval = sp.conic_with_nucleus(SIGMA_INF)
    O = set(oval.points)
    N = oval.nucleus
    named = (prm.C, prm.D, prm.M1, prm.M2)
    if len(set(named)) != 4 or not set(named) <= O:
        raise InvalidParams("C, D, M1, M2 are distinct oval points")
    if set(prm.external.points) & O or (N is not None and N in prm.external) or not all(P[0] == 0 for P in prm.external):
        raise InvalidParams("e is a line at infinity external to the oval" + (" avoiding the nucleus" if N else ""))
    if prm.C not in prm.tangent or len(set(prm.tangent.points) & O) != 1 or not all(P[0] == 0 for P in prm.tangent):
        raise InvalidParams("c is the tangent to the oval at C")
    if prm.plane == SIGMA_INF or not all(sp.on_plane(P, prm.plane) for P in prm.tangent.span):
        raise InvalidParams("Pi is an affine plane with line at infinity c")
    if prm.C not in prm.ell or not all(sp.on_plane(P, prm.plane) for P in prm.ell.span):
        raise InvalidParams("l is a line through C inside Pi")
    if prm.U1 == prm.U2 or not {prm.U1, prm.U2} <= set(prm.ell.points) or prm.U1[0] != 1 or prm.U2[0] != 1:
        raise InvalidParams("U1, U2 are distinct affine points of l")
    pts = even_k_cycle_points(sp, prm)
    if pts is None or pts[3] is None or pts[4] is None:
        raise InvalidParams("f1, f2 are skew and meet g")
    avoid = {prm.U1, prm.U2, pts[3], pts[4]}
    if len(prm.sigmas) != q - k or len(set(prm.sigmas)) != q - k:
        raise InvalidParams("there are q-k distinct planes Sigma_j", f"got {len(prm.sigmas)}")
    for pl in prm.sigmas:
        if pl == SIGMA_INF or not all(sp.on_plane(P, pl) for P in prm.external.span):
            raise InvalidParams("Sigma_j is an affine plane with line at infinity e", str(pl.coeffs))
        if any(sp.on_plane(P, pl) for P in avoid):
            raise InvalidParams("Sigma_j avoids U1, U2, R1, R2", str(pl.coeffs))
    if len(set(prm.removed)) != q + 1 - k or not set(prm.removed) <= O - set(named):
        raise InvalidParams("F_1..F_{q+1-k} are distinct oval points other than C, D, M1, M2")


def build_S_even_k(k: int, params: ConstructionParams) -> IncidenceStructure:
    """k q^2 affine points off the planes Sigma_j, and the affine lines with
    point at infinity on the oval minus the removed points F_j."""
    q = params.q
    if params.k != k:
        raise InvalidParams("parameters were chosen for this k", f"k = {k}, params.k = {params.k}")
    sp = space(3, _field(q))
    validate_even_k_params(sp, params)
    all_aff = affine_points(sp)
    pts = [P for P in all_aff if not any(sp.on_plane(P, pl) for pl in params.sigmas)]
    oval = sp.conic_with_nucleus(SIGMA_INF)
    dirs = sorted(P for P in oval.points if P not in params.removed)
    lines = []
    for d in dirs:
        lines.extend(_parallel_lines(sp, d, all_aff))
    S = IncidenceStructure.from_lines(pts, sorted(lines), order=(k - 1, k - 1))
    if len(S.points) != k * q * q or len(S.lines) != k * q * q:
        raise AssertionError("point or line count differs from k q^2")
    return S


def construct_thm_even_k(k: int, q: int | None = None, params: ConstructionParams | None = None) -> BuiltGraph:
    """k-regular, order 2kq^2 - q, for even k >= 4 and a prime power q > k.

    The q lines of the structure inside an affine plane through the tangent
    at C form a parallel class; they are deleted and the k surviving points
    on each are paired, with U1U2 one of the pairs.
    """
    validate_request("thm-even-k", k=k, q=q)
    prm = params or default_even_k_params(k, q)
    q = prm.q
    sp = space(3, _field(q))
    S = build_S_even_k(k, prm)
    G = inc.levi_graph(S)
    W = [G.line_id(l) for l in S.lines if prm.C in l and sp.on_plane(next(P for P in l.points if P[0] == 1), prm.plane)]
    if len(W) != q:
        raise AssertionError(f"expected {q} lines in Pi, found {len(W)}")
    check = inc.is_deleteable(G, W, k)
    if not check.ok:
        raise AssertionError(f"deleted set is not closed at vertex {check.witness}")
    logs = [
        f"structure: {len(S.points)} points, {len(S.lines)} lines, k={k}, q={q}",
        f"deleting the parallel class of {len(W)} lines in plane {prm.plane.coeffs}",
    ]
    keep = set(S.points)
    groups, tags = [], []
    for v in W:
        line = G.labels[v]
        pts = sorted(P for P in line.points if P in keep)
        if line == prm.ell:
            pts = [prm.U1, prm.U2] + [P for P in pts if P not in (prm.U1, prm.U2)]
        groups.append([(POINT, P) for P in pts])
        tags.append(("deleted line", line))
    plan = per_line_pairing(groups, tags)
    built = _surgery("thm-even-k", q, G, W, plan, k, logs, structure=S, params=prm)
    f1, f2, g, R1, R2 = even_k_cycle_points(sp, prm)
    Gam = built.graph
    built.witness = (
        Gam.point_id(prm.U1), Gam.point_id(prm.U2), Gam.line_id(f2), Gam.point_id(R2),
        Gam.line_id(g), Gam.point_id(R1), Gam.line_id(f1),
    )
    return built


@dataclass(frozen=True)
class WqChoices:
    deleted_line: ProjLine
    horizontal_lines: tuple  # deleted affine lines


def construct_thm_wq_even(q: int) -> BuiltGraph:
    """(q+1)-regular, order 2q^3 + q^2 + 2q, for even q >= 4, from the
    symplectic quadrangle.

    Deletes the line X0 = X3 = 0, its points, and every other isotropic line
    through (0:1:t:0), t != 0.  Lines through (0:1:0:0) are paired t <-> t+1,
    likewise lines through (0:0:1:0), and affine points on the deleted line
    Y = tX + k, Z = 1/t are paired by (X, Y) -> (X + 1, Y + t).
    """
    validate_request("thm-wq-even", q=q)
    f = _field(q)
    sp = space(3, f)
    add, inv = f.add_table, f.inv_table
    S = build_W(q)
    G = inc.levi_graph(S)
    E1, E2 = (0, 1, 0, 0), (0, 0, 1, 0)
    L0 = sp.line_through(E1, E2)
    through = {}
    for t in range(1, q):
        A = (0, 1, t, 0)
        through[t] = [l for l in S.lines if A in l and l != L0]
    W = [G.line_id(L0)] + [G.point_id(P) for P in L0.points]
    W += [G.line_id(l) for t in through for l in through[t]]
    check = inc.is_deleteable(G, W, q + 1)
    if not check.ok:
        raise AssertionError(f"deleted set is not closed at vertex {check.witness}")
    logs = [f"W({q}): {len(S.points)} points, {len(S.lines)} lines", f"deleted set has {len(W)} vertices"]

    line_inf = {t: sp.line_through(E1, (0, 0, t, 1)) for t in range(q)}
    line_e2 = {t: sp.line_through(E2, (1, t, 0, 0)) for t in range(q)}
    plan = involution_pairing(range(q), lambda t: int(add[t, 1]), lambda t: ("via", E1)).resolve(
        lambda t: (LINE, line_inf[t]))
    plan = plan + involution_pairing(range(q), lambda t: int(add[t, 1]), lambda t: ("via", E2)).resolve(
        lambda t: (LINE, line_e2[t]))

    def partner(P):
        _, x, y, z = P
        return (1, int(add[x, 1]), int(add[y, inv[z]]), z)

    affine = sorted(P for t in through for l in through[t] for P in l.points if P[0] == 1)
    pair = involution_pairing(affine, partner, lambda P: ("via", "deleted line", P[3]))
    plan = plan + pair.resolve(lambda P: (POINT, P))
    built = _surgery("thm-wq-even", q, G, W, plan, q + 1, logs, structure=S,
                     params=WqChoices(L0, tuple(l for t in through for l in through[t])))
    return built


# -- request validation ---------------------------------------------------------

CONSTRUCTIONS = {
    "thm-main-i": construct_thm_main_i,
    "thm-main-ii": construct_thm_main_ii,
    "thm-rectfree": construct_thm_rectfree,
    "thm-even-k": construct_thm_even_k,
    "thm-wq-even": construct_thm_wq_even,
}


def validate_request(name: str, q: int | None = None, k: int | None = None):
    """Parameter compatibility, checked before any geometry is computed."""
    if name not in CONSTRUCTIONS:
        raise InvalidParams("known construction", name)
    if name == "thm-even-k":
        if k is None or k < 4 or k % 2:
            raise InvalidParams("k is an even integer >= 4", f"k = {k}")
        if q is not None:
            if not is_prime_power(q):
                raise InvalidParams("q is a prime power", f"q = {q}")
            if q == k:
                raise KEqualsQUnsupported(f"k = q = {q} leaves no room for the removed planes")
            if q < k:
                raise InvalidParams("k <= q", f"k = {k}, q = {q}")
        return
    if q is None or not is_prime_power(q):
        raise InvalidParams("q is a prime power", f"q = {q}")
    p, _ = prime_power(q)
    if name in ("thm-main-i", "thm-main-ii") and q < 7:
        raise InvalidParams("q >= 7", f"q = {q}")
    if name == "thm-rectfree" and (p == 2 or q < 3):
        raise InvalidParams("q is an odd prime power >= 3", f"q = {q}")
    if name == "thm-wq-even" and (p != 2 or q < 4):
        raise InvalidParams("q is an even prime power >= 4", f"q = {q}")


def build(name: str, q: int | None = None, k: int | None = None) -> BuiltGraph:
    validate_request(name, q=q, k=k)
    if name == "thm-even-k":
        return construct_thm_even_k(k, q)
    return CONSTRUCTIONS[name](q)
