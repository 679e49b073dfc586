import itertools
from dataclasses import replace

import pytest

from girth7 import constructions as C
from girth7.errors import InvalidParams, KEqualsQUnsupported
from girth7.field import field_of_order
from girth7.incidence import degree_audit, is_deleteable, levi_graph
from girth7.projgeom import space
from girth7.verify import certify, girth, is_cycle, moore_bound


@pytest.mark.parametrize("q", [2, 3, 4])
def test_q4_and_w_counts(q):
    n = (q + 1) * (q * q + 1)
    for S in (C.build_Q4(q), C.build_W(q)):
        assert len(S.points) == len(S.lines) == n


@pytest.mark.parametrize("q", [7, 8])
def test_t2_slice(q):
    S = C.build_T2_slice(q)
    assert len(S.points) == len(S.lines) == q**3
    assert {len(l) for l in S.incidence} == {q}
    assert set(S.point_degrees()) == {q}
    assert girth(levi_graph(S)).length == 8


def test_arc_is_a_q_arc():
    for q in (7, 8, 9):
        sp = space(3, field_of_order(q))
        arc = C.arc_at_infinity(sp)
        assert len(arc) == q and sp.no_three_collinear(arc) is None


@pytest.mark.parametrize("k,q", [(4, 5), (6, 7)])
def test_s_even_k(k, q):
    prm = C.default_even_k_params(k)
    assert prm.q == q
    S = C.build_S_even_k(k, prm)
    assert len(S.points) == len(S.lines) == k * q * q
    sp = space(3, field_of_order(q))
    aff = C.affine_points(sp)
    for l in S.lines[:: max(1, len(S.lines) // 40)]:
        full = [P for P in l.points if P[0] == 1]
        for pl in prm.sigmas:
            assert sum(sp.on_plane(P, pl) for P in full) == 1
    assert len(aff) == q**3


def test_smallest_q_for_even_k():
    assert [C.smallest_prime_power_above(k) for k in (4, 6, 8, 10, 12)] == [5, 7, 9, 11, 13]


CASES = [
    ("thm-main-i", 7, None, 784, 8),
    ("thm-main-ii", 7, None, 672, 7),
    ("thm-main-ii", 8, None, 1008, 8),
    ("thm-rectfree", 3, None, 77, 4),
    ("thm-rectfree", 5, None, 307, 6),
    ("thm-even-k", None, 4, 195, 4),
    ("thm-even-k", None, 6, 581, 6),
    ("thm-wq-even", 4, None, 152, 5),
]


@pytest.mark.parametrize("name,q,k,order,degree", CASES)
def test_construction_certifies(built, name, q, k, order, degree):
    b = built(name, q, k)
    assert (b.graph.n, b.expected_order, b.expected_degree) == (order, order, degree)
    cert = certify(b)
    assert cert.girth == 7 and cert.k == degree
    assert cert.moore7 <= cert.n
    if b.below_moore8:
        assert cert.n < cert.moore8


def test_formulas_in_terms_of_k():
    for q in (7, 8, 9, 11):
        k = q + 1
        assert C.FORMULAS["thm-main-i"](q, None)[0] == 2 * k**3 - 4 * k**2 + 2 * k
        assert C.FORMULAS["thm-main-ii"](q, None)[0] == 2 * q**3 - 2 * q
    q = 9
    assert C.FORMULAS["thm-even-k"](q, q - 1)[0] == 2 * (q - 1) ** 3 + 4 * (q - 1) ** 2 + (q - 1) - 1 == 1287
    assert C.FORMULAS["thm-rectfree"](7, None)[0] == 793 < moore_bound(8, 8) == 800


def test_main_i_intermediate_audit(built):
    b = built("thm-main-i", 7)
    assert degree_audit(b.intermediate)[6] == 64  # grid points lose two lines
    assert len(b.deleted) == 16


def test_main_ii_witness(built):
    b = built("thm-main-ii", 7)
    w = b.witness
    assert len(w) == 7 and is_cycle(b.graph, w)
    assert b.graph.has_edge(w[0], w[1]) and not b.source.has_edge(b.graph.origin[w[0]], b.graph.origin[w[1]])
    types = [b.graph.type_name(v) for v in w]
    assert types == ["point", "point", "line", "point", "line", "point", "line"]


def test_even_k_witness_and_deleteable(built):
    b = built("thm-even-k", 7, 6)
    assert is_cycle(b.graph, b.witness)
    assert is_deleteable(b.source, b.deleted, 6).ok
    prm = b.params
    assert b.graph.labels[b.witness[0]] == prm.U1 and b.graph.labels[b.witness[1]] == prm.U2


def test_even_k_literal_pencil_collapses():
    # taking g in the pencil through C instead of D gives back the deleted line l
    prm = C.default_even_k_params(4)
    sp = space(3, field_of_order(prm.q))
    f1 = sp.line_through(prm.U1, prm.M1)
    f2 = sp.line_through(prm.U2, prm.M2)
    g = C._pencil_line(sp, f1, f2, prm.C)
    assert g == prm.ell
    assert f1.meet(g) == prm.U1 and f2.meet(g) == prm.U2


def test_even_k_other_seed():
    prm = C.default_even_k_params(4, seed=3)
    b = C.construct_thm_even_k(4, params=prm)
    assert certify(b).girth == 7
    assert is_cycle(b.graph, b.witness)


def test_even_k_named_choices():
    prm = C.default_even_k_params(6)
    names = prm.named_choices()
    assert {"C", "D", "M1", "M2", "U1", "U2", "Sigma1", "F1", "F2"} <= names.keys()
    assert "Sigma2" not in names  # q - k = 1


@pytest.mark.parametrize(
    "change,predicate",
    [
        (lambda p: {"D": p.C}, "C, D, M1, M2"),
        (lambda p: {"U2": p.U1}, "U1, U2"),
        (lambda p: {"removed": p.removed[:1]}, "F_1"),
        (lambda p: {"external": p.tangent}, "e is a line"),
    ],
)
def test_even_k_invalid_params(change, predicate):
    prm = C.default_even_k_params(4)
    bad = replace(prm, **change(prm))
    with pytest.raises(InvalidParams) as exc:
        C.build_S_even_k(4, bad)
    assert exc.value.predicate.startswith(predicate)


def test_even_k_sigma_through_u1_rejected():
    prm = C.default_even_k_params(4)
    sp = space(3, field_of_order(prm.q))
    hit = next(pl for pl in sp.hyperplanes_containing(*prm.external.span) if sp.on_plane(prm.U1, pl))
    with pytest.raises(InvalidParams) as exc:
        C.build_S_even_k(4, replace(prm, sigmas=(hit,)))
    assert "avoids" in exc.value.predicate


def test_even_k_parameter_errors():
    with pytest.raises(KEqualsQUnsupported):
        C.construct_thm_even_k(4, q=4)
    with pytest.raises(InvalidParams):
        C.construct_thm_even_k(5)
    with pytest.raises(InvalidParams):
        C.construct_thm_even_k(6, q=5)


def test_even_k_larger_q():
    b = C.construct_thm_even_k(4, q=7)
    assert b.graph.n == 2 * 4 * 49 - 7
    assert certify(b).girth == 7


@pytest.mark.parametrize(
    "name,q",
    [("thm-wq-even", 5), ("thm-wq-even", 2), ("thm-main-i", 5), ("thm-main-ii", 4), ("thm-rectfree", 4), ("thm-main-i", 10)],
)
def test_request_validation(name, q):
    with pytest.raises(InvalidParams):
        C.validate_request(name, q=q)


def test_wq_deleted_lines_are_horizontal(built):
    b = built("thm-wq-even", 8)
    lines = b.params.horizontal_lines
    assert len(lines) == (8 - 1) * 8
    for l in lines:
        zs = {P[3] for P in l.points if P[0] == 1}
        assert len(zs) == 1 and 0 not in zs
    assert len(b.deleted) == 8 * 8 + 2


@pytest.mark.parametrize("q", [4, 8, 16])
def test_six_cycle_exclusion_identity(q):
    # t/s + s/t = (s + t)^2 / (st) vanishes only for s = t in characteristic 2
    f = field_of_order(q)
    for s, t in itertools.permutations(range(1, q), 2):
        assert f.add(f.div(t, s), f.div(s, t)) != 0


def test_wq_pairings_are_fixed_point_free(built):
    b = built("thm-wq-even", 4)
    sup = b.plan.support()
    assert set(sup.values()) == {1}
    deficient = {v for v in range(b.intermediate.n) if b.intermediate.degree(v) < 5}
    assert deficient == set(sup)


def test_builds_are_deterministic():
    a = C.build("thm-rectfree", q=3)
    b = C.build("thm-rectfree", q=3)
    assert a.graph.same_adjacency(b.graph)
    assert a.witness == b.witness


def test_provenance_log(built):
    b = built("thm-main-i", 7)
    assert any("deleted 16 vertices" in line for line in b.provenance)
    assert b.plan.kind == "cycles"
