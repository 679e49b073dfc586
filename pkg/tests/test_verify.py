import json
import math
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from girth7.constructions import build_W
from girth7.errors import CertificationFailed
from girth7.incidence import LeviGraph, levi_graph
from girth7.verify import (
    Certificate,
    cage_gap_report,
    certify,
    certify_graph,
    format_report,
    girth,
    is_cycle,
    is_regular,
    moore_bound,
    reference_orders,
)

from conftest import from_nx, to_nx

BACKENDS = ["numba", "numpy"]


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize(
    "G,g",
    [
        (nx.petersen_graph(), 5),
        (nx.cycle_graph(7), 7),
        (nx.heawood_graph(), 6),
        (nx.complete_graph(4), 3),
        (nx.complete_bipartite_graph(3, 3), 4),
        (nx.path_graph(6), math.inf),
    ],
)
def test_known_girths(G, g, backend):
    res = girth(from_nx(G), backend=backend)
    assert res.length == g
    if g != math.inf:
        assert len(res.witness) == g and is_cycle(from_nx(G), res.witness)


def random_graph(seed, n=30, p=0.1):
    return from_nx(nx.gnp_random_graph(n, p, seed=seed))


@pytest.mark.parametrize("backend", BACKENDS)
def test_matches_networkx_random(backend):
    for seed in range(60):
        g = random_graph(seed, n=10 + seed % 25, p=0.08 + (seed % 5) * 0.03)
        res = girth(g, backend=backend)
        assert res.length == nx.girth(to_nx(g))
        if res.witness:
            assert is_cycle(g, res.witness) and len(res.witness) == res.length


def test_cutoff_agrees_with_exhaustive():
    for seed in range(50):
        g = random_graph(100 + seed, n=25, p=0.09)
        exact = girth(g).length
        for cutoff in (3, 4, 5, 6, 8):
            for backend in BACKENDS:
                res = girth(g, cutoff=cutoff, backend=backend)
                if exact <= cutoff:
                    assert res.length == exact and res.exact
                else:
                    assert res.length == cutoff + 1 and not res.exact


def test_backends_agree_on_witness():
    for seed in range(20):
        g = random_graph(200 + seed, n=40, p=0.07)
        a, b = girth(g, backend="numba"), girth(g, backend="numpy")
        assert a.length == b.length
        if a.witness:
            assert min(a.witness) == min(b.witness)  # smallest root on a shortest cycle


def test_parallel_matches_serial():
    for seed in range(10):
        g = random_graph(300 + seed, n=60, p=0.05)
        assert girth(g, threads=1) == girth(g, threads=2)


@given(st.integers(0, 10_000))
@settings(max_examples=25)
def test_girth_invariant_under_relabelling(seed):
    rng = random.Random(seed)
    G = nx.gnp_random_graph(20, 0.15, seed=seed)
    perm = list(range(20))
    rng.shuffle(perm)
    H = nx.relabel_nodes(G, dict(enumerate(perm)))
    H2 = nx.Graph()
    H2.add_nodes_from(range(20))
    H2.add_edges_from(H.edges())
    assert girth(from_nx(G)).length == girth(from_nx(H2)).length


def test_empty_graph():
    assert girth(LeviGraph([], [])).length == math.inf


def test_gq_levi_girth():
    assert girth(levi_graph(build_W(4))).length == 8


@pytest.mark.parametrize("k,g,val", [(8, 7, 457), (8, 8, 800), (3, 5, 10), (3, 6, 14), (3, 7, 22), (7, 7, 302), (4, 8, 80), (6, 8, 312)])
def test_moore_bound(k, g, val):
    assert moore_bound(k, g) == val


def test_moore_bound_closed_forms():
    for k in range(3, 15):
        assert moore_bound(k, 7) == k**3 - k**2 + k + 1
        assert moore_bound(k, 8) == 2 * ((k - 1) ** 3 + (k - 1) ** 2 + (k - 1) + 1)
    assert moore_bound(3, 5) == 10  # Petersen
    assert moore_bound(3, 6) == nx.heawood_graph().number_of_nodes()


def test_is_regular():
    g = levi_graph(build_W(3))
    assert is_regular(g, 4).ok
    chk = is_regular(g, 5)
    assert not chk.ok and chk.witness == list(range(g.n))


def test_reference_orders():
    assert reference_orders(7, 7) == {"luw": 686}
    assert reference_orders(8, 9) == {"luw": 2 * 729 - 2 * 81}
    assert reference_orders(8, 7) == {"abreu": 778}
    assert reference_orders(9, 8) == {"abreu": 1104}


def test_certify_failures():
    with pytest.raises(CertificationFailed) as exc:
        certify_graph(from_nx(nx.petersen_graph()), k=3, expect_girth=7)
    assert exc.value.claim == "girth"
    with pytest.raises(CertificationFailed) as exc:
        certify_graph(from_nx(nx.path_graph(4)))
    assert exc.value.claim == "regular"
    with pytest.raises(CertificationFailed) as exc:
        certify_graph(from_nx(nx.petersen_graph()), expect_order=11)
    assert exc.value.claim == "order"


def test_certificate_json(built):
    cert = certify(built("thm-rectfree", 3))
    obj = json.loads(cert.dumps())
    assert list(obj) == ["construction", "q", "k", "n", "girth", "witness", "moore7", "moore8", "references", "elapsed_ms"]
    assert (obj["n"], obj["k"], obj["girth"], obj["moore8"]) == (77, 4, 7, 80)
    back = Certificate.from_json(obj)
    assert (back.n, back.girth, back.witness) == (cert.n, cert.girth, cert.witness)


def test_cage_gap_report(built):
    rep = cage_gap_report(certify(built("thm-main-ii", 7)))
    row = rep["comparisons"][0]
    assert (row["source"], row["order"], row["verdict"]) == ("luw", 686, "smaller")
    assert rep["ratio_to_moore7"] == pytest.approx(672 / 302)
    rep = cage_gap_report(certify(built("thm-main-i", 7)))
    assert rep["comparisons"][0]["verdict"] == "larger" and rep["comparisons"][0]["difference"] == 6
    rep = cage_gap_report(certify(built("thm-wq-even", 8)))
    assert rep["comparisons"][0]["verdict"] == "equal"
    assert "abreu" in format_report(rep)
