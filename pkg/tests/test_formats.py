import networkx as nx
import pytest
from hypothesis import given, strategies as st

from girth7.errors import MalformedInput
from girth7.formats import FORMATS, export, from_graph6, guess_format, import_graph, to_graph6
from girth7.incidence import LeviGraph

from conftest import from_nx


def triangle():
    return LeviGraph([[1, 2], [0, 2], [0, 1]], [0, 0, 0])


def test_triangle_graph6():
    assert to_graph6(triangle()) == b"Bw\n"
    assert from_graph6(b"Bw").same_adjacency(triangle())
    assert from_graph6(b">>graph6<<Bw\n").same_adjacency(triangle())


@pytest.mark.parametrize("n", [1, 2, 5, 62, 63, 64, 100, 300])
def test_graph6_matches_networkx(n):
    G = nx.gnp_random_graph(n, 0.1, seed=n)
    g = from_nx(G)
    data = to_graph6(g)
    assert data == nx.to_graph6_bytes(G, header=False)
    assert from_graph6(data).same_adjacency(g)


@given(st.integers(1, 40), st.floats(0, 1), st.integers(0, 1000))
def test_roundtrip_random(n, p, seed):
    g = from_nx(nx.gnp_random_graph(n, p, seed=seed))
    for fmt in FORMATS:
        if fmt == "edgelist" and g.m == 0:
            continue
        back = import_graph(export(g, fmt), fmt)
        if fmt == "edgelist":
            # trailing isolated vertices are not representable
            assert back.adjacency == g.adjacency[: back.n]
        else:
            assert back.same_adjacency(g)


@pytest.mark.parametrize("name,q,k", [("thm-main-ii", 7, None), ("thm-rectfree", 3, None), ("thm-even-k", None, 4), ("thm-wq-even", 4, None)])
def test_roundtrip_built(built, name, q, k):
    g = built(name, q, k).graph
    for fmt in FORMATS:
        back = import_graph(export(g, fmt), fmt)
        assert back.same_adjacency(g)
    assert (import_graph(export(g, "json"), "json").vertex_type == g.vertex_type).all()
    assert export(g, "graph6") == export(built(name, q, k).graph, "graph6")


def test_edgelist_is_sorted():
    data = export(triangle(), "edgelist")
    assert data == b"0 1\n0 2\n1 2\n"


def test_empty_graph_rejected():
    g = LeviGraph([], [])
    for fmt in FORMATS:
        with pytest.raises(ValueError):
            export(g, fmt)
    with pytest.raises(MalformedInput):
        from_graph6(b"?")
    with pytest.raises(MalformedInput):
        import_graph(b"", "edgelist")
    with pytest.raises(MalformedInput):
        import_graph(b'{"n": 0, "vertexType": [], "adjacency": []}', "json")


@pytest.mark.parametrize(
    "data,offset",
    [
        (b"Bw!", 2),  # byte outside the printable range
        (b"Bww", 2),  # first byte past the body
        (b"C", 1),  # missing body
        (b"~??", 3),  # truncated long header
        (b"Bx", 1),  # padding bit set
    ],
)
def test_graph6_malformed(data, offset):
    with pytest.raises(MalformedInput) as exc:
        from_graph6(data)
    assert exc.value.offset == offset


def test_edgelist_malformed():
    with pytest.raises(MalformedInput) as exc:
        import_graph(b"0 1\n1 x\n", "edgelist")
    assert exc.value.offset == 4
    with pytest.raises(MalformedInput) as exc:
        import_graph(b"0 1\n0 1\n", "edgelist")
    assert exc.value.offset == 4
    with pytest.raises(MalformedInput):
        import_graph(b"1 1\n", "edgelist")


def test_json_malformed():
    with pytest.raises(MalformedInput) as exc:
        import_graph(b'{"n": 2,', "json")
    assert exc.value.offset == 8
    with pytest.raises(MalformedInput):
        import_graph(b'{"n": 2, "vertexType": ["point", "plane"], "adjacency": [[1], [0]]}', "json")
    with pytest.raises(MalformedInput):
        import_graph(b'{"n": 2, "vertexType": ["point", "line"], "adjacency": [[1], []]}', "json")


def test_guess_format():
    assert guess_format("a.g6") == "graph6"
    assert guess_format("a.JSON") == "json"
    assert guess_format("a.txt") == "edgelist"
