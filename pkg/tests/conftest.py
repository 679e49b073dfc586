import networkx as nx
import pytest
from hypothesis import HealthCheck, settings

from girth7.incidence import LeviGraph

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def to_nx(g: LeviGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def from_nx(G: nx.Graph) -> LeviGraph:
    G = nx.convert_node_labels_to_integers(G)
    return LeviGraph([list(G.adj[v]) for v in range(G.number_of_nodes())], [0] * G.number_of_nodes())


@pytest.fixture(scope="session")
def built():
    """Small constructions shared across test modules."""
    from girth7.constructions import build

    cache = {}

    def get(name, q=None, k=None):
        key = (name, q, k)
        if key not in cache:
            cache[key] = build(name, q=q, k=k)
        return cache[key]

    return get
