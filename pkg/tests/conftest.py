import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from graphboundary.enumeration import connected_corpus
from graphboundary.graph import Graph, build_graph

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=True):
    """Random simple graphs; connected ones are grown from a random spanning tree."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    if connected:
        for v in range(1, n):
            edges.add((draw(st.integers(0, v - 1)), v))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
        edges.update(extra)
    return build_graph(n, sorted(edges))


connected_graphs = graphs


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@pytest.fixture(scope="session")
def corpus7():
    return connected_corpus(7)


@pytest.fixture(scope="session")
def corpus5():
    return connected_corpus(5)
