import networkx as nx
import pytest

from conftest import to_nx
from graphboundary.enumeration import MAX_N, connected_corpus, enumerate_connected
from graphboundary.graph import GraphError, build_graph, is_connected
from graphboundary.graph6 import decode, encode
from graphboundary.isomorphism import canonical_form

COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


@pytest.mark.parametrize("n", range(1, MAX_N + 1))
def test_counts(n):
    assert sum(1 for _ in enumerate_connected(n)) == COUNTS[n]


def test_corpus_size(corpus7):
    assert len(corpus7) == 996
    assert len(connected_corpus(6)) == 143


def test_all_connected_and_distinct(corpus7):
    assert all(is_connected(g) for g in corpus7)
    assert len({canonical_form(g) for g in corpus7}) == len(corpus7)


def test_matches_graph_atlas(corpus7):
    # the atlas lists every graph on up to 7 vertices, one per isomorphism class
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() > 0 and nx.is_connected(h)]
    assert len(atlas) == 996
    ours = {canonical_form(g) for g in corpus7}
    theirs = {canonical_form(build_graph(h.number_of_nodes(), h.edges())) for h in atlas}
    assert ours == theirs


def test_spot_check_against_networkx_isomorphism(corpus7):
    # independent of our canonical form: every atlas graph with 7 vertices and
    # 9 edges has exactly one isomorphic partner among ours
    atlas = [h for h in nx.graph_atlas_g()
             if h.number_of_nodes() == 7 and h.number_of_edges() == 9 and nx.is_connected(h)]
    ours = [to_nx(g) for g in corpus7 if g.n == 7 and g.num_edges == 9]
    assert len(atlas) == len(ours)
    for h in atlas:
        assert sum(nx.is_isomorphic(h, x) for x in ours) == 1


def test_graph6_round_trip(corpus7):
    assert all(decode(encode(g)) == g for g in corpus7)


def test_deterministic_order():
    first = [encode(g) for g in enumerate_connected(5)]
    assert first == [encode(g) for g in enumerate_connected(5)]


@pytest.mark.parametrize("n", [0, MAX_N + 1])
def test_out_of_range(n):
    with pytest.raises(GraphError, match="graph6"):
        enumerate_connected(n)
