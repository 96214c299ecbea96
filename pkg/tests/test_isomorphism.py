import networkx as nx
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, to_nx
from graphboundary.families import cycle, d_graph, fig2_core, l_graph, n_graph, path, star, t_graph, x_graph
from graphboundary.graph import relabel
from graphboundary.isomorphism import are_isomorphic, canonical_form, canonical_graph, find_isomorphism


def _shuffled(g, rnd):
    order = list(range(g.n))
    rnd.shuffle(order)
    return relabel(g, order)


@given(graphs(max_n=10, connected=False), st.randoms())
def test_relabelled_copies_are_isomorphic(g, rnd):
    h = _shuffled(g, rnd)
    phi = find_isomorphism(g, h)
    assert phi is not None
    assert sorted(phi) == list(range(g.n))
    assert all(h.has_edge(phi[v], phi[w]) for v, w in g.edges())


# the canonical form explores every leaf of the search tree (no automorphism
# pruning), so it is only exercised at enumeration scale
@given(graphs(max_n=7, connected=False), st.randoms())
def test_canonical_form_is_invariant(g, rnd):
    assert canonical_form(g) == canonical_form(_shuffled(g, rnd))


@given(graphs(max_n=7, connected=False), graphs(max_n=7, connected=False))
def test_agrees_with_networkx(g, h):
    expected = nx.is_isomorphic(to_nx(g), to_nx(h))
    assert are_isomorphic(g, h) == expected
    assert (canonical_form(g) == canonical_form(h)) == expected


@given(graphs(max_n=6, connected=False), graphs(max_n=6, connected=False), graphs(max_n=6, connected=False))
def test_equivalence_relation(a, b, c):
    assert are_isomorphic(a, a)
    assert are_isomorphic(a, b) == are_isomorphic(b, a)
    if are_isomorphic(a, b) and are_isomorphic(b, c):
        assert are_isomorphic(a, c)


def test_canonical_graph_is_isomorphic():
    g = x_graph(3, 2)
    assert are_isomorphic(canonical_graph(g), g)


def test_regular_non_isomorphic_pair():
    # two 3-regular graphs on 6 vertices that colour refinement cannot split
    prism = nx.circular_ladder_graph(3)
    k33 = nx.complete_bipartite_graph(3, 3)
    from graphboundary.graph import build_graph

    a = build_graph(6, prism.edges())
    b = build_graph(6, k33.edges())
    assert not are_isomorphic(a, b)
    assert canonical_form(a) != canonical_form(b)


def test_generator_cross_checks():
    small = {
        "n11": n_graph(1, 1),
        "t11": t_graph(1, 1),
        "d11": d_graph(1, 1),
        "x11": x_graph(1, 1),
        "c4": cycle(4),
    }
    names = list(small)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            assert not are_isomorphic(small[a], small[b]), (a, b)
    assert are_isomorphic(d_graph(1, 1), l_graph(1, 1))
    assert not are_isomorphic(path(4), star(3))
    assert are_isomorphic(fig2_core("X1c_open", 1), d_graph(1, 1))
