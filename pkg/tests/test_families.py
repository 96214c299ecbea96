from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import connected_graphs
from figure_data import BY_NAME, DRAWINGS
from graphboundary.boundary import full_analysis
from graphboundary.families import (
    CORE_NAMES,
    HALF,
    LatticeSpec,
    attach_path,
    barbell,
    base_case_fixture,
    complete,
    cycle,
    d_graph,
    double_spider,
    fig2_core,
    grid,
    join_with_edge,
    l_graph,
    n_graph,
    path,
    spider,
    star,
    t_graph,
    tailed_clique_claw,
    tripod,
    validate_axis_slice_convex,
    x_graph,
)
from graphboundary.graph import (
    GraphError,
    build_graph,
    connected_components,
    cut_vertices,
    diameter,
    distance_matrix,
    induced_subgraph,
    peripheral_vertices,
)
from graphboundary.isomorphism import are_isomorphic, find_isomorphism


def _drawing(d):
    idx = {name: i for i, name in enumerate(d["vertices"])}
    return build_graph(len(idx), [(idx[a], idx[b]) for a, b in d["edges"]]), idx


class TestLattice:
    def test_lattice_sets(self):
        s = LatticeSpec.make(3, 2)
        assert len(s.v0) == 12 and len(s.v1) == 6
        assert (Fraction(5, 2), Fraction(3, 2)) in s.v1

    @pytest.mark.parametrize("bad", [(0, 1), (1, 0)])
    def test_dimensions(self, bad):
        with pytest.raises(GraphError):
            LatticeSpec.make(*bad)

    def test_axis_slice_convex(self):
        assert not validate_axis_slice_convex([(HALF, HALF), (2 + HALF, HALF)])
        assert validate_axis_slice_convex([(HALF, HALF)])
        assert validate_axis_slice_convex(LatticeSpec.make(3, 2).v1)
        assert not validate_axis_slice_convex([(1, 0), (1, 2)])

    @given(st.sets(st.tuples(st.integers(0, 3), st.integers(0, 3)), max_size=10))
    def test_axis_slice_convex_brute_force(self, pts):
        def ok():
            for (x1, y1) in pts:
                for (x2, y2) in pts:
                    if y1 == y2 and x1 < x2 and any((x, y1) not in pts for x in range(x1, x2 + 1)):
                        return False
                    if x1 == x2 and y1 < y2 and any((x1, y) not in pts for y in range(y1, y2 + 1)):
                        return False
            return True

        assert validate_axis_slice_convex(pts) == ok()

    def test_grid_11_is_c4(self):
        assert are_isomorphic(grid(1, 1), cycle(4))

    def test_n11_is_wheel(self):
        g = n_graph(1, 1)
        assert g.n == 5 and g.num_edges == 8 and max(g.degrees()) == 4

    def test_n_3x2(self):
        g = n_graph(3, 2)
        assert g.n == 18
        assert g.coord(0) == (0, 0) and g.coord(12) == (HALF, HALF)

    def test_n_subset(self):
        w = [(HALF, HALF), (HALF + 1, HALF)]
        assert n_graph(3, 2, w).n == 14
        with pytest.raises(GraphError):
            n_graph(3, 2, [(HALF, HALF), (HALF + 2, HALF)])

    def test_x_small(self):
        assert are_isomorphic(x_graph(1, 1), complete(4))
        assert x_graph(1, 3) is not None and are_isomorphic(x_graph(1, 3), x_graph(3, 1))

    def test_x_1c_two_triangles_joined_by_path(self):
        for c in range(2, 6):
            g = x_graph(1, c)
            assert g.n == c + 3
            triangles = sum(
                1 for a in range(g.n) for b in g.neighbors(a) for d in g.neighbors(b)
                if a < b < d and g.has_edge(a, d)
            )
            assert triangles == 2

    def test_t11(self):
        g = t_graph(1, 1)
        assert g.n == 5 and g.num_edges == 7

    def test_t_subset_rules(self):
        with pytest.raises(GraphError):
            t_graph(1, 1, [(1, 0), (1, 2)])  # convexity forces (1, 1)
        with pytest.raises(GraphError):
            t_graph(2, 1, [(1, 0), (2, 0)])  # missing (2, 2)
        assert t_graph(1, 1, [(1, 0), (1, 1), (1, 2)]) == t_graph(1, 1)

    def test_d_l(self):
        assert are_isomorphic(d_graph(1, 1), l_graph(1, 1))
        g = d_graph(1, 1)
        assert g.n == 4 and g.num_edges == 5
        for c in range(1, 5):
            assert are_isomorphic(d_graph(1, c), l_graph(1, c))

    @pytest.mark.parametrize("gen", [n_graph, x_graph, t_graph, d_graph, l_graph])
    def test_coordinates_distinct(self, gen):
        g = gen(3, 2)
        assert len(set(g.coords)) == g.n


class TestComposition:
    def test_attach_zero(self):
        assert attach_path(cycle(4), 0, 0) == cycle(4)

    def test_attach_to_p2(self):
        assert are_isomorphic(attach_path(path(2), 1, 3), path(5))

    def test_tripod_from_triangle(self):
        g = complete(3)
        for v, k in enumerate((2, 0, 1)):
            g = attach_path(g, v, k)
        assert g == tripod(2, 0, 1)
        assert tripod(0, 0, 0) == complete(3)

    def test_join_points(self):
        assert join_with_edge(path(1), 0, path(1), 0) == path(2)

    def test_barbell(self):
        g = barbell(4)
        assert g.n == 8 and g.num_edges == 13 and diameter(distance_matrix(g)) == 3
        assert are_isomorphic(g, join_with_edge(complete(4), 0, complete(4), 2))

    def test_diamond_with_star(self):
        diamond = fig2_core("D11")
        a = full_analysis(diamond)
        v1 = next(x.id for x in a.vertices if x.beta == 2)
        g = join_with_edge(diamond, v1, star(4), 1)
        b = full_analysis(g)
        assert b.vertices[v1].beta == 1
        assert b.vertices[diamond.n + 1].beta == 0
        assert b.vertices[diamond.n].beta == -2

    @given(connected_graphs(max_n=5), connected_graphs(max_n=5), st.data())
    def test_join_beta_law(self, g1, g2, data):
        v1 = data.draw(st.integers(0, g1.n - 1))
        v2 = data.draw(st.integers(0, g2.n - 1))
        g = join_with_edge(g1, v1, g2, v2)
        a1, a2, a = full_analysis(g1), full_analysis(g2), full_analysis(g)
        if g1.n >= 2:
            for v in range(g1.n):
                assert a.betas[v] == a1.betas[v] - (v == v1)
        expected = set(a1.steinerberger) | {g1.n + x for x in a2.steinerberger}
        expected -= {v1} if a1.betas[v1] == 1 else set()
        expected -= {g1.n + v2} if a2.betas[v2] == 1 else set()
        assert a.steinerberger == expected

    @pytest.mark.parametrize("name, c", [(n, None) for n in CORE_NAMES[:5]] + [("X1c", 3), ("X1c_open", 3)])
    def test_attaching_at_beta_one_preserves_size(self, name, c):
        core = fig2_core(name, c)
        a = full_analysis(core)
        size = len(a.steinerberger)
        for x in a.vertices:
            grown = len(full_analysis(attach_path(core, x.id, 2)).steinerberger)
            if x.beta == 1:
                assert grown == size
            elif x.in_steinerberger:
                assert grown == size + 1


class TestStandard:
    def test_spider(self):
        assert spider(1, 1, 1, 1) == star(4)
        with pytest.raises(GraphError):
            spider(1, 0, 1, 1)

    def test_double_spider(self):
        g = double_spider((1, 2), (1, 1), bridge=2)
        assert sorted(g.degrees()) == [1, 1, 1, 1, 2, 2, 3, 3]

    @pytest.mark.parametrize("bad", [lambda: barbell(1), lambda: path(0), lambda: cycle(2), lambda: star(0),
                                     lambda: tripod(-1, 0, 0), lambda: fig2_core("K5"),
                                     lambda: fig2_core("X1c"), lambda: fig2_core("C4", 2),
                                     lambda: base_case_fixture(10)])
    def test_invalid(self, bad):
        with pytest.raises(GraphError):
            bad()

    def test_tailed_clique_claw(self):
        g = tailed_clique_claw()
        dm = distance_matrix(g)
        assert diameter(dm) == 5
        assert peripheral_vertices(dm) == {0, 1, 2, 6, 8, 9}
        assert cut_vertices(g) == {3, 4, 5, 7}


class TestCores:
    PROFILES = {
        "N11": (3, 3, 3, 3, 0),
        "C4": (2, 2, 2, 2),
        "K4": (1, 1, 1, 1),
        "T11": (2, 0, 2, 2, 2),
        "D11": (2, 1, 1, 2),
    }

    @pytest.mark.parametrize("name", list(PROFILES))
    def test_profiles(self, name):
        a = full_analysis(fig2_core(name))
        assert a.betas == self.PROFILES[name]
        assert len(a.steinerberger) == 4

    @pytest.mark.parametrize("c", range(2, 7))
    def test_x1c(self, c):
        g = fig2_core("X1c", c)
        a = full_analysis(g)
        assert a.steinerberger == {0, 1, 2, 3}
        assert [x.beta for x in a.vertices[:4]] == [1, 1, 1, 1]
        assert all(x.beta <= 0 for x in a.vertices[4:])

    @pytest.mark.parametrize("c", range(2, 7))
    def test_x1c_open(self, c):
        g = fig2_core("X1c_open", c)
        a = full_analysis(g)
        assert len(a.steinerberger) == 4
        assert all(a.vertices[v].beta == 1 for v in range(g.n) if g.degree(v) == 1)


class TestBaseCases:
    @pytest.mark.parametrize("i", range(1, 10))
    def test_witness_at_distance_two(self, i):
        from graphboundary.boundary import beta_pair

        g, v, u = base_case_fixture(i)
        dm = distance_matrix(g)
        assert dm[v][u] == 2
        assert beta_pair(g, dm, v, u) >= 1

    @pytest.mark.parametrize("i", range(1, 10))
    def test_match_drawings(self, i):
        drawn, _ = _drawing(BY_NAME[(f"base_case_{i}", None)])
        assert are_isomorphic(drawn, base_case_fixture(i)[0])


# drawn reference graphs


@pytest.mark.parametrize("d", [d for d in DRAWINGS if d["boundary"]], ids=lambda d: f"{d['name']}-{d['boundary']}")
def test_drawn_boundaries(d):
    g, idx = _drawing(d)
    names = d["vertices"]
    parts = [sorted(c) for c in connected_components(g)]
    red, betas = set(), {}
    for part in parts:
        a = full_analysis(induced_subgraph(g, part))
        chosen = a.cejz if d["boundary"] == "cejz" else a.steinerberger
        red |= {names[part[i]] for i in chosen}
        betas.update({names[part[x.id]]: x.beta for x in a.vertices})
    assert red == set(d["red"])
    for name, value in d["beta"].items():
        assert betas[name] == value, name


@pytest.mark.parametrize(
    "name, kind, gen",
    [
        ("n_3x2", "cejz", lambda: n_graph(3, 2)),
        ("x_3x2", "cejz", lambda: x_graph(3, 2)),
        ("t_3x2", "cejz", lambda: t_graph(3, 2)),
        ("d_3x2", None, lambda: d_graph(3, 2)),
        ("l_3x2", "cejz", lambda: l_graph(3, 2)),
        ("barbell4", "steinerberger", lambda: barbell(4)),
        ("tailed_clique_claw", None, tailed_clique_claw),
        ("wheel_n11", "steinerberger", lambda: fig2_core("N11")),
        ("t11", "steinerberger", lambda: fig2_core("T11")),
        ("diamond_d11", "steinerberger", lambda: fig2_core("D11")),
        ("star_four_leaves", "steinerberger", lambda: star(4)),
    ],
)
def test_generators_match_drawings(name, kind, gen):
    drawn, _ = _drawing(BY_NAME[(name, kind)])
    assert find_isomorphism(gen(), drawn) is not None


def test_drawn_partial_n_is_an_induced_subgraph():
    d = BY_NAME[("n_3x2_partial_centres", "cejz")]
    drawn, _ = _drawing(d)
    full = n_graph(3, 2)
    centres = [v for v in range(full.n) if full.coord(v)[0].denominator == 2]
    found = False
    for mask in range(1 << len(centres)):
        keep = [v for v in range(full.n) if full.coord(v)[0].denominator == 1]
        keep += [c for i, c in enumerate(centres) if mask >> i & 1]
        if len(keep) == drawn.n and are_isomorphic(induced_subgraph(full, keep), drawn):
            found = True
            break
    assert found
