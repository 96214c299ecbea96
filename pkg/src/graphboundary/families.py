"""Deterministic generators for the grid-derived families and small standard graphs.

Lattice generators attach a coordinate label to every vertex.  Integer points
come first, then half-integer points, each sorted by (y, x).  Edge rules use
exact squared Euclidean distances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .graph import Coord, Graph, GraphError, build_graph, disjoint_union, induced_subgraph

HALF = Fraction(1, 2)


def _pt(x, y) -> Coord:
    return (Fraction(x), Fraction(y))


def _sorted_points(points: Iterable[Coord]) -> list[Coord]:
    return sorted(points, key=lambda p: (p[1], p[0]))


@dataclass(frozen=True)
class LatticeSpec:
    a: int
    c: int
    v0: frozenset[Coord]
    v1: frozenset[Coord]
    subset_w: Optional[frozenset[Coord]] = None

    @classmethod
    def make(cls, a: int, c: int, subset_w=None) -> "LatticeSpec":
        if a < 1 or c < 1:
            raise GraphError(f"lattice dimensions must be positive, got {a}x{c}")
        v0 = frozenset(_pt(x, y) for x in range(a + 1) for y in range(c + 1))
        v1 = frozenset(_pt(x + HALF, y + HALF) for x in range(a) for y in range(c))
        w = None
        if subset_w is not None:
            w = frozenset(_pt(*p) for p in subset_w)
            if not validate_axis_slice_convex(w):
                raise GraphError("subset is not axis slice convex")
        return cls(a, c, v0, v1, w)

    @property
    def vertices(self) -> frozenset[Coord]:
        return self.v0 | self.v1


def validate_axis_slice_convex(points: Iterable) -> bool:
    """Rows and columns of the set have no unit-step gaps."""
    pts = {_pt(*p) for p in points}
    rows: dict[Fraction, set[Fraction]] = {}
    cols: dict[Fraction, set[Fraction]] = {}
    for x, y in pts:
        rows.setdefault(y, set()).add(x)
        cols.setdefault(x, set()).add(y)
    for line in list(rows.values()) + list(cols.values()):
        top = max(line)
        for t in line:
            if t + 1 <= top and t + 1 not in line:
                return False
    return True


def _sq_dist(p: Coord, q: Coord) -> Fraction:
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


def euclidean_graph(points: Iterable[Coord], within: Fraction, exact: bool = False) -> Graph:
    """Join points at squared distance <= ``within`` (== when ``exact``)."""
    pts = list(points)
    edges = []
    for i, j in combinations(range(len(pts)), 2):
        d2 = _sq_dist(pts[i], pts[j])
        if (d2 == within) if exact else (0 < d2 <= within):
            edges.append((i, j))
    return build_graph(len(pts), edges, pts)


def _integer_first(points: Iterable[Coord]) -> list[Coord]:
    pts = list(points)
    ints = [p for p in pts if p[0].denominator == 1 and p[1].denominator == 1]
    rest = [p for p in pts if not (p[0].denominator == 1 and p[1].denominator == 1)]
    return _sorted_points(ints) + _sorted_points(rest)


def grid(a: int, c: int) -> Graph:
    spec = LatticeSpec.make(a, c)
    return euclidean_graph(_sorted_points(spec.v0), Fraction(1), exact=True)


def n_graph(a: int, c: int, w=None) -> Graph:
    """Grid points plus cell centres (all of them, or the convex subset ``w``)."""
    spec = LatticeSpec.make(a, c, w)
    centres = spec.v1 if spec.subset_w is None else spec.subset_w
    if not centres <= spec.v1:
        raise GraphError("subset must consist of cell centres of the lattice")
    return euclidean_graph(_integer_first(spec.v0 | centres), Fraction(1))


def _transpose(g: Graph) -> Graph:
    return build_graph(g.n, g.edges(), [(y, x) for x, y in g.coords])


def _remove_edges(g: Graph, pairs: Sequence[tuple[Coord, Coord]]) -> Graph:
    drop = {frozenset((g.vertex_at(p), g.vertex_at(q))) for p, q in pairs}
    return build_graph(g.n, [e for e in g.edges() if frozenset(e) not in drop], g.coords)


def x_graph(a: int, c: int) -> Graph:
    if a < 1 or c < 1:
        raise GraphError(f"lattice dimensions must be positive, got {a}x{c}")
    if a > 2:
        base = n_graph(a - 1, c)
        keep = [
            v for v, (x, y) in enumerate(base.coords)
            if not (x.denominator == 1 and y.denominator == 1 and 0 < x < a - 1 and y in (0, c))
        ]
        return induced_subgraph(base, keep)
    if a == 2:
        return _remove_edges(n_graph(1, c), [(_pt(0, 0), _pt(1, 0)), (_pt(0, c), _pt(1, c))])
    if c > 1:
        return _transpose(x_graph(c, 1))
    # K4, labelled by the unit square's corners for reporting
    return build_graph(4, combinations(range(4), 2), [(0, 0), (1, 0), (0, 1), (1, 1)])


def t_graph(a: int, c: int, w=None) -> Graph:
    """Cell centres of an a x (c+1) lattice plus the surviving grid points.

    ``w``, if given, selects grid points; it must be axis slice convex and
    contain (a, 0) and (a, c+1).
    """
    spec = LatticeSpec.make(a, c + 1, w)
    allowed = {
        p for p in spec.v0
        if p[0] != 0 and not (p[0] < a and p[1] in (0, c + 1))
    }
    if spec.subset_w is not None:
        if not spec.subset_w <= spec.v0:
            raise GraphError("subset must consist of integer lattice points")
        for corner in (_pt(a, 0), _pt(a, c + 1)):
            if corner not in spec.subset_w:
                raise GraphError(f"subset must contain {corner[0]}, {corner[1]}")
        allowed &= spec.subset_w
    return euclidean_graph(_integer_first(allowed | spec.v1), Fraction(1))


def _layered(a: int, c: int, keep_inner: bool) -> Graph:
    if a < 1 or c < 1:
        raise GraphError(f"lattice dimensions must be positive, got {a}x{c}")
    ids: dict[tuple[str, int, int], int] = {}
    coords: list[Coord] = []

    def inner(x, y):
        return 0 < x < a and 0 < y < c

    for y in range(c + 1):
        for x in range(a + 1):
            ids[("v", x, y)] = len(coords)
            coords.append(_pt(x, y))
    for y in range(c + 1):
        for x in range(a + 1):
            if inner(x, y):
                if keep_inner:
                    ids[("w", x, y)] = len(coords)
                    # second layer sits at the cell-centre offset so labels stay distinct
                    coords.append(_pt(x + HALF, y + HALF))
            else:
                ids[("w", x, y)] = ids[("v", x, y)]

    edges = set()

    def join(p, q):
        if p in ids and q in ids and ids[p] != ids[q]:
            edges.add(frozenset((ids[p], ids[q])))

    for layer in ("v", "w"):
        for y in range(c + 1):
            for x in range(a + 1):
                join((layer, x, y), (layer, x + 1, y))
                join((layer, x, y), (layer, x, y + 1))
    for y in range(c + 1):
        for x in range(a + 1):
            join(("v", x, y), ("w", x, y))
    for y in range(c):
        for x in range(a):
            join(("v", x + 1, y), ("w", x, y + 1))
    return build_graph(len(coords), [tuple(e) for e in edges], coords)


def d_graph(a: int, c: int) -> Graph:
    """Two grids glued along their outer frame, joined by rungs and diagonals."""
    return _layered(a, c, keep_inner=True)


def l_graph(a: int, c: int) -> Graph:
    return _layered(a, c, keep_inner=False)


# composition


def attach_path(g: Graph, v: int, length: int) -> Graph:
    """Hang a path of ``length`` new vertices off ``v``."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} not in graph")
    if length < 0:
        raise GraphError("path length must be non-negative")
    if length == 0:
        return g
    n = g.n
    extra = [(v, n)] + [(n + i, n + i + 1) for i in range(length - 1)]
    return build_graph(n + length, list(g.edges()) + extra)


def join_with_edge(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    if not (0 <= v1 < g1.n and 0 <= v2 < g2.n):
        raise GraphError("junction vertex out of range")
    u = disjoint_union(g1, g2)
    return build_graph(u.n, list(u.edges()) + [(v1, g1.n + v2)], u.coords)


# standard graphs


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    return build_graph(n, combinations(range(n), 2))


def star(k: int) -> Graph:
    """K_{1,k}; the centre is vertex 0."""
    if k < 1:
        raise GraphError("star needs at least one leaf")
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def spider(*arms: int) -> Graph:
    """Subdivided star: centre 0 with one path of each given length (>= 1)."""
    if not arms or any(x < 1 for x in arms):
        raise GraphError("spider arms must have length >= 1")
    g = build_graph(1, [])
    for length in arms:
        g = attach_path(g, 0, length)
    return g


def double_spider(arms_a: Sequence[int], arms_b: Sequence[int], bridge: int = 1) -> Graph:
    """Tree with two degree-3 centres ``bridge`` edges apart, two arms on each."""
    if len(arms_a) != 2 or len(arms_b) != 2:
        raise GraphError("double spider needs two arms at each centre")
    if bridge < 1 or any(x < 1 for x in (*arms_a, *arms_b)):
        raise GraphError("arms and bridge must have length >= 1")
    g = path(bridge + 1)
    for length in arms_a:
        g = attach_path(g, 0, length)
    for length in arms_b:
        g = attach_path(g, bridge, length)
    return g


def tripod(p: int, q: int, r: int) -> Graph:
    """Triangle 0, 1, 2 with paths of lengths p, q, r hanging off each corner."""
    g = complete(3)
    for v, length in enumerate((p, q, r)):
        if length < 0:
            raise GraphError("tripod arms must be non-negative")
        g = attach_path(g, v, length)
    return g


def barbell(n: int) -> Graph:
    """Two copies of K_n with a bridge between vertices n-1 and n."""
    if n < 2:
        raise GraphError("barbell needs n >= 2")
    return join_with_edge(complete(n), n - 1, complete(n), 0)


def tailed_clique_claw() -> Graph:
    """Ten-vertex example: K4 on 0..3, path 3-4-5-7, leaves 6, 8, 9 at 7.

    Diameter 5; peripheral vertices 0, 1, 2, 6, 8, 9; cut vertices 3, 4, 5, 7.
    """
    k4 = list(combinations(range(4), 2))
    return build_graph(10, k4 + [(3, 4), (4, 5), (5, 7), (7, 6), (7, 8), (7, 9)])


# cores of the four-boundary-vertex classification

CORE_NAMES = ("N11", "C4", "K4", "T11", "D11", "X1c", "X1c_open")
PARAMETRIC_CORES = ("X1c", "X1c_open")


def fig2_core(name: str, c: Optional[int] = None) -> Graph:
    """Non-tree core graphs with four boundary vertices.

    ``X1c`` and ``X1c_open`` take the length parameter ``c >= 1``; ``X1c_open``
    is ``X1c`` without the edge between (0, 0) and (1, 0).
    """
    if name in PARAMETRIC_CORES:
        if c is None or c < 1:
            raise GraphError(f"core {name} needs a parameter c >= 1")
    elif c is not None:
        raise GraphError(f"core {name} takes no parameter")
    if name == "N11":
        return n_graph(1, 1)
    if name == "C4":
        return grid(1, 1)
    if name == "K4":
        return x_graph(1, 1)
    if name == "T11":
        return t_graph(1, 1)
    if name == "D11":
        return d_graph(1, 1)
    if name == "X1c":
        return x_graph(1, c)
    if name == "X1c_open":
        return _remove_edges(x_graph(1, c), [(_pt(0, 0), _pt(1, 0))])
    raise GraphError(f"unknown core {name!r}; expected one of {', '.join(CORE_NAMES)}")


# (edges over vertex ids, v, u) for the nine base-case graphs; vertex ids follow
# the row-major reading of each drawing
_BASE_CASES: dict[int, tuple[int, list[tuple[int, int]], int, int]] = {
    # 3x2 grid 0..5 (bottom row 0,1,2; top row 3,4,5) with both cell centres 6, 7
    1: (8, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5),
            (6, 0), (6, 1), (6, 3), (6, 4), (7, 1), (7, 2), (7, 4), (7, 5), (6, 7)], 1, 5),
    # same with only the left centre
    2: (7, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5),
            (6, 0), (6, 1), (6, 3), (6, 4)], 1, 5),
    3: (6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)], 1, 5),
    # columns 0-1-2 (left) and 3-4-5 (right) with rung 1-4, centres 6, 7
    4: (8, [(0, 1), (1, 2), (3, 4), (4, 5), (1, 4),
            (6, 0), (6, 1), (6, 3), (6, 4), (7, 1), (7, 2), (7, 4), (7, 5), (6, 7)], 1, 3),
    # square 0,1,2,3 (0 bottom-left, 1 bottom-right, 2 top-left, 3 top-right),
    # right column 4 (low), 5 (mid), 6 (high), square centre 7
    5: (8, [(0, 1), (0, 2), (2, 3), (3, 1), (3, 6), (3, 5), (1, 5), (6, 5), (1, 4), (5, 4),
            (7, 0), (7, 1), (7, 2), (7, 3)], 3, 4),
    6: (7, [(0, 1), (0, 2), (2, 3), (3, 1), (3, 6), (3, 5), (1, 5), (6, 5), (1, 4), (5, 4)], 3, 4),
    # bottom row 0,1,2; top row 3,4,5,6 staggered
    7: (7, [(0, 1), (0, 3), (0, 4), (1, 4), (1, 5), (1, 2), (2, 5), (2, 6), (5, 6), (3, 4), (4, 5)], 5, 0),
    # 3x3 grid 0..8 row-major from the bottom, second-layer copy 9 of the middle vertex 4
    8: (10, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5), (3, 6), (4, 7), (5, 8),
             (6, 7), (7, 8), (4, 9), (3, 9), (1, 9), (7, 9), (8, 9), (5, 9), (3, 7), (0, 4), (1, 5)], 3, 1),
    # 3x2 grid with two diagonals
    9: (6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5), (0, 4), (1, 5)], 1, 3),
}


def base_case_fixture(i: int) -> tuple[Graph, int, int]:
    """Small graph with a marked vertex v and witness u at distance 2."""
    if i not in _BASE_CASES:
        raise GraphError(f"base case index must be in 1..9, got {i}")
    n, edges, v, u = _BASE_CASES[i]
    return build_graph(n, edges), v, u
