"""Immutable simple undirected graphs and their basic metric structure.

Vertices are the integers ``0..n-1``.  Everything here is a pure function of
its inputs; ``Graph`` and ``DistanceMatrix`` never change after construction.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

Coord = tuple[Fraction, Fraction]


class GraphError(ValueError):
    """Raised for malformed graphs or inputs outside an operation's domain."""


class DisconnectedGraphError(GraphError):
    """Raised by metric operations on a disconnected graph."""

    def __init__(self, v: int, w: int):
        super().__init__(f"graph is disconnected: no path between {v} and {w}")
        self.pair = (v, w)


@dataclass(frozen=True)
class Graph:
    n: int
    _nbrs: tuple[tuple[int, ...], ...] = field(repr=False)
    _sets: tuple[frozenset[int], ...] = field(repr=False, compare=False)
    coords: Optional[tuple[Coord, ...]] = field(default=None, repr=False, compare=False)

    def __hash__(self) -> int:
        return hash((self.n, self._nbrs))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def has_edge(self, v: int, w: int) -> bool:
        return w in self._sets[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self._nbrs]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v, nb in enumerate(self._nbrs):
            for w in nb:
                if v < w:
                    yield (v, w)

    @property
    def num_edges(self) -> int:
        return sum(len(nb) for nb in self._nbrs) // 2

    def vertices(self) -> range:
        return range(self.n)

    def coord(self, v: int) -> Optional[Coord]:
        return None if self.coords is None else self.coords[v]

    def vertex_at(self, point) -> int:
        """Return the vertex carrying coordinate label ``point``."""
        if self.coords is None:
            raise GraphError("graph has no coordinate labels")
        target = (Fraction(point[0]), Fraction(point[1]))
        for v, c in enumerate(self.coords):
            if c == target:
                return v
        raise GraphError(f"no vertex at {point}")


def _as_coord(point) -> Coord:
    x, y = point
    return (Fraction(x), Fraction(y))


def build_graph(n: int, edges: Iterable[Sequence[int]], coords=None) -> Graph:
    """Build a graph on ``n`` vertices from an edge list.

    Duplicate edges are merged.  Self-loops and out-of-range ids raise
    ``GraphError``.  ``coords``, if given, must hold one distinct point per vertex.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    sets: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        v, w = pair
        if not (0 <= v < n and 0 <= w < n):
            raise GraphError(f"edge ({v}, {w}) has a vertex outside [0, {n})")
        if v == w:
            raise GraphError(f"self-loop at vertex {v}")
        sets[v].add(w)
        sets[w].add(v)
    labels = None
    if coords is not None:
        labels = tuple(_as_coord(p) for p in coords)
        if len(labels) != n:
            raise GraphError(f"expected {n} coordinate labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise GraphError("coordinate labels must be pairwise distinct")
    return Graph(
        n,
        tuple(tuple(sorted(s)) for s in sets),
        tuple(frozenset(s) for s in sets),
        labels,
    )


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Return the graph whose vertex ``i`` is ``g``'s vertex ``order[i]``."""
    pos = {old: new for new, old in enumerate(order)}
    edges = [(pos[v], pos[w]) for v, w in g.edges()]
    coords = None if g.coords is None else [g.coords[old] for old in order]
    return build_graph(g.n, edges, coords)


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances of a connected graph; ``dm[v][w]`` is d(v, w)."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self.rows[v]


def bfs_distances(g: Graph, source: int) -> list[Optional[int]]:
    dist: list[Optional[int]] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for w in g.neighbors(v):
            if dist[w] is None:
                dist[w] = dv
                queue.append(w)
    return dist


def distance_matrix(g: Graph) -> DistanceMatrix:
    """Breadth-first search from every vertex.  Rejects disconnected graphs."""
    rows = []
    for v in range(g.n):
        dist = bfs_distances(g, v)
        for w, d in enumerate(dist):
            if d is None:
                raise DisconnectedGraphError(v, w)
        rows.append(tuple(dist))
    return DistanceMatrix(g.n, tuple(rows))


def eccentricity(dm: DistanceMatrix, v: int) -> int:
    return max(dm[v])


def diameter(dm: DistanceMatrix) -> int:
    return max((max(row) for row in dm.rows), default=0)


def peripheral_vertices(dm: DistanceMatrix) -> frozenset[int]:
    diam = diameter(dm)
    return frozenset(v for v in range(dm.n) if max(dm[v]) == diam)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components in order of their smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = {s}
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    # the empty graph counts as connected; nothing downstream depends on it
    return len(connected_components(g)) <= 1


def require_connected(g: Graph) -> None:
    comps = connected_components(g)
    if len(comps) > 1:
        raise DisconnectedGraphError(min(comps[0]), min(comps[1]))


def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation points by an iterative low-link depth-first search."""
    require_connected(g)
    if g.n <= 2:
        return frozenset()
    disc = [-1] * g.n
    low = [0] * g.n
    cuts = set()
    root = 0
    disc[root] = 0
    timer = 1
    root_children = 0
    # (vertex, parent, iterator over neighbours)
    stack = [(root, -1, iter(g.neighbors(root)))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                if v == root:
                    root_children += 1
                stack.append((w, v, iter(g.neighbors(w))))
                advanced = True
                break
            if w != parent:
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent != -1:
            low[parent] = min(low[parent], low[v])
            if parent != root and low[v] >= disc[parent]:
                cuts.add(parent)
    if root_children > 1:
        cuts.add(root)
    return frozenset(cuts)


def has_cycle_through(g: Graph, v: int) -> bool:
    """True iff some simple cycle (length >= 3) passes through ``v``.

    Equivalent to two neighbours of ``v`` being joined by a path avoiding ``v``.
    """
    nbrs = g.neighbor_set(v)
    if len(nbrs) < 2:
        return False
    seen = {v}
    for start in g.neighbors(v):
        if start in seen:
            return True
        seen.add(start)
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y in seen:
                    continue
                if y in nbrs:
                    return True
                seen.add(y)
                stack.append(y)
    return False


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.num_edges == g.n - 1 and is_connected(g)


def leaves(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.degree(v) == 1)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on ``vertices``, relabelled ``0..k-1`` in increasing id order."""
    keep = sorted(set(vertices))
    if not keep:
        raise GraphError("induced subgraph needs at least one vertex")
    if keep[0] < 0 or keep[-1] >= g.n:
        raise GraphError(f"vertex set not within [0, {g.n})")
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[v], pos[w]) for v, w in g.edges() if v in pos and w in pos]
    coords = None if g.coords is None else [g.coords[v] for v in keep]
    return build_graph(len(keep), edges, coords)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """``g2``'s ids are shifted by ``g1.n``.  Coordinates survive only if both carry them."""
    off = g1.n
    edges = list(g1.edges()) + [(v + off, w + off) for v, w in g2.edges()]
    coords = None
    if g1.coords is not None and g2.coords is not None:
        merged = g1.coords + g2.coords
        if len(set(merged)) == len(merged):
            coords = merged
    return build_graph(g1.n + g2.n, edges, coords)


def add_edges(g: Graph, extra: Iterable[Sequence[int]], extra_vertices: int = 0) -> Graph:
    coords = g.coords if extra_vertices == 0 else None
    return build_graph(g.n + extra_vertices, list(g.edges()) + list(extra), coords)
