"""Recognise connected graphs with at most four Steinerberger boundary vertices.

Families, in tie-break order:

* ``SingleVertex``  - K1 (one boundary vertex by convention)
* ``Path``          - two boundary vertices
* ``ThreeLeafTree`` - subdivided claw
* ``Tripod``        - triangle with a pendant path (length >= 0) at each corner
* ``FourLeafTree``  - subdivided K_{1,4}, or two degree-3 centres joined by a path
* ``Fig2Core``      - one of the small cores below with at most one pendant path
                      at each core vertex of stability number 1
* ``Unclassified``  - anything else; carries the directly computed |dG|

Trees and the tripod are read off structurally.  Core graphs are matched by
regenerating every parameter tuple consistent with the vertex and edge counts
and testing isomorphism, since pendant-path peeling would also eat the
degree-1 vertices of ``X1c_open``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from .boundary import full_analysis
from .families import (
    CORE_NAMES,
    PARAMETRIC_CORES,
    attach_path,
    double_spider,
    fig2_core,
    path,
    spider,
    tripod,
)
from .graph import Graph, GraphError, build_graph, is_tree, leaves, require_connected
from .isomorphism import are_isomorphic

TAGS = (
    "SingleVertex",
    "Path",
    "ThreeLeafTree",
    "Tripod",
    "FourLeafTree",
    "Fig2Core",
    "Unclassified",
)
_TAG_SIZE = {
    "SingleVertex": 1,
    "Path": 2,
    "ThreeLeafTree": 3,
    "Tripod": 3,
    "FourLeafTree": 4,
    "Fig2Core": 4,
}


@dataclass(frozen=True)
class FamilyDescriptor:
    tag: str
    params: dict = field(default_factory=dict, hash=False)
    boundary_size: int = 0

    def __post_init__(self):
        if self.tag not in TAGS:
            raise GraphError(f"unknown family tag {self.tag!r}")

    def to_dict(self) -> dict:
        return {"tag": self.tag, "params": self.params, "boundary_size": self.boundary_size}

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _found(tag: str, **params) -> FamilyDescriptor:
    return FamilyDescriptor(tag, params, _TAG_SIZE[tag])


# structural helpers


def _arm(g: Graph, start: int, first: int) -> int:
    """Number of vertices on the pendant path leaving ``start`` through ``first``."""
    prev, cur, length = start, first, 1
    while g.degree(cur) == 2:
        nxt = next(w for w in g.neighbors(cur) if w != prev)
        prev, cur = cur, nxt
        length += 1
    if g.degree(cur) != 1:
        raise GraphError("arm does not end in a leaf")
    return length


def _tree_descriptor(g: Graph) -> Optional[FamilyDescriptor]:
    k = len(leaves(g))
    if k == 2:
        return _found("Path", length=g.n)
    branch = [v for v in range(g.n) if g.degree(v) >= 3]
    if k == 3:
        (centre,) = branch
        arms = sorted((_arm(g, centre, w) for w in g.neighbors(centre)), reverse=True)
        return _found("ThreeLeafTree", arms=arms)
    if k != 4:
        return None
    if len(branch) == 1:
        (centre,) = branch
        arms = sorted((_arm(g, centre, w) for w in g.neighbors(centre)), reverse=True)
        return _found("FourLeafTree", shape="spider", arms=arms)
    a, b = branch
    # the branch vertices are joined by a path of degree-2 vertices
    sides = []
    bridge = None
    for centre, other in ((a, b), (b, a)):
        arms = []
        for w in g.neighbors(centre):
            prev, cur, steps = centre, w, 1
            while cur != other and g.degree(cur) == 2:
                prev, cur = cur, next(x for x in g.neighbors(cur) if x != prev)
                steps += 1
            if cur == other:
                bridge = steps
            else:
                arms.append(steps)
        sides.append(sorted(arms, reverse=True))
    arms_a, arms_b = max(sides), min(sides)
    return _found("FourLeafTree", shape="double_spider", arms_a=arms_a, arms_b=arms_b, bridge=bridge)


def _tripod_descriptor(g: Graph) -> Optional[FamilyDescriptor]:
    if g.num_edges != g.n:
        return None
    # peel leaves to expose the unique cycle
    deg = list(g.degrees())
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        alive[v] = False
        for w in g.neighbors(v):
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    cyc = [v for v in range(g.n) if alive[v]]
    if len(cyc) != 3:
        return None
    if any(g.degree(v) > 3 for v in cyc):
        return None
    if any(g.degree(v) > 2 for v in range(g.n) if not alive[v]):
        return None
    arms = []
    for v in cyc:
        off = [w for w in g.neighbors(v) if not alive[w]]
        arms.append(_arm(g, v, off[0]) if off else 0)
    return _found("Tripod", arms=arms)


# core matching


@lru_cache(maxsize=None)
def core_sites(name: str, c: Optional[int] = None) -> tuple[int, ...]:
    """Core vertices with stability number exactly 1 (where paths may hang)."""
    a = full_analysis(fig2_core(name, c))
    return tuple(x.id for x in a.vertices if x.beta == 1)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts``, lexicographically descending."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def _core_candidates(n: int, m: int) -> Iterator[tuple[str, Optional[int]]]:
    for name in CORE_NAMES:
        cs = range(1, n + 1) if name in PARAMETRIC_CORES else (None,)
        for c in cs:
            core = fig2_core(name, c)
            if core.n > n:
                break
            # pendant paths keep the cycle rank m - n
            if core.num_edges - core.n == m - n:
                yield name, c


def build_core_with_paths(name: str, c: Optional[int], paths) -> Graph:
    sites = core_sites(name, c)
    if len(paths) != len(sites):
        raise GraphError(f"core {name} has {len(sites)} attachment sites, got {len(paths)} path lengths")
    g = fig2_core(name, c)
    g = build_graph(g.n, g.edges())  # drop coordinates: pendant vertices have none
    for v, length in zip(sites, paths):
        g = attach_path(g, v, length)
    return g


@lru_cache(maxsize=None)
def _regenerations(n: int, m: int) -> tuple:
    """Every (name, c, paths, graph) with n vertices and m edges, in search order."""
    out = []
    for name, c in _core_candidates(n, m):
        core_n = fig2_core(name, c).n
        k = len(core_sites(name, c))
        for paths in _compositions(n - core_n, k):
            cand = build_core_with_paths(name, c, paths)
            out.append((name, c, paths, cand, tuple(sorted(cand.degrees()))))
    return tuple(out)


def _core_descriptor(g: Graph) -> Optional[FamilyDescriptor]:
    target = tuple(sorted(g.degrees()))
    for name, c, paths, cand, degs in _regenerations(g.n, g.num_edges):
        if degs == target and are_isomorphic(cand, g):
            return _found("Fig2Core", core=name, c=c, paths=list(paths))
    return None


# public API


def recognize(g: Graph) -> Optional[FamilyDescriptor]:
    """Purely structural recognition; ``None`` when no family matches."""
    require_connected(g)
    if g.n == 0:
        raise GraphError("empty graph")
    if g.n == 1:
        return _found("SingleVertex")
    if is_tree(g):
        return _tree_descriptor(g)
    return _tripod_descriptor(g) or _core_descriptor(g)


def classify(g: Graph) -> FamilyDescriptor:
    found = recognize(g)
    if found is not None:
        return found
    return FamilyDescriptor("Unclassified", {}, len(full_analysis(g).steinerberger))


def regenerate(d: FamilyDescriptor) -> Graph:
    """Build the family member a descriptor names."""
    p = d.params
    if d.tag == "SingleVertex":
        return path(1)
    if d.tag == "Path":
        return path(p["length"])
    if d.tag == "ThreeLeafTree":
        return spider(*p["arms"])
    if d.tag == "Tripod":
        return tripod(*p["arms"])
    if d.tag == "FourLeafTree":
        if p["shape"] == "spider":
            return spider(*p["arms"])
        return double_spider(p["arms_a"], p["arms_b"], p["bridge"])
    if d.tag == "Fig2Core":
        return build_core_with_paths(p["core"], p["c"], p["paths"])
    raise GraphError("an Unclassified descriptor names no family member")


def cross_validate(g: Graph) -> bool:
    """Structural answer and direct |dG| agree in both directions."""
    size = len(full_analysis(g).steinerberger)
    found = recognize(g)
    if found is None:
        return size > 4
    return found.boundary_size == size and are_isomorphic(regenerate(found), g)


def cejz_size(g: Graph) -> int:
    return len(full_analysis(g).cejz)
