"""Isomorphism testing and canonical forms for small graphs.

Both routines start from colour refinement (vertices coloured by degree, then
repeatedly split by the multiset of neighbour colours) and then individualise
one vertex of a non-singleton cell at a time.  There is no automorphism
pruning; the canonical form is meant for the n <= 7 enumeration, while the
pairwise test usually finds a mapping on its first branch.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .graph import Graph, relabel


def _refine(graphs: Sequence[Graph], colours: Sequence[list[int]]) -> Optional[list[list[int]]]:
    """Refine colourings of several graphs jointly so colour ids stay comparable.

    Returns ``None`` as soon as the colour histograms of the graphs diverge.
    """
    colours = [list(c) for c in colours]
    num = len(set(colours[0]))
    while True:
        sigs = [
            [(c[v], tuple(sorted(c[w] for w in g.neighbors(v)))) for v in range(g.n)]
            for g, c in zip(graphs, colours)
        ]
        palette = {s: i for i, s in enumerate(sorted(set().union(*map(set, sigs))))}
        colours = [[palette[s] for s in sg] for sg in sigs]
        hists = [sorted(c) for c in colours]
        if any(h != hists[0] for h in hists[1:]):
            return None
        new_num = len(set(colours[0]))
        if new_num == num:
            return colours
        num = new_num


def _target_cell(colours: list[int]) -> Optional[list[int]]:
    """Smallest non-singleton colour class, ties broken by colour id."""
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colours):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


def _individualise(colours: list[int], v: int) -> list[int]:
    # shift everything up so v gets a fresh colour below its old class
    out = [2 * c + 1 for c in colours]
    out[v] = 2 * colours[v]
    return out


def _invariants(g: Graph):
    return (g.n, g.num_edges, sorted(g.degrees()))


def find_isomorphism(g: Graph, h: Graph) -> Optional[list[int]]:
    """Return ``phi`` with ``phi[v]`` in ``h`` for each ``v`` in ``g``, or ``None``."""
    if _invariants(g) != _invariants(h):
        return None
    start = _refine([g, h], [g.degrees(), h.degrees()])
    if start is None:
        return None

    def search(cg: list[int], ch: list[int]) -> Optional[list[int]]:
        cell = _target_cell(cg)
        if cell is None:
            where = {c: v for v, c in enumerate(ch)}
            phi = [where[c] for c in cg]
            if all(h.has_edge(phi[v], phi[w]) for v, w in g.edges()):
                return phi
            return None
        v = cell[0]
        colour = cg[v]
        for w in range(h.n):
            if ch[w] != colour:
                continue
            refined = _refine([g, h], [_individualise(cg, v), _individualise(ch, w)])
            if refined is None:
                continue
            found = search(refined[0], refined[1])
            if found is not None:
                return found
        return None

    return search(start[0], start[1])


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def _code(g: Graph, order: Sequence[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        mask = 0
        for w in g.neighbors(v):
            mask |= 1 << pos[w]
        rows.append(mask)
    return tuple(rows)


def canonical_order(g: Graph) -> list[int]:
    """Vertex order giving the lexicographically least adjacency code among all
    leaves of the individualisation-refinement tree."""
    if g.n == 0:
        return []
    best_code = None
    best_order: list[int] = []

    def leaves(colours: list[int]) -> None:
        nonlocal best_code, best_order
        cell = _target_cell(colours)
        if cell is None:
            order = sorted(range(g.n), key=colours.__getitem__)
            code = _code(g, order)
            if best_code is None or code < best_code:
                best_code, best_order = code, order
            return
        for v in cell:
            leaves(_refine([g], [_individualise(colours, v)])[0])

    leaves(_refine([g], [g.degrees()])[0])
    return best_order


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Hashable certificate: equal for two graphs iff they are isomorphic."""
    return (g.n, _code(g, canonical_order(g)))


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_order(g))
