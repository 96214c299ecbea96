"""Exhaustive enumeration of connected graphs up to isomorphism (n <= 7).

Every connected graph on n >= 2 vertices has a non-cut vertex (a leaf of any
spanning tree), so it arises from a connected graph on n-1 vertices by adding
one vertex with a non-empty neighbourhood.  Candidates are deduplicated by
canonical form.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph, GraphError, build_graph
from .isomorphism import canonical_form, canonical_graph

MAX_N = 7


@lru_cache(maxsize=None)
def _connected(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (build_graph(1, []),)
    found: dict = {}
    for base in _connected(n - 1):
        edges = list(base.edges())
        new = n - 1
        for mask in range(1, 1 << (n - 1)):
            g = build_graph(n, edges + [(v, new) for v in range(n - 1) if mask >> v & 1])
            cert = canonical_form(g)
            if cert not in found:
                found[cert] = g
    # canonical relabelling, ordered by edge count then certificate
    return tuple(
        canonical_graph(found[cert])
        for cert in sorted(found, key=lambda c: (sum(bin(r).count("1") for r in c[1]), c))
    )


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected n-vertex graphs."""
    if not 1 <= n <= MAX_N:
        raise GraphError(
            f"built-in enumeration covers 1 <= n <= {MAX_N}; "
            "supply larger corpora as a graph6 file (e.g. from nauty's geng -c)"
        )
    return iter(_connected(n))


def connected_corpus(max_n: int, min_n: int = 1) -> list[Graph]:
    """All connected graphs with min_n <= n <= max_n, grouped by n."""
    out: list[Graph] = []
    for n in range(min_n, max_n + 1):
        out.extend(enumerate_connected(n))
    return out
