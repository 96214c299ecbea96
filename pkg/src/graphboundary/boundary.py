"""Steinerberger and CEJZ boundaries, boundary stability numbers, witnesses.

For a connected graph and vertices v, u the stability sum is

    beta(v, u) = sum over neighbours w of v of [d(v, u) - d(w, u)]

and beta(v) is its maximum over all u (u = v included).  On graphs with at
least two vertices, v is a Steinerberger boundary vertex iff beta(v) >= 1.
All arithmetic is exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graph import (
    DistanceMatrix,
    Graph,
    GraphError,
    distance_matrix,
    has_cycle_through,
    require_connected,
)


def beta_pair(g: Graph, dm: DistanceMatrix, v: int, u: int) -> int:
    dvu = dm[v][u]
    return sum(dvu - dm[w][u] for w in g.neighbors(v))


def beta(g: Graph, dm: DistanceMatrix, v: int) -> tuple[int, frozenset[int]]:
    """Boundary stability number of ``v`` with every maximising ``u``."""
    nbrs = g.neighbors(v)
    deg = len(nbrs)
    row_v = dm[v]
    best = None
    argmax: list[int] = []
    for u in range(g.n):
        val = deg * row_v[u] - sum(dm[w][u] for w in nbrs)
        if best is None or val > best:
            best, argmax = val, [u]
        elif val == best:
            argmax.append(u)
    return best, frozenset(argmax)


def steinerberger_literal(g: Graph, dm: DistanceMatrix, v: int) -> bool:
    """Membership by the averaged definition: some u has mean neighbour
    distance strictly below d(v, u).  Single-vertex graphs are all boundary."""
    if g.n == 1:
        return True
    deg = g.degree(v)
    for u in range(g.n):
        mean = Fraction(sum(dm[w][u] for w in g.neighbors(v)), deg)
        if mean < dm[v][u]:
            return True
    return False


def cejz_witnesses(g: Graph, dm: DistanceMatrix, v: int) -> frozenset[int]:
    """All u with d(w, u) <= d(v, u) for every neighbour w of v."""
    nbrs = g.neighbors(v)
    return frozenset(
        u for u in range(g.n) if all(dm[w][u] <= dm[v][u] for w in nbrs)
    )


@dataclass(frozen=True)
class VertexBoundary:
    id: int
    ecc: int
    beta: int
    beta_witnesses: frozenset[int]
    cejz_witnesses: frozenset[int]
    in_cejz: bool
    in_steinerberger: bool


@dataclass(frozen=True)
class BoundaryAnalysis:
    n: int
    diameter: int
    max_degree: int
    vertices: tuple[VertexBoundary, ...]

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def steinerberger(self) -> frozenset[int]:
        return frozenset(x.id for x in self.vertices if x.in_steinerberger)

    @property
    def cejz(self) -> frozenset[int]:
        return frozenset(x.id for x in self.vertices if x.in_cejz)

    @property
    def betas(self) -> tuple[int, ...]:
        return tuple(x.beta for x in self.vertices)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "diameter": self.diameter,
            "max_degree": self.max_degree,
            "vertices": [
                {
                    "id": x.id,
                    "ecc": x.ecc,
                    "beta": x.beta,
                    "beta_witnesses": sorted(x.beta_witnesses),
                    "cejz": x.in_cejz,
                    "steinerberger": x.in_steinerberger,
                }
                for x in self.vertices
            ],
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def full_analysis(g: Graph, dm: Optional[DistanceMatrix] = None) -> BoundaryAnalysis:
    require_connected(g)
    if g.n == 0:
        raise GraphError("boundary analysis needs at least one vertex")
    if dm is None:
        dm = distance_matrix(g)
    out = []
    for v in range(g.n):
        b, wit = beta(g, dm, v)
        cw = cejz_witnesses(g, dm, v)
        out.append(
            VertexBoundary(
                id=v,
                ecc=max(dm[v]),
                beta=b,
                beta_witnesses=wit,
                cejz_witnesses=cw,
                in_cejz=bool(cw),
                in_steinerberger=(g.n == 1 or b >= 1),
            )
        )
    return BoundaryAnalysis(
        n=g.n,
        diameter=max(x.ecc for x in out),
        max_degree=g.max_degree,
        vertices=tuple(out),
    )


def steinerberger_boundary(g: Graph) -> frozenset[int]:
    return full_analysis(g).steinerberger


def cejz_boundary(g: Graph) -> frozenset[int]:
    return full_analysis(g).cejz


@dataclass(frozen=True)
class IsoperimetricResult:
    boundary_size: int
    bound_value: Fraction
    holds: bool


def isoperimetric_check(analysis: BoundaryAnalysis) -> IsoperimetricResult:
    """Compare |boundary| against |V| / (2 * max_degree * diameter)."""
    if analysis.n < 2:
        raise GraphError("isoperimetric bound needs at least two vertices (diameter 0)")
    size = len(analysis.steinerberger)
    bound = Fraction(analysis.n, 2 * analysis.max_degree * analysis.diameter)
    return IsoperimetricResult(size, bound, size >= bound)


def degree2_boundary_criterion(g: Graph, v: int) -> bool:
    """For a degree-2 vertex: boundary membership via cycle existence."""
    if g.degree(v) != 2:
        raise GraphError(f"vertex {v} has degree {g.degree(v)}, expected 2")
    return has_cycle_through(g, v)
