"""Seeded random theta graphs for property tests.

Any assignment of weighted edge-circles to a nesting forest is a valid
theta graph, so sampling is direct: pick a component count, give each
component a cyclic edge list with a random weight distribution, and hang
it off the sphere or an earlier component at random wedges.  Instances
whose complex would be large are rejected up front using the closed-form
vertex count (weights on a k-circle with total m are compositions, so the
complex has prod C(m_i + k_i - 1, k_i - 1) vertices).
"""

from __future__ import annotations

import random
from math import comb, factorial

from .theta import SPHERE, Placement, ThetaComponent, ThetaEdge, ThetaGraph

__all__ = [
    "predicted_cell_count",
    "predicted_vertex_count",
    "random_theta",
    "random_theta_family",
]


def predicted_vertex_count(t: ThetaGraph) -> int:
    out = 1
    for c in t.components:
        out *= comb(c.total_weight() + c.k - 1, c.k - 1)
    return out


def predicted_cell_count(t: ThetaGraph) -> int:
    """Maximal-simplex count: per component m^(k-1), times the staircase
    multiplicity of the product of the per-component factors."""
    out = 1
    dims = 0
    for c in t.components:
        out *= c.total_weight() ** (c.k - 1)
        dims += c.k - 1
    multi = factorial(dims)
    for c in t.components:
        multi //= factorial(c.k - 1)
    return out * multi


def random_theta(
    rng: random.Random,
    max_components: int = 3,
    max_edges: int = 4,
    max_weight: int = 3,
    max_vertices: int = 150,
    max_cells: int = 150,
) -> ThetaGraph:
    """One random theta graph whose complex stays desk-sized: at most
    ``max_vertices`` vertices and ``max_cells`` maximal simplices."""
    while True:
        n_comp = rng.randint(1, max_components)
        comps: list[ThetaComponent] = []
        next_edge = 0
        for cid in range(n_comp):
            k = rng.randint(2, max_edges)
            m = rng.randint(1, max_weight)
            weights = [0] * k
            for _ in range(m):
                weights[rng.randrange(k)] += 1
            edges = [ThetaEdge(next_edge + j, weights[j]) for j in range(k)]
            next_edge += k
            parent = SPHERE if cid == 0 else rng.choice([SPHERE, *range(cid)])
            if parent == SPHERE:
                placement = Placement(SPHERE, 0, rng.randrange(k))
            else:
                placement = Placement(
                    parent, rng.randrange(comps[parent].k), rng.randrange(k)
                )
            comps.append(ThetaComponent(cid, edges, placement))
        t = ThetaGraph(comps)
        if (
            predicted_vertex_count(t) <= max_vertices
            and predicted_cell_count(t) <= max_cells
        ):
            return t


def random_theta_family(seed: int, count: int, **kwargs) -> list[ThetaGraph]:
    rng = random.Random(seed)
    return [random_theta(rng, **kwargs) for _ in range(count)]
