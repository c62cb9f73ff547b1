"""The complex of weight vectors on a theta graph.

Vertices are the nonnegative integer weightings of the theta edges whose
per-component totals match the input weights.  Adding a region to a vertex
raises the weight by 1 on each edge the region meets only on its negative
side and lowers it on each edge met only on the positive side; this is
defined only when no weight would go negative.  Two vertices are adjacent
when one is obtained from the other by adding a set of regions that can be
ordered so every intermediate vector is again a vertex, and every such set
is found by solving a two-colouring problem on the regions.  The complex is
flag, so its simplices are exactly the cliques of this adjacency graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

import networkx as nx

from .theta import Region, ThetaGraph, compute_regions

__all__ = [
    "SimplicialComplex",
    "adjacency",
    "base_vertex",
    "build_complex",
    "cyclic_order_simplices",
    "distance",
    "enumerate_vertices",
    "order_regions",
    "order_vertices",
    "ordered_by",
    "region_add",
]

Vertex = tuple[int, ...]


@dataclass
class SimplicialComplex:
    """A finite complex given by its maximal simplices.

    ``vertices`` is canonically sorted and simplices refer to it by index.
    Complexes built from a theta graph keep the graph and its regions so
    that vertex orders can be derived later; generic complexes leave those
    fields empty.
    """

    vertices: list
    maximal_simplices: list[list[int]]
    theta: ThetaGraph | None = None
    regions: list[Region] = field(default_factory=list)
    # optional vertex order (set of directed index pairs), e.g. from
    # order_vertices; products of ordered complexes need it
    order: frozenset | None = None

    @property
    def dim(self) -> int:
        return max(len(s) for s in self.maximal_simplices) - 1

    def is_pure(self) -> bool:
        return len({len(s) for s in self.maximal_simplices}) == 1

    def index(self, v) -> int:
        return self.vertices.index(v)

    def skeleton_edges(self) -> set[tuple[int, int]]:
        out: set[tuple[int, int]] = set()
        for s in self.maximal_simplices:
            out.update(itertools.combinations(s, 2))
        return out

    def all_simplices(self) -> set[tuple[int, ...]]:
        """Every face of every maximal simplex, including the empty one."""
        out: set[tuple[int, ...]] = set()
        for s in self.maximal_simplices:
            for size in range(len(s) + 1):
                out.update(itertools.combinations(s, size))
        return out

    def to_json(self, order_region: int | None = None) -> dict:
        doc = {
            "edge_order": list(self.theta.global_edge_order) if self.theta else [],
            "vertices": [list(v) for v in self.vertices],
            "maximal_simplices": [list(s) for s in self.maximal_simplices],
        }
        if order_region is not None:
            doc["order_region"] = order_region
        return doc


# -- vertices --------------------------------------------------------------


def base_vertex(t: ThetaGraph) -> Vertex:
    return t.weights()


def _compositions(total: int, parts: int):
    """All ways to write ``total`` as an ordered sum of ``parts`` >= 0."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_vertices(t: ThetaGraph) -> list[Vertex]:
    per_comp = [
        sorted(_compositions(c.total_weight(), c.k)) for c in t.components
    ]
    vertices = sorted(
        tuple(itertools.chain.from_iterable(choice))
        for choice in itertools.product(*per_comp)
    )
    assert len(vertices) == _vertex_count(t)
    return vertices


def _vertex_count(t: ThetaGraph) -> int:
    count = 1
    for c in t.components:
        count *= comb(c.total_weight() + c.k - 1, c.k - 1)
    return count


# -- region moves ----------------------------------------------------------


def region_add(v: Vertex, r: Region, t: ThetaGraph) -> Vertex | None:
    """``v`` shifted by the region's delta, or None where undefined."""
    out = list(v)
    for eid in r.boundary_minus:
        i = t.edge_position[eid]
        if out[i] == 0:
            return None
        out[i] -= 1
    for eid in r.boundary_plus:
        out[t.edge_position[eid]] += 1
    return tuple(out)


def order_regions(a: list[Region], u: Vertex, t: ThetaGraph) -> list[Region]:
    """Order ``a`` so the regions can be added starting from ``u``.

    Greedy by lowest region id; for genuinely adjacent vertices this never
    sticks, so sticking signals corrupted input.
    """
    remaining = sorted(a, key=lambda r: r.id)
    out: list[Region] = []
    current = u
    while remaining:
        for r in remaining:
            nxt = region_add(current, r, t)
            if nxt is not None:
                remaining.remove(r)
                out.append(r)
                current = nxt
                break
        else:
            raise RuntimeError("stuck: region set admits no addition order")
    return out


def adjacency(
    u: Vertex, v: Vertex, regions: list[Region], t: ThetaGraph
) -> list[Region] | None:
    """The set of regions carrying ``u`` to ``v``, or None when not adjacent.

    Each theta edge is in the positive boundary of exactly one region and
    the negative boundary of another; a weight difference constrains
    whether those owners are in the set, and equal weights force the owners
    into or out of it together.  Propagation either fails (not adjacent) or
    determines the set and its complement; the returned set is the one
    whose deltas sum to ``v - u``.
    """
    if len(u) != t.n_edges or len(v) != t.n_edges:
        raise ValueError("vertices do not match the theta graph")
    if u == v:
        return None
    d = [b - a for a, b in zip(u, v)]
    if any(abs(x) > 1 for x in d):
        return None

    plus_owner: dict[int, int] = {}
    minus_owner: dict[int, int] = {}
    for r in regions:
        for eid in r.boundary_plus:
            plus_owner[eid] = r.id
        for eid in r.boundary_minus:
            minus_owner[eid] = r.id

    value: dict[int, bool] = {}
    same: dict[int, list[int]] = {r.id: [] for r in regions}
    pending: list[tuple[int, bool]] = []
    for eid in t.global_edge_order:
        de = d[t.edge_position[eid]]
        rp, rm = plus_owner[eid], minus_owner[eid]
        if de == 1:
            pending.append((rp, True))
            pending.append((rm, False))
        elif de == -1:
            pending.append((rp, False))
            pending.append((rm, True))
        else:
            same[rp].append(rm)
            same[rm].append(rp)
    while pending:
        rid, val = pending.pop()
        if rid in value:
            if value[rid] != val:
                return None
            continue
        value[rid] = val
        for other in same[rid]:
            pending.append((other, val))
    if len(value) != len(regions):
        # the constraint graph on regions is connected, so this cannot
        # happen for distinct vertices; guard rather than guess
        raise RuntimeError("underdetermined region set")
    a = [r for r in regions if value[r.id]]
    if not a or len(a) == len(regions):
        return None
    order_regions(a, u, t)  # adjacency requires a valid addition order
    return a


# -- the complex -----------------------------------------------------------


def build_complex(t: ThetaGraph) -> SimplicialComplex:
    """All vertices, with maximal simplices as maximal cliques of the
    adjacency graph; the complex is flag, so this is the whole complex."""
    if not t.components:
        return SimplicialComplex(vertices=[()], maximal_simplices=[[0]], theta=t)
    regions = compute_regions(t)
    vertices = enumerate_vertices(t)
    g = nx.Graph()
    g.add_nodes_from(range(len(vertices)))
    for i, j in itertools.combinations(range(len(vertices)), 2):
        if adjacency(vertices[i], vertices[j], regions, t) is not None:
            g.add_edge(i, j)
    simplices = sorted(sorted(c) for c in nx.find_cliques(g))
    return SimplicialComplex(
        vertices=vertices, maximal_simplices=simplices, theta=t, regions=regions
    )


def cyclic_order_simplices(t: ThetaGraph) -> set[frozenset]:
    """Maximal simplices found from their definition, not from cliques.

    A set of vertices spans a maximal simplex when some ordering of all
    regions, added one at a time, walks through exactly those vertices and
    returns to its start.  The start is determined by the current vertex
    and the regions still unused (their deltas sum to the remaining
    displacement), so walk completions can be memoized without it.  The
    flag property says this agrees with ``build_complex``; the test suite
    compares the two.
    """
    if not t.components:
        return {frozenset({()})}
    regions = compute_regions(t)
    deltas = [r.delta(t) for r in regions]
    m = len(regions)
    vset = set(enumerate_vertices(t))
    memo: dict[tuple[Vertex, int], frozenset] = {}

    def step(v: Vertex, d: tuple[int, ...]) -> Vertex:
        return tuple(a + b for a, b in zip(v, d))

    def completions(v: Vertex, used: int) -> frozenset:
        key = (v, used)
        if key in memo:
            return memo[key]
        remaining = [i for i in range(m) if not used >> i & 1]
        if len(remaining) == 1:
            # the last region closes the walk back to its start
            w = step(v, deltas[remaining[0]])
            out = frozenset({frozenset()}) if w in vset else frozenset()
        else:
            acc = set()
            for r in remaining:
                w = step(v, deltas[r])
                if w in vset:
                    for tail in completions(w, used | 1 << r):
                        acc.add(tail | {w})
            out = frozenset(acc)
        memo[key] = out
        return out

    orbits: set[frozenset] = set()
    for u in vset:
        for tail in completions(u, 0):
            orbits.add(tail | {u})
    return orbits


def distance(c: SimplicialComplex, u, v) -> int:
    g = nx.Graph()
    g.add_nodes_from(range(len(c.vertices)))
    g.add_edges_from(c.skeleton_edges())
    try:
        return nx.shortest_path_length(g, c.index(u), c.index(v))
    except nx.NetworkXNoPath as exc:
        raise ValueError("complex is disconnected") from exc


def order_vertices(c: SimplicialComplex, r: Region) -> set[tuple[int, int]]:
    """Orient each adjacency: ``i`` comes before ``j`` when the region set
    carrying vertex i to vertex j omits ``r``.

    Within a simplex the vertices sit on a cycle of single-region moves;
    dropping the moves through ``r`` breaks every cycle into a line, giving
    a relation that is antisymmetric, defined exactly on adjacent pairs,
    and transitive on every simplex.
    """
    if c.theta is None:
        raise ValueError("complex does not carry a theta graph")
    order: set[tuple[int, int]] = set()
    for i, j in c.skeleton_edges():
        a = adjacency(c.vertices[i], c.vertices[j], c.regions, c.theta)
        if any(reg.id == r.id for reg in a):
            order.add((j, i))
        else:
            order.add((i, j))
    return order


def ordered_by(c: SimplicialComplex, r: Region) -> SimplicialComplex:
    """Copy of ``c`` carrying the vertex order broken at region ``r``."""
    return SimplicialComplex(
        vertices=c.vertices,
        maximal_simplices=c.maximal_simplices,
        theta=c.theta,
        regions=c.regions,
        order=frozenset(order_vertices(c, r)),
    )
