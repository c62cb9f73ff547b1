"""Edgewise subdivision, ordered products, and the ball structure.

The complex of a single k-edge component of total weight m is the
edgewise subdivision of a (k-1)-simplex into m^(k-1) pieces.  A
multi-component complex factors as an ordered product of the complexes of
the two sides of any region that touches more than one component; applied
recursively this writes the whole complex as a product of per-component
subdivisions, so it triangulates a ball whose dimension is the sum of
(edge count - 1) over the components -- one less than the region count.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from math import comb

import networkx as nx

from .homology import HomologyReport, homology
from .kcomplex import (
    SimplicialComplex,
    build_complex,
    enumerate_vertices,
    order_vertices,
)
from .theta import (
    SPHERE,
    Placement,
    Region,
    ThetaComponent,
    ThetaGraph,
    compute_regions,
)

__all__ = [
    "BallReport",
    "SplitReport",
    "ball_report",
    "colour_schemes",
    "component_product",
    "esd",
    "ordered_product",
    "split_theta",
    "theta_to_esd_map",
    "validate_order",
    "verify_iso",
]


# -- edgewise subdivision ---------------------------------------------------


def colour_schemes(n: int, m: int, l: int):
    """All m-row matrices of l+1 distinct monotone columns over {0..n}
    whose row-major reading sequence is weakly increasing.

    Yields each matrix as its list of columns.
    """
    width = l + 1
    for seq in itertools.combinations_with_replacement(range(n + 1), m * width):
        rows = [seq[i * width : (i + 1) * width] for i in range(m)]
        cols = [tuple(r[j] for r in rows) for j in range(width)]
        if len(set(cols)) == width:
            yield cols


def esd(n: int, m: int) -> SimplicialComplex:
    """The edgewise subdivision of the n-simplex with vertices of weight m.

    Vertices are the size-m multisets over {0..n}; the top simplices are
    the colour schemes with n+1 columns.  Counts are checked against the
    closed forms C(n+m, n) and m^n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if m < 1:
        raise ValueError("m must be positive")
    vertices = sorted(itertools.combinations_with_replacement(range(n + 1), m))
    assert len(vertices) == comb(n + m, n)
    index = {v: i for i, v in enumerate(vertices)}
    maximal = {
        tuple(sorted(index[c] for c in cols)) for cols in colour_schemes(n, m, n)
    }
    assert len(maximal) == m**n
    return SimplicialComplex(
        vertices=list(vertices),
        maximal_simplices=sorted(list(s) for s in maximal),
    )


def theta_to_esd_map(t: ThetaGraph) -> dict[tuple, tuple]:
    """The bijection from weight vectors of a one-component graph to
    subdivision vertices: list each edge position as often as its weight."""
    if len(t.components) != 1:
        raise ValueError("theta graph must have a single component")
    k = t.components[0].k
    out = {}
    for u in enumerate_vertices(t):
        out[u] = tuple(j for j in range(k) for _ in range(u[j]))
    return out


# -- isomorphism checking ---------------------------------------------------


def verify_iso(c1: SimplicialComplex, c2: SimplicialComplex, f: dict) -> bool:
    """True iff ``f`` is a vertex bijection carrying the maximal simplices
    of ``c1`` onto those of ``c2``."""
    if set(f) != set(c1.vertices):
        return False
    image = list(f.values())
    if len(set(image)) != len(image) or set(image) != set(c2.vertices):
        return False
    m1 = {frozenset(f[c1.vertices[i]] for i in s) for s in c1.maximal_simplices}
    m2 = {frozenset(c2.vertices[i] for i in s) for s in c2.maximal_simplices}
    return (
        m1 == m2
        and len(m1) == len(c1.maximal_simplices)
        and len(m2) == len(c2.maximal_simplices)
    )


# -- ordered products -------------------------------------------------------


def _chain(simplex, order) -> list[int]:
    """The vertices of a simplex sorted by a total order, verifying that
    the order really is total and transitive on the simplex."""
    ranks = {}
    for v in simplex:
        ranks[v] = sum(1 for u in simplex if u != v and (u, v) in order)
    if sorted(ranks.values()) != list(range(len(simplex))):
        raise ValueError("order violates axioms")
    chain = sorted(simplex, key=lambda v: ranks[v])
    for i, u in enumerate(chain):
        for v in chain[i + 1 :]:
            if (u, v) not in order:
                raise ValueError("order violates axioms")
    return chain


def validate_order(c: SimplicialComplex) -> frozenset:
    """Check the order carried by ``c`` against the order axioms:
    antisymmetry, support exactly the adjacent pairs, and transitivity
    (hence totality) on every simplex."""
    if c.order is None:
        raise ValueError("complex carries no vertex order")
    order = frozenset(c.order)
    for i, j in order:
        if i != j and (j, i) in order:
            raise ValueError("order violates axioms")
    support = {frozenset(p) for p in order if p[0] != p[1]}
    edges = {frozenset(e) for e in c.skeleton_edges()}
    if support != edges:
        raise ValueError("order violates axioms")
    for s in c.maximal_simplices:
        _chain(s, order)
    return order


def _staircases(p: int, q: int):
    """Monotone lattice paths from (0,0) to (p,q), as vertex lists."""
    for xs in itertools.combinations(range(p + q), p):
        steps = set(xs)
        a = b = 0
        path = [(0, 0)]
        for i in range(p + q):
            if i in steps:
                a += 1
            else:
                b += 1
            path.append((a, b))
        yield path


def ordered_product(c1: SimplicialComplex, c2: SimplicialComplex) -> SimplicialComplex:
    """The product complex of two ordered complexes.

    Vertices are pairs; each pair of maximal simplices, read as chains in
    the factor orders, contributes one top simplex per monotone staircase
    through the grid of pairs.  The result carries the componentwise
    order, so products can be iterated.
    """
    o1 = validate_order(c1)
    o2 = validate_order(c2)
    vertices = sorted((u, v) for u in c1.vertices for v in c2.vertices)
    index = {v: i for i, v in enumerate(vertices)}
    maximal = set()
    for s1 in c1.maximal_simplices:
        chain1 = [c1.vertices[i] for i in _chain(s1, o1)]
        for s2 in c2.maximal_simplices:
            chain2 = [c2.vertices[i] for i in _chain(s2, o2)]
            p, q = len(chain1) - 1, len(chain2) - 1
            for path in _staircases(p, q):
                maximal.add(
                    tuple(sorted(index[(chain1[a], chain2[b])] for a, b in path))
                )
    product = SimplicialComplex(
        vertices=vertices,
        maximal_simplices=sorted(list(s) for s in maximal),
    )
    id1 = {v: i for i, v in enumerate(c1.vertices)}
    id2 = {v: i for i, v in enumerate(c2.vertices)}

    def leq(o, ids, a, b):
        return a == b or (ids[a], ids[b]) in o

    order = set()
    for i, j in product.skeleton_edges():
        (u1, v1), (u2, v2) = vertices[i], vertices[j]
        forward = leq(o1, id1, u1, u2) and leq(o2, id2, v1, v2)
        backward = leq(o1, id1, u2, u1) and leq(o2, id2, v2, v1)
        assert forward != backward, "product pairs must be strictly comparable"
        order.add((i, j) if forward else (j, i))
    product.order = frozenset(order)
    return product


# -- splitting at a region --------------------------------------------------


@dataclass
class SplitReport:
    """A theta graph cut along a curve inside one region.

    ``left`` keeps the lowest component; ``right`` keeps the rest.  The
    split region leaves a restricted copy of itself on each side, recorded
    so that the factor complexes can be ordered compatibly.
    """

    left: ThetaGraph
    right: ThetaGraph
    region: Region
    left_region: Region
    right_region: Region


def _incidence_tree(t: ThetaGraph, regions: list[Region]) -> nx.Graph:
    """The bipartite graph of components and regions, joined where a region
    contains a local face of a component.  For a planar placement this is
    always a tree, which the caller relies on."""
    g = nx.Graph()
    incidences = 0
    for r in regions:
        for cid, _face in r.faces:
            g.add_edge(("c", cid), ("r", r.id))
            incidences += 1
    total_faces = sum(c.k for c in t.components)
    if (
        incidences != total_faces
        or g.number_of_edges() != incidences
        or g.number_of_nodes() != incidences + 1
        or not nx.is_connected(g)
    ):
        raise ValueError("component-region incidence is not a tree")
    return g


def _restrict(delta: tuple[int, ...], t: ThetaGraph, sub: ThetaGraph) -> tuple[int, ...]:
    return tuple(delta[t.edge_position[eid]] for eid in sub.global_edge_order)


def _branch_theta(
    t: ThetaGraph,
    tree: nx.Graph,
    branches: list[set],
    region: Region,
    regions: list[Region],
) -> ThetaGraph:
    """Reassemble the components of some branches into their own graph.

    Each branch hangs off the split region through exactly one component;
    that component goes directly on the sphere with its outer face at the
    split region, and the rest of the branch keeps its nesting by walking
    the incidence tree.
    """
    region_wedge = dict(region.faces)  # component -> face, unique in a tree
    placements: dict[int, Placement] = {}
    for branch in branches:
        comps = [node[1] for node in branch if node[0] == "c"]
        roots = [c for c in comps if c in region_wedge]
        assert len(roots) == 1, "branch must attach to the split region once"
        root = roots[0]
        placements[root] = Placement(SPHERE, 0, region_wedge[root])
        seen = {("c", root)}
        frontier = [("c", root)]
        while frontier:
            node = frontier.pop()
            for mid in tree.neighbors(node):
                if mid in seen or mid == ("r", region.id):
                    continue
                seen.add(mid)
                faces = dict(regions[mid[1]].faces)
                for nxt in tree.neighbors(mid):
                    if nxt in seen:
                        continue
                    seen.add(nxt)
                    frontier.append(nxt)
                    placements[nxt[1]] = Placement(
                        node[1], faces[node[1]], faces[nxt[1]]
                    )
    comps_out = []
    for cid, pl in placements.items():
        old = t.component_by_id(cid)
        comps_out.append(
            ThetaComponent(id=cid, edges=old.edges, placement=pl, vertices=old.vertices)
        )
    sub = ThetaGraph(comps_out)
    sub.crossings = {
        e.id: t.crossings[e.id]
        for c in comps_out
        for e in c.edges
        if e.id in t.crossings
    }
    return sub


def split_theta(t: ThetaGraph, region_id: int | None = None) -> SplitReport:
    """Cut a multi-component graph along a curve inside one region.

    The region must touch at least two components.  Its complement in the
    incidence tree falls into branches; the branch holding the lowest
    component becomes ``left`` and the rest together become ``right``.
    Each side's regions are predicted from the original ones -- unchanged
    away from the cut, plus one restriction of the cut region per side --
    and the rebuilt placements are checked against that prediction.
    """
    if len(t.components) < 2:
        raise ValueError("cannot split a single-component theta graph")
    regions = compute_regions(t)
    by_region = {r.id: sorted({cid for cid, _ in r.faces}) for r in regions}
    if region_id is None:
        region_id = min(r for r, cs in by_region.items() if len(cs) >= 2)
    region = regions[region_id]
    assert region.id == region_id
    if len(by_region[region_id]) < 2:
        raise ValueError("split region touches fewer than two components")

    tree = _incidence_tree(t, regions)
    cut = tree.copy()
    cut.remove_node(("r", region_id))
    branches = list(nx.connected_components(cut))
    lowest = min(c.id for c in t.components)
    left_branches = [b for b in branches if ("c", lowest) in b]
    right_branches = [b for b in branches if ("c", lowest) not in b]
    assert left_branches and right_branches

    left = _branch_theta(t, tree, left_branches, region, regions)
    right = _branch_theta(t, tree, right_branches, region, regions)

    side_regions = []
    for sub in (left, right):
        in_side = {c.id for c in sub.components}
        predicted = {
            _restrict(r.delta(t), t, sub)
            for r in regions
            if r.id != region_id and {cid for cid, _ in r.faces} <= in_side
        }
        cut_delta = _restrict(region.delta(t), t, sub)
        predicted.add(cut_delta)
        sub_regions = compute_regions(sub)
        actual = {r.delta(sub) for r in sub_regions}
        if actual != predicted:
            raise ValueError("split produced unexpected regions")
        side_regions.append(
            next(r for r in sub_regions if r.delta(sub) == cut_delta)
        )
    return SplitReport(left, right, region, side_regions[0], side_regions[1])


# -- products over all components -------------------------------------------


def _project(w: tuple[int, ...], t: ThetaGraph, sub: ThetaGraph) -> tuple[int, ...]:
    return tuple(w[t.edge_position[eid]] for eid in sub.global_edge_order)


def _transport_order(
    k: SimplicialComplex, region: Region, product: SimplicialComplex, f: dict
) -> SimplicialComplex:
    """Order a product complex by carrying a region-broken order of the
    isomorphic weight-vector complex across the isomorphism ``f``."""
    ids = {v: i for i, v in enumerate(product.vertices)}
    order = frozenset(
        (ids[f[k.vertices[i]]], ids[f[k.vertices[j]]])
        for i, j in order_vertices(k, region)
    )
    return SimplicialComplex(
        vertices=product.vertices,
        maximal_simplices=product.maximal_simplices,
        order=order,
    )


def component_product(t: ThetaGraph) -> tuple[SimplicialComplex, dict]:
    """The iterated ordered product of the per-component complexes.

    Returns the product complex together with the vertex map sending each
    weight vector of ``t`` to its nested pair of per-side restrictions.
    Splitting happens at regions touching several components, and at each
    level the two factors are ordered by the restricted copies of the
    split region, as the product decomposition requires.
    """
    if len(t.components) <= 1:
        c = build_complex(t)
        return c, {v: v for v in c.vertices}
    s = split_theta(t)
    kl = build_complex(s.left)
    kr = build_complex(s.right)
    pl, fl = component_product(s.left)
    pr, fr = component_product(s.right)
    if not verify_iso(kl, pl, fl) or not verify_iso(kr, pr, fr):
        raise AssertionError("factor complex does not match its product form")
    left = _transport_order(kl, s.left_region, pl, fl)
    right = _transport_order(kr, s.right_region, pr, fr)
    product = ordered_product(left, right)
    f = {
        w: (fl[_project(w, t, s.left)], fr[_project(w, t, s.right)])
        for w in enumerate_vertices(t)
    }
    return product, f


# -- ball structure ---------------------------------------------------------


@dataclass
class BallReport:
    dimension: int
    expected_dimension: int
    pure: bool
    region_count: int
    homology: HomologyReport

    def ok(self) -> bool:
        counts = self.region_count == self.dimension + 1 if self.region_count else True
        return (
            self.dimension == self.expected_dimension
            and self.pure
            and counts
            and self.homology.is_trivial()
            and self.homology.euler == 1
        )

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "expected_dimension": self.expected_dimension,
            "pure": self.pure,
            "region_count": self.region_count,
            "homology": self.homology.to_json(),
            "ok": self.ok(),
        }


def ball_report(t: ThetaGraph, c: SimplicialComplex | None = None) -> BallReport:
    """Collect the checkable pieces of the ball statement: dimension equal
    to the sum of (edge count - 1), purity, one more region than the
    dimension, and trivial reduced homology with Euler characteristic 1."""
    if c is None:
        c = build_complex(t)
    expected = sum(comp.k - 1 for comp in t.components)
    regions = compute_regions(t) if t.components else []
    return BallReport(
        dimension=c.dim,
        expected_dimension=expected,
        pure=c.is_pure(),
        region_count=len(regions),
        homology=homology(c),
    )
