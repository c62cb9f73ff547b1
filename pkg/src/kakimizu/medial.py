"""Rebuild a special alternating diagram from its black-region graph.

The black regions of a special alternating diagram, one vertex each and one
edge per crossing, determine the diagram: thicken each vertex to a disk and
each edge to a band crossing itself once, and the boundary is the link.  This
module performs that construction combinatorially.  Given a plane bipartite
multigraph whose vertices are oriented (+1 anticlockwise, -1 clockwise, the
two classes of the bipartition), it produces the PD-coded diagram whose
black-region graph is the input again.  That round trip is the correctness
oracle for both directions, and the fixture generators build all example
diagrams this way.

Each strand arc of the diagram lives in one corner of the graph (a wedge
between anticlockwise-consecutive edge ends at a vertex).  Draw the edge e
from its anticlockwise endpoint x up to its clockwise endpoint y and put the
crossing on its midpoint; the four arms, anticlockwise from the incoming
under-strand, sit in the corners

    p0 = corner before e at x,   p1 = corner after e at y,
    p2 = corner before e at y,   p3 = corner after e at x.

The under-strand runs p0 -> p2 and the over-strand p1 -> p3, which makes the
strands alternate and every crossing positive, and makes the Seifert circle
around each +1 vertex run anticlockwise.
"""

from __future__ import annotations

from .diagram import Crossing, Diagram
from .planar import EmbeddedGraph

__all__ = ["medial"]

# a corner is (vertex, rotation index): the wedge anticlockwise after the
# dart at that index
Corner = tuple[int, int]


def _corner_before(g: EmbeddedGraph, dart: tuple[int, int]) -> Corner:
    v = g.dart_vertex(dart)
    rot = g.rotation[v]
    return (v, (rot.index(dart) - 1) % len(rot))


def _corner_after(g: EmbeddedGraph, dart: tuple[int, int]) -> Corner:
    v = g.dart_vertex(dart)
    rot = g.rotation[v]
    return (v, rot.index(dart))


def medial(g: EmbeddedGraph) -> Diagram:
    """The special alternating diagram whose black-region graph is ``g``.

    ``g`` must be connected, loop-free, have at least two edges, and carry a
    proper vertex orientation: every edge must join a +1 vertex to a -1
    vertex.  Edge weights and sides are ignored; every edge contributes one
    crossing, with the edge's id as the crossing id.
    """
    if len(g.edges) < 2:
        raise ValueError("need at least 2 edges to build a diagram")
    for e in g.edges.values():
        cls = (g.orientation.get(e.u), g.orientation.get(e.v))
        if sorted(cls) != [-1, 1]:
            raise ValueError(
                f"edge {e.id} does not join the two orientation classes"
            )
    if g.component_count() != 1:
        raise ValueError("graph is not connected")

    succ: dict[Corner, Corner] = {}
    arms: dict[int, tuple[Corner, Corner, Corner, Corner]] = {}
    for eid in g.edge_ids():
        e = g.edges[eid]
        x, y = (e.u, e.v) if g.orientation[e.u] == 1 else (e.v, e.u)
        dart_x = (eid, 0 if e.u == x else 1)
        dart_y = (eid, 1 if e.u == x else 0)
        p0 = _corner_before(g, dart_x)
        p1 = _corner_after(g, dart_y)
        p2 = _corner_before(g, dart_y)
        p3 = _corner_after(g, dart_x)
        arms[eid] = (p0, p1, p2, p3)
        succ[p0] = p2  # under-strand
        succ[p1] = p3  # over-strand
    if len(succ) != sum(len(r) for r in g.rotation.values()):
        raise ValueError("corner bookkeeping failed; orientation not proper")

    # Trace the strands and hand out labels along them.
    label: dict[Corner, int] = {}
    nxt = 1
    for start in sorted(succ):
        if start in label:
            continue
        c = start
        while c not in label:
            label[c] = nxt
            nxt += 1
            c = succ[c]
        if c != start:
            raise ValueError("strand tracing did not close up")

    crossings = [
        Crossing(eid, tuple(label[c] for c in arms[eid])) for eid in g.edge_ids()
    ]
    d = Diagram(crossings)
    if not d.is_special() or not all(d.over_in_first.values()):
        raise ValueError("medial construction produced a non-special diagram")
    return d
