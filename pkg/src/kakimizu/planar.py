"""Planar multigraphs given by rotation systems.

A graph embedded in the sphere is recorded combinatorially: at each vertex we
list the cyclic (anticlockwise) order of the edge ends meeting it.  Faces are
traced from this data alone.  Following a directed edge into its head, the
face boundary continues along the rotation predecessor of the arriving end;
this keeps every face on the left of its (anticlockwise) boundary walk.  On
the sphere the count of traced faces then satisfies F = E - V + 1 + C, where
C is the number of connected components, and we assert this after every
surgery.

Edges carry a transverse orientation.  Rather than naming the two sides, we
store the flag ``pos_left``: the positive side of the edge is the one on the
left when the edge is walked from ``u`` to ``v``.  A flag is robust under
face retracing -- faces are renumbered freely by surgeries, but "left of
u -> v" never changes meaning.

Vertices carry an orientation class in {+1, -1, 0}: +1 for a vertex whose
attaching circle runs anticlockwise, -1 for clockwise, 0 for unoriented.
Black-region graphs of special alternating diagrams are bipartite between the
two classes, and cyclic edge orders of theta graphs are read at the +1 end.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

__all__ = [
    "Edge",
    "EmbeddedGraph",
    "HalfEdge",
]

# A dart is one end of an edge: (edge id, end) with end 0 at u and end 1 at v.
Dart = tuple[int, int]

# A half-edge is a directed edge: (edge id, direction) with direction 0
# meaning u -> v and direction 1 meaning v -> u.
HalfEdge = tuple[int, int]


@dataclass
class Edge:
    """One edge of an embedded multigraph.

    ``crossings`` lists the diagram crossings sitting along the edge, in
    transverse order from the negative side to the positive side; it is empty
    for edges that do not come from a diagram (added arcs, hand-built
    graphs).
    """

    id: int
    u: int
    v: int
    weight: int = 1
    pos_left: bool = True
    crossings: tuple[int, ...] = ()

    def other(self, vertex: int) -> int:
        if vertex == self.u:
            return self.v
        if vertex == self.v:
            return self.u
        raise ValueError(f"vertex {vertex} not an endpoint of edge {self.id}")


class EmbeddedGraph:
    """A multigraph embedded in the sphere, with oriented edges.

    The embedding is the rotation system ``rotation``: for each vertex, the
    anticlockwise cyclic list of darts.  All structural operations keep the
    rotation lists and the edge dict consistent and re-check Euler's formula.
    """

    def __init__(self) -> None:
        self.orientation: dict[int, int] = {}
        self.edges: dict[int, Edge] = {}
        self.rotation: dict[int, list[Dart]] = {}

    # -- construction -----------------------------------------------------

    def add_vertex(self, v: int, orientation: int = 0) -> None:
        if v in self.rotation:
            raise ValueError(f"duplicate vertex {v}")
        self.rotation[v] = []
        self.orientation[v] = orientation

    def add_edge_at_end(self, edge: Edge) -> None:
        """Append an edge whose darts go at the end of both rotation lists.

        Only safe while building a graph whose rotations are written out
        explicitly afterwards, or for leaves; prefer :meth:`insert_edge` when
        the embedding matters.
        """
        self._register(edge)
        self.rotation[edge.u].append((edge.id, 0))
        self.rotation[edge.v].append((edge.id, 1))

    def insert_edge(self, edge: Edge, after_u: Dart, after_v: Dart) -> None:
        """Insert an edge whose u-dart follows ``after_u`` anticlockwise at u
        and whose v-dart follows ``after_v`` at v."""
        self._register(edge)
        for vertex, end, anchor in ((edge.u, 0, after_u), (edge.v, 1, after_v)):
            rot = self.rotation[vertex]
            i = rot.index(anchor)
            rot.insert(i + 1, (edge.id, end))

    def _register(self, edge: Edge) -> None:
        if edge.id in self.edges:
            raise ValueError(f"duplicate edge id {edge.id}")
        for vertex in (edge.u, edge.v):
            if vertex not in self.rotation:
                raise ValueError(f"unknown vertex {vertex}")
        if edge.u == edge.v:
            raise ValueError(f"loop edge {edge.id} not supported in embeddings")
        self.edges[edge.id] = edge

    def remove_edge(self, eid: int) -> Edge:
        edge = self.edges.pop(eid)
        self.rotation[edge.u].remove((eid, 0))
        self.rotation[edge.v].remove((eid, 1))
        return edge

    def copy(self) -> "EmbeddedGraph":
        g = EmbeddedGraph()
        g.orientation = dict(self.orientation)
        g.edges = {eid: replace(e) for eid, e in self.edges.items()}
        g.rotation = {v: list(r) for v, r in self.rotation.items()}
        return g

    # -- basic queries ----------------------------------------------------

    def vertex_ids(self) -> list[int]:
        return sorted(self.rotation)

    def edge_ids(self) -> list[int]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def dart_vertex(self, dart: Dart) -> int:
        edge = self.edges[dart[0]]
        return edge.u if dart[1] == 0 else edge.v

    def half_edge_tail(self, h: HalfEdge) -> int:
        edge = self.edges[h[0]]
        return edge.u if h[1] == 0 else edge.v

    def half_edge_head(self, h: HalfEdge) -> int:
        edge = self.edges[h[0]]
        return edge.v if h[1] == 0 else edge.u

    def rotation_next(self, dart: Dart) -> Dart:
        rot = self.rotation[self.dart_vertex(dart)]
        return rot[(rot.index(dart) + 1) % len(rot)]

    def rotation_prev(self, dart: Dart) -> Dart:
        rot = self.rotation[self.dart_vertex(dart)]
        return rot[(rot.index(dart) - 1) % len(rot)]

    def component_count(self) -> int:
        seen: set[int] = set()
        count = 0
        for start in self.vertex_ids():
            if start in seen:
                continue
            count += 1
            stack = [start]
            seen.add(start)
            while stack:
                v = stack.pop()
                for eid, _end in self.rotation[v]:
                    w = self.edges[eid].other(v)
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return count

    def _edge_components(self) -> int:
        """Connected components that contain at least one edge."""
        isolated = sum(1 for v in self.rotation.values() if not v)
        return self.component_count() - isolated

    # -- faces ------------------------------------------------------------

    def next_in_face(self, h: HalfEdge) -> HalfEdge:
        """The successor of half-edge ``h`` on the face to its left.

        Arriving at the head of ``h``, the left face occupies the wedge
        whose anticlockwise-upper boundary is the arriving end, so its
        boundary leaves along the rotation predecessor of that end.
        """
        eid, direction = h
        # The arriving end is the head of h: end 1 when walking u -> v.
        arrival: Dart = (eid, 1) if direction == 0 else (eid, 0)
        nxt = self.rotation_prev(arrival)
        return (nxt[0], 0 if nxt[1] == 0 else 1)

    def trace_faces(self) -> list[list[HalfEdge]]:
        """All faces, each an anticlockwise cycle of half-edges.

        Faces are rotated to start at their lexicographically least half-edge
        and the list is sorted by that key, so face indices are reproducible.
        """
        remaining: set[HalfEdge] = set()
        for eid in self.edges:
            remaining.add((eid, 0))
            remaining.add((eid, 1))
        faces: list[list[HalfEdge]] = []
        while remaining:
            h = min(remaining)
            cycle: list[HalfEdge] = []
            cur = h
            while True:
                cycle.append(cur)
                remaining.discard(cur)
                cur = self.next_in_face(cur)
                if cur == h:
                    break
            pivot = cycle.index(min(cycle))
            faces.append(cycle[pivot:] + cycle[:pivot])
        faces.sort(key=lambda c: c[0])
        if self.edges:
            # Each connected component must close up spherically.  The traced
            # walks do not merge across components: a disconnected graph on
            # the sphere has E - V + 1 + C faces but E - V + 2C boundary
            # walks, one pair of walks bounding each shared face.
            with_edges = {v for v in self.rotation if self.rotation[v]}
            expected = len(self.edges) - len(with_edges) + 2 * self._edge_components()
            if len(faces) != expected:
                raise ValueError(
                    f"embedding is not spherical: {len(faces)} faces, "
                    f"expected {expected}"
                )
        return faces

    def face_index(self) -> dict[HalfEdge, int]:
        """Map each half-edge to the index of the face on its left."""
        index: dict[HalfEdge, int] = {}
        for i, cycle in enumerate(self.trace_faces()):
            for h in cycle:
                index[h] = i
        return index

    def positive_face(self, eid: int, face_of: dict[HalfEdge, int]) -> int:
        edge = self.edges[eid]
        return face_of[(eid, 0 if edge.pos_left else 1)]

    def negative_face(self, eid: int, face_of: dict[HalfEdge, int]) -> int:
        edge = self.edges[eid]
        return face_of[(eid, 1 if edge.pos_left else 0)]

    def corner_face(self, dart: Dart, face_of: dict[HalfEdge, int]) -> int:
        """The face in the corner anticlockwise after ``dart`` at its vertex.

        Equivalently the face to the left of the half-edge leaving along
        ``dart``.
        """
        h: HalfEdge = (dart[0], 0 if dart[1] == 0 else 1)
        return face_of[h]

    # -- views ------------------------------------------------------------

    def parallel_classes(self) -> dict[tuple[int, int], list[int]]:
        """Edge ids grouped by unordered endpoint pair, each group sorted."""
        groups: dict[tuple[int, int], list[int]] = {}
        for eid in self.edge_ids():
            e = self.edges[eid]
            key = (min(e.u, e.v), max(e.u, e.v))
            groups.setdefault(key, []).append(eid)
        return groups

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return (
            f"EmbeddedGraph(V={len(self.rotation)}, E={len(self.edges)}, "
            f"edges={sorted(self.edges)})"
        )
