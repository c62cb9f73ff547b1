"""Special alternating link diagrams in PD notation.

A link diagram is stored as a 4-valent map on the sphere: vertices are
crossings and edges are the strand arcs between them.  Each crossing records
the labels of its four incident arcs anticlockwise starting at the incoming
under-strand (PD convention), so positions 0 and 2 are the under-strand (in,
out) and positions 1 and 3 carry the over-strand.  Strand orientations are
recovered by propagating the in/out constraints around the diagram.

From this single structure everything else is derived combinatorially:

* faces, by tracing the rotation system;
* the checkerboard colouring, from corner parities (a diagram is alternating
  exactly when every arc has one under end and one over end, and then every
  face meets its crossings in corners of a single parity);
* Seifert circles, by smoothing every crossing respecting orientation; in a
  special diagram each circle bounds a black region, and the regions the
  circles bound make up the Seifert surface;
* the black-region graph (a vertex in each black region, an edge through
  each crossing) with its rotation system, vertex orientations and
  transversely oriented edges, and the white-region graph used by the
  fibredness criterion.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .planar import Edge, EmbeddedGraph

__all__ = [
    "Crossing",
    "Diagram",
    "SeifertData",
    "ValidationReport",
    "black_region_graph",
    "is_fibred",
    "parse_diagram",
    "seifert",
    "validate",
    "white_region_graph",
]

UNDER_IN, OVER_A, UNDER_OUT, OVER_B = 0, 1, 2, 3


@dataclass(frozen=True)
class Crossing:
    id: int
    pd: tuple[int, int, int, int]


class Diagram:
    """A PD-coded link diagram with orientations resolved.

    Raises ``ValueError`` on structurally invalid input (bad labels, open
    strands, inconsistent orientations, non-spherical face tracing).
    """

    def __init__(self, crossings: list[Crossing]):
        if not crossings:
            raise ValueError("no crossings")
        if len(crossings) < 2:
            raise ValueError("diagrams need at least 2 crossings")
        self.crossings = sorted(crossings, key=lambda c: c.id)
        ids = [c.id for c in self.crossings]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate crossing ids")
        self.n = len(self.crossings)
        self.by_id = {c.id: c for c in self.crossings}

        # Arms: label -> the one or two (crossing id, position) pairs.
        arms: dict[int, list[tuple[int, int]]] = {}
        for c in self.crossings:
            if len(c.pd) != 4:
                raise ValueError(f"crossing {c.id}: pd tuple must have 4 labels")
            for pos, lab in enumerate(c.pd):
                arms.setdefault(lab, []).append((c.id, pos))
        for lab, ends in arms.items():
            if len(ends) != 2:
                raise ValueError(f"label multiplicity: label {lab} appears {len(ends)} time(s)")
        if sorted(arms) != list(range(1, 2 * self.n + 1)):
            raise ValueError("labels must be 1..2n")
        self.arms = arms

        self.over_in_first = self._orient()
        self.components = self._trace_components()
        self.component_of = {
            lab: i for i, comp in enumerate(self.components) for lab in comp
        }
        self.map = self._build_map()
        self.faces = self.map.trace_faces()
        self.face_of = {h: i for i, f in enumerate(self.faces) for h in f}

    # -- construction helpers ---------------------------------------------

    def _orient(self) -> dict[int, bool]:
        """Decide, per crossing, whether the over-strand enters at position 1.

        Each arm is "in" or "out": the under-strand fixes positions 0 (in)
        and 2 (out), and each arc must have exactly one in end.  This is a
        parity constraint system over one boolean per crossing, solved by
        union-find with parities; components not forced by any under-arm get
        the value True at their smallest crossing id.
        """
        # Union-find over crossing ids plus the constant node None (= True).
        parent: dict[object, object] = {None: None}
        parity: dict[object, int] = {None: 0}

        def find(x: object) -> tuple[object, int]:
            path = []
            p = 0
            while parent.setdefault(x, x) != x:
                path.append(x)
                p ^= parity.setdefault(x, 0)
                x = parent[x]
            acc = p
            for y in path:
                oldp = parity[y]
                parent[y] = x
                parity[y] = acc
                acc ^= oldp
            return x, p

        def union(a: object, pa: int, b: object, pb: int, rel: int) -> None:
            # impose (value(a) ^ pa) == (value(b) ^ pb) ^ rel
            ra, qa = find(a)
            rb, qb = find(b)
            want = pa ^ pb ^ rel
            if ra == rb:
                if qa ^ qb != want:
                    raise ValueError("inconsistent strand orientations")
                return
            if rb is None:
                ra, rb, qa, qb = rb, ra, qb, qa
            parent[rb] = ra
            parity[rb] = qa ^ qb ^ want

        # literal for "arm is an in end": (node, parity); value = node ^ parity
        def lit(arm: tuple[int, int]) -> tuple[object, int]:
            cid, pos = arm
            if pos == UNDER_IN:
                return None, 0
            if pos == UNDER_OUT:
                return None, 1
            if pos == OVER_A:
                return cid, 0
            return cid, 1

        for ends in self.arms.values():
            (na, pa), (nb, pb) = lit(ends[0]), lit(ends[1])
            # exactly one in end: values differ
            union(na, pa, nb, pb, 1)
        for c in self.crossings:
            root, _ = find(c.id)
            if root is not None:
                union(None, 0, c.id, 0, 0)  # free component: choose True
        result = {}
        for c in self.crossings:
            root, p = find(c.id)
            assert root is None
            result[c.id] = p == 0
        return result

    def arm_is_in(self, cid: int, pos: int) -> bool:
        if pos == UNDER_IN:
            return True
        if pos == UNDER_OUT:
            return False
        return (pos == OVER_A) == self.over_in_first[cid]

    def _trace_components(self) -> list[list[int]]:
        """Oriented strand cycles, as lists of labels in travel order."""
        in_arm = {}
        for lab, ends in self.arms.items():
            ins = [a for a in ends if self.arm_is_in(*a)]
            if len(ins) != 1:
                raise ValueError("inconsistent strand orientations")
            in_arm[lab] = ins[0]
        comps = []
        seen: set[int] = set()
        for start in sorted(self.arms):
            if start in seen:
                continue
            cycle = []
            lab = start
            while lab not in seen:
                seen.add(lab)
                cycle.append(lab)
                cid, pos = in_arm[lab]
                lab = self.by_id[cid].pd[(pos + 2) % 4]
            if lab != start:
                raise ValueError("strand does not close up")
            comps.append(cycle)
        return comps

    def _build_map(self) -> EmbeddedGraph:
        g = EmbeddedGraph()
        for c in self.crossings:
            g.add_vertex(c.id)
        ends_seen: dict[int, int] = {}
        # Register edges first (in label order), then write rotations in pd
        # order so rotation position == pd position at every crossing.
        darts: dict[tuple[int, int], tuple[int, int]] = {}
        for c in self.crossings:
            for pos, lab in enumerate(c.pd):
                end = ends_seen.get(lab, 0)
                ends_seen[lab] = end + 1
                darts[(c.id, pos)] = (lab, end)
        for lab in sorted(self.arms):
            (c1, p1), (c2, p2) = self.arms[lab]
            g.edges[lab] = Edge(id=lab, u=c1, v=c2)
        for c in self.crossings:
            g.rotation[c.id] = [darts[(c.id, pos)] for pos in range(4)]
        # also check 1..2n ends are coherent with Edge u/v assignment
        for lab in sorted(self.arms):
            (c1, p1), (c2, p2) = self.arms[lab]
            assert darts[(c1, p1)] == (lab, 0) and darts[(c2, p2)] == (lab, 1)
        g.trace_faces()  # raises if not spherical
        self._darts = darts
        return g

    # -- corner utilities --------------------------------------------------

    def corner_face(self, cid: int, corner: int) -> int:
        """Face in the corner between arms ``corner`` and ``corner+1``."""
        dart = self._darts[(cid, corner)]
        h = (dart[0], 0 if dart[1] == 0 else 1)
        return self.face_of[h]

    def face_corners(self, face_idx: int) -> list[tuple[int, int]]:
        """Corners (crossing id, corner index) of a face, in boundary order.

        Corner k of a crossing is the wedge between arms k and k+1; a face
        entering a crossing leaves it along the arm bounding that wedge from
        below, so the corner index is the departing arm's position.
        """
        corners = []
        for h in self.faces[face_idx]:
            lab, direction = h
            head = self.map.half_edge_head(h)
            arrival = (lab, 1) if direction == 0 else (lab, 0)
            pos = self.map.rotation[head].index(arrival)
            corners.append((head, (pos - 1) % 4))
        return corners

    def is_alternating(self) -> bool:
        return all(
            (ends[0][1] - ends[1][1]) % 2 == 1 for ends in self.arms.values()
        )

    def is_special(self) -> bool:
        return self.is_alternating() and len(set(self.over_in_first.values())) == 1

    def smoothing_parity(self) -> int:
        """Corner-index parity of the black corners (1 if over enters at
        position 1 everywhere, else 0).  Only meaningful for special
        diagrams."""
        if not self.is_special():
            raise ValueError("diagram is not special alternating")
        return 1 if next(iter(self.over_in_first.values())) else 0

    def black_faces(self) -> list[int]:
        par = self.smoothing_parity()
        return [
            i
            for i in range(len(self.faces))
            if all(pos % 2 == par for _, pos in self.face_corners(i))
        ]

    def white_faces(self) -> list[int]:
        par = 1 - self.smoothing_parity()
        return [
            i
            for i in range(len(self.faces))
            if all(pos % 2 == par for _, pos in self.face_corners(i))
        ]


def parse_diagram(text: str) -> Diagram:
    """Parse the diagram JSON schema into a :class:`Diagram`.

    Schema: ``{"crossings": [{"id": int, "pd": [int, int, int, int]}, ...]}``
    with strand labels 1..2n, each appearing exactly twice.  Distinct label
    sets are normalized to 1..2n by rank.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed document: {exc}") from exc
    if not isinstance(doc, dict) or "crossings" not in doc:
        raise ValueError("malformed document: missing 'crossings'")
    raw = doc["crossings"]
    if not isinstance(raw, list):
        raise ValueError("malformed document: 'crossings' must be a list")
    if not raw:
        raise ValueError("no crossings")
    crossings = []
    labels = []
    for rec in raw:
        if not isinstance(rec, dict) or "id" not in rec or "pd" not in rec:
            raise ValueError("malformed document: crossing needs 'id' and 'pd'")
        pd = rec["pd"]
        if not (isinstance(pd, list) and len(pd) == 4 and all(isinstance(x, int) for x in pd)):
            raise ValueError(f"crossing {rec['id']}: pd must be 4 integers")
        labels.extend(pd)
        crossings.append((int(rec["id"]), tuple(pd)))
    distinct = sorted(set(labels))
    for lab in distinct:
        if labels.count(lab) != 2:
            raise ValueError(
                f"label multiplicity: label {lab} appears {labels.count(lab)} time(s)"
            )
    if distinct != list(range(1, len(distinct) + 1)):
        rank = {lab: i + 1 for i, lab in enumerate(distinct)}
        crossings = [(cid, tuple(rank[x] for x in pd)) for cid, pd in crossings]
    return Diagram([Crossing(cid, pd) for cid, pd in crossings])


# -- validation ------------------------------------------------------------


@dataclass
class ValidationReport:
    connected: bool
    alternating: bool
    special: bool
    reduced: bool
    prime: bool
    cuttable_region_exists: bool
    messages: list[str] = field(default_factory=list)

    def all_ok(self) -> bool:
        return (
            self.connected
            and self.alternating
            and self.special
            and self.reduced
            and self.prime
            and self.cuttable_region_exists
        )

    def to_json(self) -> dict:
        return {
            "connected": self.connected,
            "alternating": self.alternating,
            "special": self.special,
            "reduced": self.reduced,
            "prime": self.prime,
            "cuttable_region_exists": self.cuttable_region_exists,
            "messages": list(self.messages),
        }


def _two_edge_cut(d: Diagram) -> tuple[int, int] | None:
    """A pair of arcs whose removal disconnects the crossings, if any.

    Such a pair is crossed by a simple closed curve meeting the diagram in
    two edge points with crossings on both sides; its absence (on a
    connected diagram) is Menasco's visibility criterion for primeness.
    The 4-valent map has no bridges, so pairs suffice.
    """
    g = d.map
    labels = sorted(g.edges)
    for i, a in enumerate(labels):
        for b in labels[i + 1 :]:
            # connectivity of the map minus edges a, b
            seen = {d.crossings[0].id}
            stack = [d.crossings[0].id]
            while stack:
                v = stack.pop()
                for eid, _end in g.rotation[v]:
                    if eid in (a, b):
                        continue
                    w = g.edges[eid].other(v)
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) < d.n:
                return (a, b)
    return None


def _white_smooth(d: Diagram, cid: int) -> tuple[Diagram | None, int]:
    """Smooth crossing ``cid`` respecting orientation.

    This is the cut used on a crossing of a white region: the two white
    corners at the crossing merge and the crossing disappears.  Returns the
    resulting diagram (None if fewer than 2 crossings remain) and the number
    of crossing-free circles that split off.
    """
    c = d.by_id[cid]
    if d.over_in_first[cid]:
        pairs = [(c.pd[UNDER_IN], c.pd[OVER_B]), (c.pd[OVER_A], c.pd[UNDER_OUT])]
    else:
        pairs = [(c.pd[UNDER_IN], c.pd[OVER_A]), (c.pd[OVER_B], c.pd[UNDER_OUT])]
    # merge each label pair; equal labels mean a circle splits off
    dropped = 0
    rename: dict[int, int] = {}
    for x, y in pairs:
        if x == y:
            dropped += 1
        else:
            rename[max(x, y)] = min(x, y)

    def resolve(lab: int) -> int:
        while lab in rename:
            lab = rename[lab]
        return lab

    new = []
    for other in d.crossings:
        if other.id == cid:
            continue
        new.append((other.id, tuple(resolve(x) for x in other.pd)))
    if len(new) < 2:
        return None, dropped
    relabel = {lab: i + 1 for i, lab in enumerate(sorted({x for _, pd in new for x in pd}))}
    out = Diagram([Crossing(i, tuple(relabel[x] for x in pd)) for i, pd in new])
    return out, dropped


def _cuttable_white_region_exists(d: Diagram) -> tuple[bool, str]:
    """Search for a white region all of whose crossings cut to prime diagrams.

    A region is cuttable when smoothing any one of its crossings leaves a
    diagram that is connected, splits off no circle, and has no separating
    pair of arcs.
    """
    for f in d.white_faces():
        ok = True
        for cid, _pos in d.face_corners(f):
            smoothed, dropped = _white_smooth(d, cid)
            if dropped:
                ok = False
                break
            if smoothed is None:
                # 1 or 0 crossings left: nothing can be on both sides of a curve
                continue
            if smoothed.map.component_count() != 1 or _two_edge_cut(smoothed):
                ok = False
                break
        if ok:
            return True, f"white region {f} is cuttable"
    return False, "no cuttable white region"


def validate(d: Diagram) -> ValidationReport:
    """Compute the six diagram flags; failures go into ``messages``."""
    messages: list[str] = []
    connected = d.map.component_count() == 1
    if not connected:
        messages.append("diagram is not connected")

    alternating = d.is_alternating()
    if not alternating:
        bad = [lab for lab, ends in d.arms.items() if (ends[0][1] - ends[1][1]) % 2 == 0]
        messages.append(f"not alternating: arcs {sorted(bad)} have equal-type ends")

    special = d.is_special()
    if alternating and not special:
        messages.append("not special: crossings of both signs")

    reduced = True
    for c in d.crossings:
        faces = [d.corner_face(c.id, k) for k in range(4)]
        if len(set(faces)) < 4:
            reduced = False
            messages.append(f"not reduced: crossing {c.id} meets a region twice")
            break

    prime = connected
    if connected:
        cut = _two_edge_cut(d)
        if cut is not None:
            prime = False
            messages.append(f"not prime: arcs {cut} separate the diagram")
    else:
        messages.append("not prime: diagram is disconnected")

    cuttable = False
    if connected and alternating and special and reduced and prime:
        cuttable, note = _cuttable_white_region_exists(d)
        messages.append(note)
    else:
        messages.append("cuttable-region search skipped: prerequisites failed")
    return ValidationReport(
        connected=connected,
        alternating=alternating,
        special=special,
        reduced=reduced,
        prime=prime,
        cuttable_region_exists=cuttable,
        messages=messages,
    )


# -- Seifert's algorithm ---------------------------------------------------


@dataclass
class SeifertData:
    circles: list[list[int]]
    s: int
    black_regions: list[int]
    white_regions: list[int]
    chi: int
    genus_like: int

    def to_json(self) -> dict:
        return {
            "circles": [list(c) for c in self.circles],
            "s": self.s,
            "black_regions": list(self.black_regions),
            "white_regions": list(self.white_regions),
            "chi": self.chi,
            "genus_like": self.genus_like,
        }


def _circle_successor(d: Diagram) -> dict[int, int]:
    """Label-to-label successor map of the orientation-respecting smoothing."""
    succ = {}
    for c in d.crossings:
        if d.over_in_first[c.id]:
            succ[c.pd[UNDER_IN]] = c.pd[OVER_B]
            succ[c.pd[OVER_A]] = c.pd[UNDER_OUT]
        else:
            succ[c.pd[UNDER_IN]] = c.pd[OVER_A]
            succ[c.pd[OVER_B]] = c.pd[UNDER_OUT]
    return succ


def _circles(d: Diagram) -> list[list[int]]:
    succ = _circle_successor(d)
    circles = []
    seen: set[int] = set()
    for start in sorted(succ):
        if start in seen:
            continue
        cyc = []
        lab = start
        while lab not in seen:
            seen.add(lab)
            cyc.append(lab)
            lab = succ[lab]
        circles.append(cyc)
    return circles


def _circle_black_face(d: Diagram, circle: list[int]) -> int:
    """The black region bounded by a Seifert circle.

    In a special diagram each circle hugs the corners of a single black
    face; this is asserted, not assumed.
    """
    par = d.smoothing_parity()
    faces = set()
    label_set = set(circle)
    for c in d.crossings:
        for corner in (par, par + 2):
            # The circle hugging this smoothing corner uses the labels at
            # arms corner and corner+1, which always lie on one circle.
            a, b = c.pd[corner], c.pd[(corner + 1) % 4]
            if a in label_set or b in label_set:
                if not (a in label_set and b in label_set):
                    raise ValueError("smoothing corner splits a Seifert circle")
                faces.add(d.corner_face(c.id, corner))
    if len(faces) != 1:
        raise ValueError("Seifert circle is not innermost; diagram not special")
    return faces.pop()


def seifert(d: Diagram) -> SeifertData:
    """Run Seifert's algorithm on a special alternating diagram."""
    if not d.is_special():
        raise ValueError("diagram is not special alternating")
    circles = _circles(d)
    s = len(circles)
    black = d.black_faces()
    white = d.white_faces()
    if sorted(black + white) != list(range(len(d.faces))):
        raise ValueError("checkerboard colouring failed")
    bounded = [_circle_black_face(d, c) for c in circles]
    if sorted(bounded) != sorted(black):
        raise ValueError("Seifert circles do not bound the black regions")
    chi = s - d.n
    mu = len(d.components)
    if (2 - chi - mu) % 2 != 0:
        raise ValueError("surface Euler characteristic has impossible parity")
    return SeifertData(
        circles=circles,
        s=s,
        black_regions=black,
        white_regions=white,
        chi=chi,
        genus_like=(2 - chi - mu) // 2,
    )


# -- region graphs ---------------------------------------------------------


def _region_graph(d: Diagram, colour: str) -> EmbeddedGraph:
    if not d.is_special():
        raise ValueError("diagram is not special alternating")
    par = d.smoothing_parity() if colour == "black" else 1 - d.smoothing_parity()
    faces = d.black_faces() if colour == "black" else d.white_faces()
    face_set = set(faces)

    g = EmbeddedGraph()
    corner_class: dict[int, int] = {}
    if colour == "black":
        # Of the two black corners at a crossing, the one at index par+2 is
        # traversed by its Seifert circle in the same direction as the face
        # boundary walk: that region's circle runs anticlockwise.
        for f in faces:
            classes = {1 if pos == par + 2 else -1 for _, pos in d.face_corners(f)}
            if len(classes) != 1:
                raise ValueError("black regions are not consistently oriented")
            corner_class[f] = classes.pop()
    for f in faces:
        g.add_vertex(f, corner_class.get(f, 0))

    for c in d.crossings:
        f_low = d.corner_face(c.id, par)
        f_high = d.corner_face(c.id, par + 2)
        if f_low == f_high:
            raise ValueError(
                f"crossing {c.id} joins a region to itself; reduce the diagram first"
            )
        if f_low not in face_set or f_high not in face_set:
            raise ValueError("corner colouring failed")
        if colour == "black":
            u, v = f_high, f_low  # u anticlockwise, v clockwise
            pos_left = True  # positive side on the left walking u -> v
        else:
            u, v = min(f_low, f_high), max(f_low, f_high)
            pos_left = True
        g.edges[c.id] = Edge(id=c.id, u=u, v=v, weight=1, crossings=(c.id,), pos_left=pos_left)

    # rotation: crossings in boundary order around each region (this is the
    # anticlockwise order at the vertex placed inside the region)
    for f in faces:
        rot = []
        for cid, pos in d.face_corners(f):
            if pos % 2 != par % 2:
                raise ValueError("corner colouring failed")
            rot.append((cid, 0 if g.edges[cid].u == f else 1))
        g.rotation[f] = rot
    g.trace_faces()  # sanity: spherical embedding
    return g


def black_region_graph(d: Diagram) -> EmbeddedGraph:
    """The graph with a vertex in each black region and an edge through each
    crossing, embedded by the diagram, with oriented vertices and edge sides."""
    return _region_graph(d, "black")


def white_region_graph(d: Diagram) -> EmbeddedGraph:
    """The graph with a vertex in each white region and an edge through each
    crossing (the fibredness graph)."""
    return _region_graph(d, "white")


# -- fibredness reduction --------------------------------------------------


def is_fibred(g: EmbeddedGraph) -> bool:
    """Whether the white-region graph reduces to a single vertex.

    Moves: delete a loop; contract an edge incident to a valence-2 vertex.
    The reduction is confluent, so a single greedy pass decides it: the
    graphs that reduce are exactly the "trees of loops".
    """
    edges: list[tuple[int, int]] = [(e.u, e.v) for e in g.edges.values()]
    vertices: set[int] = set(g.rotation)
    changed = True
    while changed:
        changed = False
        kept = []
        for u, v in edges:
            if u == v:
                changed = True  # delete loop
            else:
                kept.append((u, v))
        edges = kept
        deg: dict[int, int] = {}
        for u, v in edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        target = next(
            (
                (u, v)
                for u, v in edges
                if deg[u] == 2 or deg[v] == 2
            ),
            None,
        )
        if target is not None:
            u, v = target
            if deg[v] != 2:
                u, v = v, u
            # contract this one edge, folding v into u
            edges.remove(target)
            edges = [(u if a == v else a, u if b == v else b) for a, b in edges]
            vertices.discard(v)
            changed = True
    return len(vertices) == 1 and not edges
