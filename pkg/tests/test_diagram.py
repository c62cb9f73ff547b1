"""Diagrams: parsing, validation flags, Seifert data, region graphs."""

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kakimizu.diagram import (
    black_region_graph,
    is_fibred,
    parse_diagram,
    seifert,
    validate,
    white_region_graph,
)
from kakimizu.families import (
    book,
    cube_graph,
    dalpha_graph,
    granny_graph,
    pendant_book,
)
from kakimizu.medial import medial

HOPF = '{"crossings":[{"id":0,"pd":[1,3,2,4]},{"id":1,"pd":[3,1,4,2]}]}'


# -- parsing ---------------------------------------------------------------


def test_parse_hopf():
    d = parse_diagram(HOPF)
    assert d.n == 2
    assert len(d.components) == 2


def test_parse_empty():
    with pytest.raises(ValueError, match="no crossings"):
        parse_diagram('{"crossings":[]}')


def test_parse_label_multiplicity():
    bad = '{"crossings":[{"id":0,"pd":[5,5,5,2]},{"id":1,"pd":[2,1,1,3]}]}'
    with pytest.raises(ValueError, match="label multiplicity"):
        parse_diagram(bad)


def test_parse_malformed():
    with pytest.raises(ValueError, match="malformed"):
        parse_diagram("{nope")
    with pytest.raises(ValueError, match="malformed"):
        parse_diagram('{"crossings": 3}')


def test_parse_normalizes_sparse_labels():
    # same Hopf with labels doubled: normalized back to 1..4
    sparse = '{"crossings":[{"id":0,"pd":[2,6,4,8]},{"id":1,"pd":[6,2,8,4]}]}'
    d = parse_diagram(sparse)
    assert sorted(d.arms) == [1, 2, 3, 4]
    assert d.crossings[0].pd == (1, 3, 2, 4)


def test_one_crossing_rejected():
    with pytest.raises(ValueError):
        parse_diagram('{"crossings":[{"id":0,"pd":[1,2,2,1]}]}')


# -- validation ------------------------------------------------------------


def test_validate_hopf_all_good():
    r = validate(parse_diagram(HOPF))
    assert r.connected and r.alternating and r.special
    assert r.reduced and r.prime and r.cuttable_region_exists


def test_validate_granny_not_prime():
    r = validate(medial(granny_graph()))
    assert r.connected and r.alternating and r.special and r.reduced
    assert not r.prime
    assert any("not prime" in m for m in r.messages)


def test_validate_kink_not_reduced():
    r = validate(medial(pendant_book()))
    assert not r.reduced
    assert any("not reduced" in m for m in r.messages)


# One strand passing over the other twice: a valid oriented 2-crossing
# diagram that is not alternating.
POKE = '{"crossings":[{"id":0,"pd":[1,3,2,4]},{"id":1,"pd":[2,3,1,4]}]}'


def test_validate_non_alternating():
    r = validate(parse_diagram(POKE))
    assert not r.alternating
    assert not r.special


def test_validate_disconnected():
    # two disjoint Hopf links
    doc = {
        "crossings": [
            {"id": 0, "pd": [1, 3, 2, 4]},
            {"id": 1, "pd": [3, 1, 4, 2]},
            {"id": 2, "pd": [5, 7, 6, 8]},
            {"id": 3, "pd": [7, 5, 8, 6]},
        ]
    }
    r = validate(parse_diagram(json.dumps(doc)))
    assert not r.connected
    assert not r.prime


def test_flags_stable_under_relabeling():
    rng = random.Random(7)
    base = parse_diagram(HOPF)
    expected = validate(base).to_json()
    labels = list(range(1, 5))
    for _ in range(10):
        perm = labels[:]
        rng.shuffle(perm)
        relabel = dict(zip(labels, perm))
        doc = {
            "crossings": [
                {"id": c.id, "pd": [relabel[x] for x in c.pd]} for c in base.crossings
            ]
        }
        got = validate(parse_diagram(json.dumps(doc))).to_json()
        got.pop("messages")
        trimmed = dict(expected)
        trimmed.pop("messages")
        assert got == trimmed


# -- Seifert ---------------------------------------------------------------


def test_seifert_hopf():
    data = seifert(parse_diagram(HOPF))
    assert data.s == 2
    assert data.chi == 0
    assert len(data.black_regions) == 2 and len(data.white_regions) == 2


def test_seifert_trefoil():
    data = seifert(medial(book(3)))
    assert data.s == 2
    assert data.chi == -1
    assert data.genus_like == 1


def test_seifert_rejects_non_special():
    with pytest.raises(ValueError):
        seifert(parse_diagram(POKE))


def test_chi_equals_s_minus_n_everywhere():
    for g in [book(2), book(3), book(4), cube_graph(), dalpha_graph()]:
        d = medial(g)
        data = seifert(d)
        assert data.chi == data.s - d.n
        assert data.s == len(data.black_regions)


# -- region graphs ---------------------------------------------------------


@pytest.mark.parametrize("k", [2, 3, 4])
def test_black_graph_of_torus_links(k):
    g = black_region_graph(medial(book(k)))
    assert len(g.rotation) == 2
    assert len(g.edges) == k
    (pair, ids), = g.parallel_classes().items()
    assert len(ids) == k


def test_black_graph_no_loops_and_bipartite():
    for fam in [book(3), cube_graph(), dalpha_graph()]:
        g = black_region_graph(medial(fam))
        for e in g.edges.values():
            assert e.u != e.v
            assert {g.orientation[e.u], g.orientation[e.v]} == {1, -1}


def test_white_graph_even_valencies():
    for fam in [book(2), book(3), cube_graph(), dalpha_graph(), granny_graph()]:
        w = white_region_graph(medial(fam))
        for v in w.vertex_ids():
            assert w.degree(v) % 2 == 0


def test_white_graph_reduced_prime_no_cut_vertex_no_loop():
    import networkx as nx

    for fam in [book(2), book(3), cube_graph(), dalpha_graph()]:
        w = white_region_graph(medial(fam))
        for e in w.edges.values():
            assert e.u != e.v
        m = nx.MultiGraph()
        m.add_nodes_from(w.vertex_ids())
        m.add_edges_from((e.u, e.v) for e in w.edges.values())
        if len(m) > 2:
            assert not list(nx.articulation_points(nx.Graph(m)))


def test_hopf_white_graph_shape():
    w = white_region_graph(parse_diagram(HOPF))
    assert len(w.rotation) == 2 and len(w.edges) == 2


# -- fibredness ------------------------------------------------------------


def _loose_graph(edges, n_vertices):
    """A bare multigraph stand-in for is_fibred (embedding irrelevant)."""
    g = EmbeddedGraphStub(n_vertices, edges)
    return g


class EmbeddedGraphStub:
    def __init__(self, n_vertices, edges):
        self.rotation = {v: [] for v in range(n_vertices)}
        self.edges = {
            i: type("E", (), {"u": u, "v": v})() for i, (u, v) in enumerate(edges)
        }


def test_fibred_examples():
    assert is_fibred(_loose_graph([], 1)) is True
    assert is_fibred(white_region_graph(parse_diagram(HOPF))) is True
    assert is_fibred(white_region_graph(medial(book(3)))) is True
    # theta-shaped graph: stuck immediately
    assert is_fibred(_loose_graph([(0, 1)] * 3, 2)) is False
    # K4
    k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert is_fibred(_loose_graph(k4, 4)) is False
    # octahedron = G(D) of the cube medial
    assert is_fibred(white_region_graph(medial(cube_graph()))) is False
    # a rose of loops deletes down to a point
    assert is_fibred(_loose_graph([(0, 0)] * 3, 1)) is True
    # doubled edge: contract one copy, delete the resulting loop
    assert is_fibred(_loose_graph([(0, 1), (0, 1)], 2)) is True
    # loops joined by a path do not reduce: the path edges are stuck
    assert is_fibred(_loose_graph([(0, 1), (1, 1), (0, 2), (2, 2)], 3)) is False


def _oracle_reducible(n_vertices, edges):
    """Exhaustive search over all reduction sequences (the confluence oracle)."""
    start = (frozenset(range(n_vertices)), tuple(sorted(tuple(sorted(e)) for e in edges)))
    seen = set()
    stack = [start]
    while stack:
        verts, es = stack.pop()
        if (verts, es) in seen:
            continue
        seen.add((verts, es))
        if len(verts) == 1 and not es:
            return True
        moves = []
        es_list = list(es)
        for i, (u, v) in enumerate(es_list):
            if u == v:
                moves.append((frozenset(verts), tuple(sorted(es_list[:i] + es_list[i + 1 :]))))
        deg = {}
        for u, v in es_list:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        for i, (u, v) in enumerate(es_list):
            if u == v:
                continue
            for keep, fold in ((u, v), (v, u)):
                if deg[fold] == 2:
                    rest = es_list[:i] + es_list[i + 1 :]
                    folded = tuple(
                        sorted(
                            tuple(sorted((keep if a == fold else a, keep if b == fold else b)))
                            for a, b in rest
                        )
                    )
                    moves.append((frozenset(verts - {fold}), folded))
        stack.extend(moves)
    return False


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_fibred_matches_exhaustive_oracle(data):
    n = data.draw(st.integers(min_value=1, max_value=5))
    m = data.draw(st.integers(min_value=0, max_value=8))
    edges = [
        (
            data.draw(st.integers(min_value=0, max_value=n - 1)),
            data.draw(st.integers(min_value=0, max_value=n - 1)),
        )
        for _ in range(m)
    ]
    got = is_fibred(_loose_graph(edges, n))
    want = _oracle_reducible(n, edges)
    assert got == want
