from random import Random

import pytest

from upg.graphs import (
    SimpleGraph,
    complement,
    component_masks,
    decompose_matching_structure,
    export_dot,
    export_json,
    graph_from_edges,
    graph_from_json,
    is_complete,
    recognize_complete_multipartite,
    unity_product_graph,
)
from upg.rings import boolean_ring, parse_ring_spec, units, zmod

from oracles import random_graph


def labeled_edges(g: SimpleGraph) -> set[frozenset[str]]:
    return {frozenset((g.labels[u], g.labels[v])) for u, v in g.edges()}


def upg_of(spec: str) -> SimpleGraph:
    return unity_product_graph(units(parse_ring_spec(spec)))


def test_golden_zmod11_edges():
    g = upg_of("zmod:11")
    assert g.n == 10
    assert labeled_edges(g) == {
        frozenset(("2", "6")),
        frozenset(("3", "4")),
        frozenset(("5", "9")),
        frozenset(("7", "8")),
    }
    assert complement(g).edge_count == 41


def test_golden_zmod16_edges():
    g = upg_of("zmod:16")
    assert g.n == 8
    assert labeled_edges(g) == {frozenset(("3", "11")), frozenset(("5", "13"))}
    assert complement(g).edge_count == 26


def test_unity_vertex_is_isolated():
    for spec in ("zmod:11", "zmod:16", "gf:2^3", "prod:(zmod:3,zmod:3)"):
        g = upg_of(spec)
        v = g.labels.index("1") if "1" in g.labels else 0
        assert g.degree(v) == 0


def test_upg_is_matching():
    # every vertex has degree at most 1: inverses are unique
    for n in range(2, 40):
        g = upg_of(f"zmod:{n}")
        assert all(g.degree(v) <= 1 for v in range(g.n))
        assert decompose_matching_structure(g).valid


def test_boolean_ring_graph_trivial():
    g = unity_product_graph(units(boolean_ring(3)))
    assert g.n == 1
    assert g.edge_count == 0
    assert g.labels == ("(1,1,1)",)


def test_simple_graph_validation():
    with pytest.raises(ValueError):
        SimpleGraph(2, ("a", "b"), (0b01, 0b00))  # loop at 0
    with pytest.raises(ValueError):
        SimpleGraph(2, ("a", "b"), (0b10, 0b00))  # asymmetric
    with pytest.raises(ValueError):
        SimpleGraph(2, ("a",), (0, 0))  # label count
    with pytest.raises(ValueError):
        SimpleGraph(1, ("a",), (0b10,))  # out of range bit


def test_graph_from_edges_normalizes():
    g = graph_from_edges(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count == 1
    assert g.edges() == [(0, 1)]
    with pytest.raises(ValueError):
        graph_from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        graph_from_edges(2, [(0, 5)])


def test_edges_sorted():
    g = graph_from_edges(5, [(3, 4), (0, 2), (1, 2), (0, 1)])
    assert g.edges() == [(0, 1), (0, 2), (1, 2), (3, 4)]


def test_complement_involution():
    rng = Random(13)
    for _ in range(25):
        g = random_graph(rng.randrange(1, 10), rng.random(), rng)
        assert complement(complement(g)) == g


def test_complement_edge_counts():
    rng = Random(5)
    for _ in range(25):
        n = rng.randrange(1, 12)
        g = random_graph(n, rng.random(), rng)
        assert g.edge_count + complement(g).edge_count == n * (n - 1) // 2


def test_is_complete():
    assert is_complete(graph_from_edges(3, [(0, 1), (0, 2), (1, 2)]))
    assert is_complete(graph_from_edges(1, []))
    assert not is_complete(graph_from_edges(3, [(0, 1)]))


def test_component_masks_order():
    g = graph_from_edges(6, [(1, 4), (2, 3)])
    masks = component_masks(g)
    # ordered by least contained vertex
    assert masks == [0b000001, 0b010010, 0b001100, 0b100000]


def test_decompose_matching_structure():
    g = graph_from_edges(6, [(0, 1), (2, 3)])
    deco = decompose_matching_structure(g)
    assert (deco.isolated, deco.pairs, deco.valid) == (2, 2, True)

    p3 = graph_from_edges(3, [(0, 1), (1, 2)])
    deco = decompose_matching_structure(p3)
    assert not deco.valid
    assert (deco.isolated, deco.pairs) == (0, 0)


def test_recognize_complete_multipartite():
    # K_{2,2,1}
    g = complement(graph_from_edges(5, [(0, 1), (2, 3)]))
    profile = recognize_complete_multipartite(g)
    assert profile.valid and profile.part_sizes == (1, 2, 2)

    k4 = complement(graph_from_edges(4, []))
    assert recognize_complete_multipartite(k4).part_sizes == (1, 1, 1, 1)

    edgeless = graph_from_edges(3, [])
    assert recognize_complete_multipartite(edgeless).part_sizes == (3,)

    c5 = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert not recognize_complete_multipartite(c5).valid

    p3 = graph_from_edges(3, [(0, 1), (1, 2)])
    assert recognize_complete_multipartite(p3).valid  # K_{2,1}
    assert recognize_complete_multipartite(p3).part_sizes == (1, 2)


def test_ring_complements_are_complete_multipartite():
    for spec in ("zmod:16", "zmod:24", "gf:2^3", "gf:3^2", "prod:(zmod:4,zmod:4)"):
        g = upg_of(spec)
        deco = decompose_matching_structure(g)
        profile = recognize_complete_multipartite(complement(g))
        assert profile.valid
        expected = tuple(sorted([1] * deco.isolated + [2] * deco.pairs))
        assert profile.part_sizes == expected


def test_export_dot_golden():
    g = graph_from_edges(3, [(0, 2)], labels=("a", "b", "c"))
    assert export_dot(g) == 'graph {\n  "a";\n  "b";\n  "c";\n  "a" -- "c";\n}\n'


def test_export_dot_escapes_quotes():
    g = graph_from_edges(1, [], labels=('sa"y',))
    assert '\\"' in export_dot(g)


def test_json_round_trip():
    rng = Random(99)
    for _ in range(20):
        g = random_graph(rng.randrange(1, 9), rng.random(), rng)
        assert graph_from_json(export_json(g)) == g


def test_json_round_trip_ring_graph():
    g = upg_of("zmod:13")
    back = graph_from_json(export_json(g))
    assert back == g
    assert export_json(back) == export_json(g)


def test_graph_from_json_rejects_bad_documents():
    with pytest.raises((ValueError, AssertionError, KeyError)):
        graph_from_json("[]")
    with pytest.raises((ValueError, AssertionError, KeyError)):
        graph_from_json('{"n": 2, "labels": ["a", "b"]}')
