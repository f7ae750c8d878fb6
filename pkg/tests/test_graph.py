"""Graph container, parser, serializer, and generators."""

from __future__ import annotations

import random

import pytest

from bipartite_biconnect import (
    BipartiteGraph,
    IllegalEdge,
    ParseError,
    UnknownVertex,
    add_edges,
    build_graph,
    connected_components,
    is_legal_edge,
    parse_graph,
    serialize_graph,
)
from bipartite_biconnect.graph import (
    broom_graph,
    caterpillar_graph,
    cycle_graph,
    generate_instance,
    path_graph,
    random_bipartite,
    spider_graph,
)

from .helpers import oracle_components


def test_vertices_take_first_appearance_order(p4):
    assert list(p4.labels) == ["a1", "a2", "b1", "b2"]
    assert [p4.side(i) for i in range(4)] == [0, 0, 1, 1]
    assert p4.n == 4 and p4.m == 3


def test_edges_stored_a_side_first(p4):
    for u, v in p4.edges:
        assert p4.side(u) == 0 and p4.side(v) == 1


def test_adjacency_is_sorted(p4):
    for u in range(p4.n):
        assert list(p4.adj[u]) == sorted(p4.adj[u])


def test_degrees(p4):
    by_label = {p4.labels[v]: p4.degree(v) for v in range(p4.n)}
    assert by_label == {"a1": 1, "a2": 2, "b1": 2, "b2": 1}


def test_semantic_equality_ignores_edge_input_order():
    g1 = build_graph(["a1"], ["b1", "b2"], [("a1", "b1"), ("a1", "b2")])
    g2 = build_graph(["a1"], ["b1", "b2"], [("a1", "b2"), ("a1", "b1")])
    assert g1 == g2
    assert hash(g1) == hash(g2)


def test_parse_round_trip(p4):
    assert parse_graph(serialize_graph(p4)) == p4


def test_parse_accepts_comments_and_blank_lines():
    text = """
# leading comment
A a1 a2

B b1
# mid comment
E a1 b1
"""
    g = parse_graph(text)
    assert list(g.labels) == ["a1", "a2", "b1"]
    assert g.m == 1


def test_parse_rejects_duplicate_vertex():
    with pytest.raises(ParseError, match="declared twice"):
        parse_graph("A a1\nA a1\nB b1\n")


def test_parse_rejects_unknown_endpoint():
    with pytest.raises(ParseError, match="undeclared"):
        parse_graph("A a1\nB b1\nE a1 b9\n")


def test_parse_rejects_same_side_edge():
    with pytest.raises(ParseError):
        parse_graph("A a1 a2\nB b1\nE a1 a2\n")


def test_parse_rejects_repeated_edge():
    with pytest.raises(ParseError, match="duplicate edge"):
        parse_graph("A a1\nB b1\nE a1 b1\nE a1 b1\n")


def test_parse_rejects_bad_directive():
    with pytest.raises(ParseError):
        parse_graph("X a1\n")


def test_serialize_is_canonical(p4):
    text = serialize_graph(p4)
    assert text == serialize_graph(parse_graph(text))
    lines = text.strip().splitlines()
    assert lines[0].startswith("A ") and lines[1].startswith("B ")
    assert all(line.startswith("E ") for line in lines[2:])


def test_is_legal_edge(p4):
    a1, a2, b1, b2 = range(4)
    assert is_legal_edge(p4, a1, b2)
    assert not is_legal_edge(p4, a1, b1)  # already present
    assert not is_legal_edge(p4, a1, a2)  # same side
    assert is_legal_edge(p4, b2, a1)  # orientation free
    with pytest.raises(UnknownVertex):
        is_legal_edge(p4, 0, 99)


def test_add_edges(p4):
    g2 = add_edges(p4, [(0, 3)])
    assert g2.m == p4.m + 1
    assert g2.has_edge(0, 3)
    assert p4.m == 3  # original untouched


def test_add_edges_rejects_existing(p4):
    with pytest.raises(IllegalEdge):
        add_edges(p4, [(0, 2)])  # a1 - b1 already an edge


def test_add_edges_rejects_same_side(p4):
    with pytest.raises(IllegalEdge):
        add_edges(p4, [(0, 1)])


def test_add_edges_rejects_repeat_in_list(p4):
    with pytest.raises(IllegalEdge):
        add_edges(p4, [(0, 3), (3, 0)])


def test_connected_components_matches_reference():
    rng = random.Random(5)
    for _ in range(200):
        na, nb = rng.randint(0, 4), rng.randint(0, 4)
        labels = [f"a{i}" for i in range(na)] + [f"b{j}" for j in range(nb)]
        edges = {
            (i, na + j)
            for i in range(na)
            for j in range(nb)
            if rng.random() < 0.3
        }
        g = BipartiteGraph(labels, [0] * na + [1] * nb, edges)
        part = connected_components(g)
        assert part.component_members == oracle_components(g)
        for cid, members in enumerate(part.component_members):
            for v in members:
                assert part.component_id[v] == cid


def test_components_ordered_by_smallest_member():
    g = build_graph(["a1", "a2"], ["b1", "b2"], [("a1", "b2"), ("a2", "b1")])
    part = connected_components(g)
    assert part.component_members[0][0] < part.component_members[1][0]


def test_path_and_cycle_generators():
    p = path_graph(6)
    assert p.n == 6 and p.m == 5
    c = cycle_graph(6)
    assert c.n == 6 and c.m == 6
    assert all(c.degree(v) == 2 for v in range(c.n))


def test_spider_generator_shape():
    g = spider_graph([1, 1, 2, 2])
    hub = g.label_index["x"]
    assert g.degree(hub) == 4
    assert g.n == 1 + 1 + 1 + 2 + 2


def test_broom_generator_shape():
    g = broom_graph(3, 4)
    assert g.n == 2 + 3 + 4
    assert g.m == 1 + 3 + 4


def test_caterpillar_generator_shape():
    g = caterpillar_graph(6)
    assert g.m == g.n - 1  # a tree


def test_random_generator_is_seeded():
    assert random_bipartite(5, 5, 0.4, seed=9) == random_bipartite(
        5, 5, 0.4, seed=9
    )
    assert random_bipartite(5, 5, 0.4, seed=9) != random_bipartite(
        5, 5, 0.4, seed=10
    )


@pytest.mark.parametrize("kind", ["spider", "broom", "caterpillar", "random"])
def test_generate_instance_size_tracks_request(kind):
    g = generate_instance(kind, 60, 0, None)
    assert 30 <= g.n <= 120


def test_generate_instance_rejects_unknown_kind():
    with pytest.raises(ValueError):
        generate_instance("torus", 10, 0, None)
