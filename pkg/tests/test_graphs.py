"""Graph construction, parsing, products, distances, isometric subgraphs."""

import pytest

from awgraph import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    Graph,
    GraphError,
    GridCoordinates,
    MalformedEdgeError,
    MalformedHeaderError,
    SelfLoopError,
    VertexRangeError,
    all_pairs_distances,
    build_complete,
    build_cycle,
    build_grid,
    build_path,
    build_star,
    cartesian_product,
    graph_to_text,
    induced_subgraph,
    is_isometric_subgraph,
    layer_vertices,
    parse_graph,
)
from prop_helpers import random_connected_graph, small_corpus


def test_builders_basic_shapes():
    p1 = build_path(1)
    assert p1.n == 1 and p1.m == 0
    p4 = build_path(4)
    assert p4.edges() == ((0, 1), (1, 2), (2, 3))
    c6 = build_cycle(6)
    assert c6.n == 6 and c6.m == 6
    k5 = build_complete(5)
    assert k5.m == 10
    s4 = build_star(4)
    assert s4.adjacency[0] == (1, 2, 3)
    assert all(s4.adjacency[i] == (0,) for i in range(1, 4))


def test_builder_size_validation():
    with pytest.raises(GraphError):
        build_path(0)
    with pytest.raises(GraphError):
        build_cycle(2)
    with pytest.raises(GraphError):
        build_star(1)
    with pytest.raises(GraphError):
        build_complete(0)


def test_graph_invariants_enforced():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (0, 1)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(DisconnectedGraphError):
        Graph.from_edges(4, [(0, 1), (2, 3)])


def test_parse_graph_round_trip():
    for name, g in small_corpus():
        parsed = parse_graph(graph_to_text(g))
        assert parsed == g, f"round trip failed for {name}"


def test_parse_graph_accepts_comments_and_blanks():
    text = "# a triangle\n3 3\n\n0 1\n# middle comment\n0 2\n1 2\n"
    assert parse_graph(text) == build_cycle(3)


def test_parse_graph_distinct_errors():
    with pytest.raises(MalformedHeaderError):
        parse_graph("")
    with pytest.raises(MalformedHeaderError):
        parse_graph("3\n0 1\n")
    with pytest.raises(MalformedHeaderError):
        parse_graph("x y\n")
    with pytest.raises(MalformedEdgeError):
        parse_graph("3 2\n0 1\n")  # edge count mismatch
    with pytest.raises(MalformedEdgeError):
        parse_graph("3 1\n0 1 2\n")
    with pytest.raises(MalformedEdgeError):
        parse_graph("3 2\n1 0\n1 2\n")  # u > v
    with pytest.raises(VertexRangeError):
        parse_graph("3 1\n0 3\n")
    with pytest.raises(SelfLoopError):
        parse_graph("3 1\n1 1\n")
    with pytest.raises(DuplicateEdgeError):
        parse_graph("3 3\n0 1\n0 1\n1 2\n")
    with pytest.raises(DisconnectedGraphError):
        parse_graph("3 1\n0 1\n")


def test_cartesian_product_ids_and_sizes():
    g = cartesian_product(build_path(2), build_path(3))
    assert g.n == 6 and g.m == 7
    # vertex (a, b) sits at a*|H| + b; (0,0)-(1,0) and (0,0)-(0,1) are edges
    assert 3 in g.adjacency[0] and 1 in g.adjacency[0]
    assert 2 not in g.adjacency[0]


def test_cartesian_product_commutes_up_to_relabeling():
    pairs = [
        (build_path(2), build_cycle(3)),
        (build_path(3), build_star(4)),
        (build_complete(3), build_path(4)),
    ]
    for g, h in pairs:
        gh = cartesian_product(g, h)
        hg = cartesian_product(h, g)
        # (a, b) -> (b, a) maps id a*h.n + b to b*g.n + a
        remap = {a * h.n + b: b * g.n + a for a in range(g.n) for b in range(h.n)}
        edges = {tuple(sorted((remap[u], remap[v]))) for u, v in gh.edges()}
        assert edges == set(hg.edges())


def test_grid_coordinates_bijection_and_distance_formula():
    for m in range(1, 7):
        for n in range(1, 7):
            if m * n > 36:
                continue
            g, coords = build_grid(m, n)
            seen = set()
            for i in range(1, m + 1):
                for j in range(1, n + 1):
                    v = coords.vertex(i, j)
                    assert coords.coords(v) == (i, j)
                    seen.add(v)
            assert seen == set(range(m * n))
            dist = all_pairs_distances(g)
            for i in range(1, m + 1):
                for j in range(1, n + 1):
                    for a in range(1, m + 1):
                        for b in range(1, n + 1):
                            expected = abs(i - a) + abs(j - b)
                            assert dist.d(coords.vertex(i, j), coords.vertex(a, b)) == expected


def test_grid_coordinates_validation():
    coords = GridCoordinates(2, 3)
    with pytest.raises(GraphError):
        coords.vertex(0, 1)
    with pytest.raises(GraphError):
        coords.vertex(1, 4)
    with pytest.raises(GraphError):
        coords.coords(6)


def test_distance_matrix_invariants():
    for name, g in small_corpus():
        dist = all_pairs_distances(g)
        for u in range(g.n):
            assert dist.d(u, u) == 0
            for v in range(g.n):
                assert dist.d(u, v) == dist.d(v, u)
                assert (dist.d(u, v) == 1) == (v in g.adjacency[u])
                for w in range(g.n):
                    assert dist.d(u, w) <= dist.d(u, v) + dist.d(v, w), name
    rng_graph = random_connected_graph(9, seed=93)
    dist = all_pairs_distances(rng_graph)
    assert all(dist.d(0, v) >= 0 for v in range(rng_graph.n))


def test_known_distances():
    assert all_pairs_distances(build_path(4)).d(0, 3) == 3
    assert all_pairs_distances(build_cycle(6)).d(0, 3) == 3
    assert all_pairs_distances(build_star(4)).d(1, 2) == 2


def test_layer_vertices():
    assert layer_vertices(2, 3, 0) == (0, 3)
    assert layer_vertices(2, 3, 2) == (2, 5)
    with pytest.raises(GraphError):
        layer_vertices(2, 3, 3)


def test_induced_subgraph_relabels():
    g, coords = build_grid(2, 3)
    row = coords.row_vertices(1)
    assert induced_subgraph(g, row) == build_path(3)
    with pytest.raises(DisconnectedGraphError):
        induced_subgraph(build_path(3), [0, 2])
    with pytest.raises(GraphError):
        induced_subgraph(g, [])


def test_is_isometric_subgraph():
    g, coords = build_grid(3, 4)
    dist = all_pairs_distances(g)
    assert is_isometric_subgraph(g, coords.row_vertices(2), dist)
    assert is_isometric_subgraph(g, coords.column_vertices(3), dist)
    sub = coords.row_vertices(1) + coords.row_vertices(2)
    assert is_isometric_subgraph(g, sub, dist)
    assert is_isometric_subgraph(g, range(g.n), dist)
    # disconnected induced subgraph
    assert not is_isometric_subgraph(build_path(3), [0, 2])
    # connected but distance-inflating: a 5-vertex arc of a 6-cycle
    c6 = build_cycle(6)
    assert is_isometric_subgraph(c6, [0, 1, 2, 3])
    assert not is_isometric_subgraph(c6, [0, 1, 2, 3, 4])
    with pytest.raises(GraphError):
        is_isometric_subgraph(c6, [])
