from itertools import combinations

import pytest
from hypothesis import given

from mdimlab import (
    DisconnectedError,
    GraphError,
    LoopEdgeError,
    TooSmallError,
    build_graph,
    edge_edge_distance,
    edge_element,
    gn_graph,
    mixed_distance,
    mixed_elements,
    path_graph,
    cycle_graph,
    vertex_edge_distance,
    vertex_element,
)

from conftest import connected_graphs, oracle_distances


def test_smallest_graph_is_a_single_edge():
    g = build_graph(2, [(0, 1)])
    assert g.n == 2 and g.edges == ((0, 1),)


def test_edge_list_is_canonicalized():
    a = build_graph(4, [(3, 2), (1, 0), (2, 0)])
    b = build_graph(4, [(0, 1), (0, 2), (2, 3)])
    assert a == b
    assert a.edges == ((0, 1), (0, 2), (2, 3))


def test_duplicate_edges_collapse():
    g = build_graph(3, [(0, 1), (1, 0), (1, 2), (1, 2)])
    assert g.m == 2


def test_rejects_loops():
    with pytest.raises(LoopEdgeError):
        build_graph(3, [(0, 1), (1, 1), (1, 2)])


def test_rejects_disconnected():
    with pytest.raises(DisconnectedError):
        build_graph(3, [(0, 1)])


def test_rejects_single_vertex():
    with pytest.raises(TooSmallError):
        build_graph(1, [])


def test_rejects_out_of_range_endpoint():
    with pytest.raises(GraphError):
        build_graph(3, [(0, 1), (1, 3)])


def test_path_distances():
    g = path_graph(4)
    assert g.distances[0][3] == 3
    assert g.distances[0][1] == 1


def test_even_cycle_antipodal_distance():
    assert cycle_graph(6).distances[0][3] == 3


def test_gn_construction_matches_counts():
    g5, names = gn_graph(5)
    assert g5.n == 7 and g5.m == 11
    assert names["x"] == 0 and names["y"] == 1 and names["z5"] == 6


@pytest.mark.parametrize(
    "n, edges, v, edge, expected",
    [
        (4, [(0, 1), (1, 2), (2, 3)], 0, (2, 3), 2),
        (4, [(0, 1), (1, 2), (2, 3)], 2, (2, 3), 0),
        (6, [(i, (i + 1) % 6) for i in range(6)], 0, (2, 3), 2),
    ],
)
def test_vertex_edge_distance(n, edges, v, edge, expected):
    g = build_graph(n, edges)
    assert vertex_edge_distance(g, v, g.edge_index(*edge)) == expected
    # independent route: min over endpoints of BFS distances
    dist = oracle_distances(n, edges)
    assert expected == min(dist[edge[0]][v], dist[edge[1]][v])


def test_edge_edge_distance_examples(g2):
    p4 = path_graph(4)
    assert edge_edge_distance(p4, p4.edge_index(0, 1), p4.edge_index(2, 3)) == 1
    assert edge_edge_distance(p4, p4.edge_index(1, 2), p4.edge_index(1, 2)) == 0
    # two-hub graph: x-z1 vs y-z2 meet after one hop (brute force over endpoint pairs)
    e = g2.edge_index(0, 2)
    f = g2.edge_index(1, 3)
    dist = oracle_distances(g2.n, g2.edges)
    brute = min(dist[a][b] for a in (0, 2) for b in (1, 3))
    assert edge_edge_distance(g2, e, f) == brute == 1


def test_mixed_distance_examples():
    p4 = path_graph(4)
    assert mixed_distance(p4, vertex_element(0), 0) == 0
    assert mixed_distance(p4, edge_element(p4.edge_index(1, 2)), 0) == 1
    g5, names = gn_graph(5)
    hub_edge = edge_element(g5.edge_index(names["x"], names["y"]))
    dist = oracle_distances(g5.n, g5.edges)
    expected = min(dist[names["x"]][names["z3"]], dist[names["y"]][names["z3"]])
    assert mixed_distance(g5, hub_edge, names["z3"]) == expected == 1


def test_mixed_universe_order():
    g = path_graph(3)
    elems = mixed_elements(g)
    assert elems[: g.n] == [vertex_element(v) for v in range(g.n)]
    assert elems[g.n :] == [edge_element(j) for j in range(g.m)]


@given(connected_graphs())
def test_distance_matrix_properties(g):
    d = g.distances
    for u in range(g.n):
        assert d[u][u] == 0
        for v in range(g.n):
            assert d[u][v] == d[v][u] >= 0
    for u, v, w in combinations(range(g.n), 3):
        assert d[u][w] <= d[u][v] + d[v][w]
        assert d[u][v] <= d[u][w] + d[w][v]
        assert d[v][w] <= d[v][u] + d[u][w]


@given(connected_graphs())
def test_vertex_edge_zero_iff_endpoint(g):
    for j, (a, b) in enumerate(g.edges):
        for v in range(g.n):
            hit = vertex_edge_distance(g, v, j) == 0
            assert hit == (v in (a, b))


@given(connected_graphs())
def test_edge_edge_zero_iff_sharing(g):
    for e in range(g.m):
        for f in range(g.m):
            share = bool(set(g.edges[e]) & set(g.edges[f]))
            assert (edge_edge_distance(g, e, f) == 0) == share


@given(connected_graphs())
def test_distances_match_oracle(g):
    oracle = oracle_distances(g.n, g.edges)
    for u in range(g.n):
        for v in range(g.n):
            assert g.distances[u][v] == oracle[u][v]
