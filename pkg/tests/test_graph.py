import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eccspec.generators import complete, cycle, path, star
from eccspec.graph import (
    UNREACHABLE,
    DisconnectedGraphError,
    Graph,
    GraphFormatError,
    bfs_distances,
    is_connected,
    metric,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
)

from .oracles import floyd_warshall


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, (p for p, keep in zip(pairs, mask) if keep))


def test_parse_path():
    g = parse_edge_list("3\n0 1\n1 2")
    assert g == path(3)
    assert g.adjacency == ((1,), (0, 2), (1,))


def test_parse_star_and_comments():
    g = parse_edge_list("# K_{1,4}\n5\n0 1\n0 2\n\n0 3\n0 4\n")
    assert g == star(5)


def test_parse_rejects_self_loop():
    with pytest.raises(GraphFormatError, match="self-loop"):
        parse_edge_list("2\n0 0")


def test_parse_reports_line_number():
    with pytest.raises(GraphFormatError, match="line 3"):
        parse_edge_list("3\n0 1\n1 x")


def test_parse_out_of_range():
    with pytest.raises(GraphFormatError):
        parse_edge_list("2\n0 5")


def test_parse_dedups_and_isolated_via_header():
    g = parse_edge_list("4\n0 1\n1 0\n0 1")
    assert g.n == 4 and g.m == 1
    assert not is_connected(g)
    assert parse_edge_list("0 1\n1 2").n == 3


def test_edge_list_roundtrip():
    g = cycle(5)
    assert parse_edge_list(to_edge_list(g)) == g


def test_graph6_k2():
    # one edge, bit string "1" padded to 100000 = 32; 32 + 63 = '_'; n = 2 -> 'A'
    assert to_graph6(Graph.from_edges(2, [(0, 1)])) == "A_"


def test_graph6_known_string():
    g = parse_graph6("D?{")
    assert g.n == 5
    assert g.edges == {(0, 4), (1, 4), (2, 4), (3, 4)}
    assert to_graph6(g) == "D?{"


def test_graph6_header_ignored():
    assert parse_graph6(">>graph6<<A_") == parse_graph6("A_")


@pytest.mark.parametrize("bad", ["", "   ", "A", "A__", "D?", "\x7fA"])
def test_graph6_errors(bad):
    with pytest.raises(GraphFormatError):
        parse_graph6(bad)


def test_graph6_large_n_header():
    g = path(70)
    code = to_graph6(g)
    assert code.startswith("~")
    assert parse_graph6(code) == g


@given(graphs())
@settings(max_examples=300, deadline=None)
def test_graph6_roundtrip_property(g):
    assert parse_graph6(to_graph6(g)) == g


def test_graph6_roundtrip_random_1000():
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.randint(1, 20)
        p = rng.random()
        g = Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p))
        code = to_graph6(g)
        assert parse_graph6(code) == g
        assert to_graph6(parse_graph6(code)) == code


def test_graph6_roundtrip_enumerated(graphs_upto7):
    for g in graphs_upto7:
        assert parse_graph6(to_graph6(g)) == g


def test_bfs_examples():
    assert bfs_distances(path(4), 0) == [0, 1, 2, 3]
    assert bfs_distances(star(5), 0) == [0, 1, 1, 1, 1]
    assert bfs_distances(Graph.from_edges(2, []), 0) == [0, UNREACHABLE]
    with pytest.raises(ValueError):
        bfs_distances(path(3), 3)


def test_metric_examples():
    m = metric(path(4))
    assert m.ecc == (3, 2, 2, 3) and (m.diam, m.rad) == (3, 2)
    m = metric(cycle(6))
    assert m.ecc == (3,) * 6 and m.diam == m.rad == 3
    m = metric(star(5))
    assert m.ecc == (1, 2, 2, 2, 2) and (m.diam, m.rad) == (2, 1)


def test_metric_disconnected():
    with pytest.raises(DisconnectedGraphError, match="eccentricity undefined"):
        metric(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_is_connected_examples():
    assert is_connected(complete(4))
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(Graph.from_edges(1, []))


def _check_metric(g):
    m = metric(g)
    fw = floyd_warshall(g.n, g.edges)
    assert [list(r) for r in m.dist] == fw
    n = g.n
    for u in range(n):
        assert m.dist[u][u] == 0
        assert m.ecc[u] == max(m.dist[u])
        for v in range(n):
            assert m.dist[u][v] == m.dist[v][u]
            if u != v:
                assert m.dist[u][v] >= 1
            for w in range(n):
                assert m.dist[u][w] <= m.dist[u][v] + m.dist[v][w]
    assert m.rad <= m.diam <= 2 * m.rad
    assert m.diam == max(m.ecc) and m.rad == min(m.ecc)


def test_metric_matches_floyd_warshall_exhaustive(graphs_upto7):
    for g in graphs_upto7:
        _check_metric(g)


def test_metric_matches_floyd_warshall_random():
    from eccspec.generators import random_connected_graph

    for seed in range(20):
        _check_metric(random_connected_graph(25, 0.15, seed))


def test_graph_invariants():
    g = Graph.from_edges(4, [(2, 1), (1, 2), (0, 3)])
    assert g.edges == {(1, 2), (0, 3)}
    assert all(list(row) == sorted(row) for row in g.adjacency)
    for u, v in g.edges:
        assert v in g.adjacency[u] and u in g.adjacency[v]
    with pytest.raises(ValueError):
        Graph.from_edges(0, [])
    with pytest.raises(GraphFormatError):
        Graph.from_edges(3, [(1, 1)])
