"""Tests for graph construction, distances, and distance-regularity."""

import numpy as np
import pytest

from terwalg.graphs import (
    DistanceData,
    Graph,
    brute_force_p,
    distance_matrix,
    hypercube,
    is_distance_regular,
    parse_graph_file,
)
from terwalg.hypercube import intersection_table


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def test_hypercube_structure():
    g = hypercube(3)
    assert g.n == 8
    assert g.m == 12  # d * 2^(d-1)
    for u in range(g.n):
        assert sorted(g.neighbors[u]) == sorted(u ^ (1 << b) for b in range(3))


def test_hypercube_bounds():
    assert hypercube(0).n == 1
    with pytest.raises(ValueError):
        hypercube(13)
    with pytest.raises(ValueError):
        hypercube(-1)


def test_distances_match_popcount():
    for d in range(0, 7):
        g = hypercube(d)
        dd = DistanceData.compute(g)
        u = np.arange(g.n)
        xor = u[:, None] ^ u[None, :]
        pop = np.array([[bin(v).count("1") for v in row] for row in xor])
        assert (dd.dist == pop).all()
        assert dd.diameter == d


def test_from_edges_validation():
    with pytest.raises(ValueError, match="out of range"):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(ValueError, match="loop"):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(ValueError, match="duplicate"):
        Graph.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError, match="not connected"):
        Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError, match="positive"):
        Graph.from_edges(0, [])


def test_parse_graph_file():
    text = "# triangle\n\n3 3\n0 1\n1 2\n\n2 0\n"
    g = parse_graph_file(text)
    assert g.n == 3 and g.m == 3


def test_parse_graph_file_errors():
    with pytest.raises(ValueError, match="empty graph file"):
        parse_graph_file("# nothing here\n")
    with pytest.raises(ValueError, match="line 1"):
        parse_graph_file("3\n0 1\n")
    with pytest.raises(ValueError, match="expected 2 edge lines"):
        parse_graph_file("3 2\n0 1\n")
    with pytest.raises(ValueError, match="line 2"):
        parse_graph_file("2 1\n0 x\n")


def test_parse_matches_builtin_hypercube():
    g = hypercube(3)
    lines = [f"{g.n} {g.m}"]
    for u in range(g.n):
        for v in g.neighbors[u]:
            if u < v:
                lines.append(f"{u} {v}")
    parsed = parse_graph_file("\n".join(lines))
    assert parsed.neighbors == g.neighbors


def test_distance_matrix_entries():
    g = hypercube(2)
    dd = DistanceData.compute(g)
    a1 = distance_matrix(g, dd, 1)
    assert a1[0, 1] == 1 and a1[0, 3] == 0
    assert distance_matrix(g, dd, 5).is_zero()


def test_brute_force_p_values():
    g = hypercube(3)
    dd = DistanceData.compute(g)
    assert brute_force_p(g, dd, 2, 1, 1) == 2
    g4 = hypercube(4)
    dd4 = DistanceData.compute(g4)
    assert brute_force_p(g4, dd4, 1, 1, 1) == 0  # bipartite: no triangles
    assert brute_force_p(g4, dd4, 2, 2, 2) == 4
    with pytest.raises(ValueError, match="no pair"):
        brute_force_p(g, dd, 7, 0, 0)


def test_brute_force_p_non_constant():
    # (0,1,1) counts the degree of x, which varies on a path.
    g = path(4)
    dd = DistanceData.compute(g)
    with pytest.raises(ValueError, match="not constant"):
        brute_force_p(g, dd, 0, 1, 1)


def test_is_distance_regular_hypercube():
    g = hypercube(3)
    dd = DistanceData.compute(g)
    ok, table = is_distance_regular(g, dd)
    assert ok
    assert (table == intersection_table(3)).all()


def test_is_distance_regular_cycle():
    g = cycle(6)
    dd = DistanceData.compute(g)
    ok, table = is_distance_regular(g, dd)
    assert ok
    assert table[1, 1, 2] == 1


def test_path_is_not_distance_regular():
    g = path(4)
    dd = DistanceData.compute(g)
    ok, witness = is_distance_regular(g, dd)
    assert not ok
    h, i, j, pair_a, count_a, pair_b, count_b = witness
    # Lexicographically first failing triple, with differing counts.
    assert (h, i, j) == (0, 1, 1)
    assert count_a != count_b
    bi = (dd.dist == i).astype(int)
    bj = (dd.dist == j).astype(int)
    counts = bi @ bj.T
    assert counts[pair_a] == count_a and counts[pair_b] == count_b
