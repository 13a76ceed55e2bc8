from math import comb

import numpy as np
import pytest
from hypothesis import given, settings

from geodex.corpus import PETERSEN_EDGES, complete, cycle, path
from geodex.graph import (
    DisconnectedGraphError,
    GraphError,
    complement,
    complementary_prism,
    degree_stats,
    distances,
    find_isomorphism,
    from_edges,
    girth,
    is_extreme,
    max_degree_excluding,
    pendant_neighbor_count,
)
from geodex.trees import named_family

from conftest import any_graphs, connected_graphs


def test_from_edges_path(p4):
    assert degree_stats(p4)[1] == (1, 2, 2, 1)


def test_from_edges_k1():
    g = from_edges(1, [])
    assert g.n == 1 and g.m == 0


def test_from_edges_cycle(c5):
    assert all(c5.degree(v) == 2 for v in range(5))


def test_from_edges_collapses_duplicates():
    g = from_edges(3, [(0, 1), (1, 0), (0, 1), (1, 2)])
    assert g.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_from_edges_rejects(edges):
    with pytest.raises(GraphError):
        from_edges(3, edges)


def test_complement_small():
    assert complement(from_edges(1, [])).m == 0
    assert complement(path(3)).edges() == [(0, 2)]


def test_complement_c5_is_c5(c5):
    h = complement(c5)
    assert sorted(map(len, h.adj)) == [2] * 5
    # a connected 2-regular graph on 5 vertices is the 5-cycle
    assert h.is_connected()
    assert find_isomorphism(h, c5) is not None


def test_complement_rejects_prism(p4):
    with pytest.raises(GraphError):
        complement(complementary_prism(p4))


def test_prism_of_k1_is_k2():
    p = complementary_prism(from_edges(1, []))
    assert p.n == 2 and p.edges() == [(0, 1)] and p.base_n == 1


def test_prism_of_p3():
    p = complementary_prism(path(3))
    assert p.edges() == [(0, 1), (0, 3), (1, 2), (1, 4), (2, 5), (3, 5)]
    assert p.m == comb(3, 2) + 3


def test_prism_of_c5_is_petersen(c5):
    p = complementary_prism(c5)
    assert (p.n, p.m) == (10, 15)
    assert all(p.degree(v) == 3 for v in range(10))
    assert girth(p) == 5
    assert distances(p).diam == 2
    assert find_isomorphism(p, from_edges(10, PETERSEN_EDGES)) is not None


def test_prism_mirror():
    p = complementary_prism(path(4))
    assert [p.mirror(v) for v in range(8)] == [4, 5, 6, 7, 0, 1, 2, 3]


def test_prism_tag_checks_matching():
    from geodex.graph import Graph

    g = path(4)
    with pytest.raises(GraphError):
        Graph(4, g.adj, base_n=2)


def test_distances_p5():
    dm = distances(path(5))
    assert (dm.diam, dm.rad, dm.center) == (4, 2, frozenset({2}))


def test_distances_star():
    dm = distances(named_family("star", 3).graph)
    assert dm.rad == 1 and dm.center == {0} and dm.periphery == {1, 2, 3}


def test_distances_disconnected_names_components():
    with pytest.raises(DisconnectedGraphError) as info:
        distances(from_edges(4, [(0, 1), (2, 3)]))
    assert info.value.representatives == (0, 2)
    assert "0" in str(info.value) and "2" in str(info.value)


def test_degree_stats():
    assert degree_stats(path(4))[0] == 2 and degree_stats(path(4))[2] == {0, 3}
    k14 = named_family("star", 4).graph
    assert degree_stats(k14)[0] == 4 and degree_stats(k14)[2] == {1, 2, 3, 4}
    c = cycle(5)
    assert degree_stats(c)[0] == 2 and degree_stats(c)[2] == frozenset()


def test_pendant_neighbor_count():
    assert pendant_neighbor_count(named_family("star", 3).graph, 0) == 3
    assert pendant_neighbor_count(path(4), 1) == 1
    ds = named_family("double_star", 2, 3).graph
    assert pendant_neighbor_count(ds, 0) == 2
    assert pendant_neighbor_count(ds, 1) == 3
    with pytest.raises(GraphError):
        pendant_neighbor_count(ds, 99)


def test_max_degree_excluding():
    assert max_degree_excluding(named_family("star", 4).graph, 0) == 1
    assert max_degree_excluding(named_family("star_of_stars", 3, 2).graph, 0) == 3
    assert max_degree_excluding(path(4), 1) == 2
    with pytest.raises(GraphError):
        max_degree_excluding(from_edges(1, []), 0)


def test_is_extreme():
    t = named_family("caterpillar", 3, [1, 2, 0]).graph
    pendants = degree_stats(t)[2]
    assert pendants and all(is_extreme(t, v) for v in pendants)
    assert not is_extreme(path(3), 1)
    assert all(is_extreme(complete(4), v) for v in range(4))


@given(any_graphs(max_n=10))
def test_complement_involution(g):
    assert complement(complement(g)).edges() == g.edges()


@given(any_graphs(max_n=10))
def test_prism_counts_and_degrees(g):
    p = complementary_prism(g)
    n = g.n
    assert p.m == comb(n, 2) + n
    for v in range(n):
        assert p.degree(v) == g.degree(v) + 1
        assert p.degree(v + n) == (n - 1 - g.degree(v)) + 1
        assert p.has_edge(v, v + n)
    assert p.is_connected()


@settings(max_examples=60)
@given(connected_graphs(max_n=12))
def test_distance_matrix_axioms(g):
    dm = distances(g)
    d = dm.dist
    assert (d == d.T).all()
    assert (np.diag(d) == 0).all()
    off = ~np.eye(g.n, dtype=bool)
    assert (d[off] > 0).all()
    # triangle inequality over every triple
    assert (d[:, None, :] <= d[:, :, None] + d[None, :, :]).all()
    for u in range(g.n):
        for v in range(g.n):
            assert (d[u, v] == 1) == g.has_edge(u, v)
    assert dm.rad <= dm.diam <= 2 * dm.rad


def test_girth_forest_is_infinite():
    assert girth(path(5)) == float("inf")
    assert girth(cycle(7)) == 7
