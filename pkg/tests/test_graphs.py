from __future__ import annotations

import math

import numpy as np
import pytest

from graphs import (
    INFINITY,
    bfs_distances,
    diameter,
    diameter_all_pairs,
    diameter_plus,
    edge_ball,
    radius_from,
    to_networkx,
    tree_diameter,
    vertex_ball
)
from models import DegreeSequence, LabeledGraph, MultiGraph
from sample import sample_configuration_rejection


def _path(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges([(i, i + 1) for i in range(1, n)])


def _cycle(labels) -> LabeledGraph:
    labels = list(labels)
    return LabeledGraph.from_edges(list(zip(labels, labels[1:] + labels[:1])))


def _two_triangles() -> LabeledGraph:
    return _cycle([1, 2, 3]).union(_cycle([4, 5, 6]))


def _k4() -> LabeledGraph:
    return LabeledGraph.from_edges([(u, v) for u in range(1, 5) for v in range(u + 1, 5)])


@pytest.mark.parametrize("G, expected", [
    (_path(4), 3),
    (_two_triangles(), 1),
    (_k4(), 1),
    (LabeledGraph.empty(), 0),
])
def test_diameter(G, expected):
    assert diameter(G) == expected
    assert diameter_all_pairs(G) == expected


@pytest.mark.parametrize("G, expected", [
    (_two_triangles(), INFINITY),
    (_cycle([1, 2, 3, 4, 5]), 2),
    (LabeledGraph.from_edges([(1, 2)]), 1),
])
def test_diameter_plus(G, expected):
    assert diameter_plus(G) == expected
    assert diameter_all_pairs(G, connected_only=True) == expected


def test_diameter_plus_never_below_diameter():
    for G in (_path(6), _two_triangles(), _k4(), _cycle(range(1, 8))):
        assert diameter(G) <= diameter_plus(G)
        assert (diameter(G) == diameter_plus(G)) == G.is_connected()


def test_bfs_from_several_sources_and_radius():
    G = _path(5)
    assert bfs_distances(G, [1, 5]) == {1: 0, 5: 0, 2: 1, 4: 1, 3: 2}
    assert radius_from(G, 3) == 2
    with pytest.raises(ValueError):
        bfs_distances(G, 9)


def test_tree_diameter_matches_bfs_on_random_trees():
    rng = np.random.default_rng(5)
    for _ in range(20):
        n = int(rng.integers(2, 30))
        edges = [(v, int(rng.integers(1, v))) for v in range(2, n + 1)]
        T = LabeledGraph.from_edges(edges)
        assert tree_diameter(T) == diameter(T)


def test_edge_ball_on_a_path():
    # a-b-c-d as 1-2-3-4
    K = MultiGraph(frozenset({1, 2, 3, 4}), ((1, 2), (2, 3), (3, 4)))
    assert edge_ball(K, [1], 0) == frozenset()
    assert edge_ball(K, [1], 1) == frozenset({0})
    assert edge_ball(K, K.vertices, 0) == frozenset({0, 1, 2})
    assert edge_ball(_path(4), [1], 1) == frozenset({(1, 2)})
    assert vertex_ball(K, [1], 2) == frozenset({1, 2, 3})
    with pytest.raises(ValueError):
        edge_ball(K, [1], -1)


def test_multigraph_distances_ignore_loops_and_parallel_edges():
    K = MultiGraph(frozenset({1, 2, 3}), ((1, 1), (1, 2), (1, 2), (2, 3)), ((4, 5), (), (6,), ()))
    assert diameter(K) == 2
    assert diameter_plus(K) == 2


def test_scipy_and_bfs_diameters_agree_on_cubic_graphs():
    d = DegreeSequence.from_degrees([3] * 40)
    rng = np.random.default_rng(17)
    for _ in range(5):
        G = sample_configuration_rejection(d, "all", rng)
        assert diameter_all_pairs(G) == diameter(G)
        expected = diameter(G) if G.is_connected() else math.inf
        assert diameter_all_pairs(G, connected_only=True) == expected


def test_networkx_cross_check():
    nx = pytest.importorskip("networkx")
    G = _cycle(range(1, 8)).union(LabeledGraph.from_edges([(7, 8), (8, 9)]))
    assert nx.diameter(to_networkx(G)) == diameter(G)
    K = MultiGraph(frozenset({1, 2}), ((1, 2), (1, 2)), ((3,), ()))
    assert to_networkx(K).number_of_edges() == 2
