from __future__ import annotations

import pytest

from decompose import (
    attached_forest,
    core,
    core_decomposition,
    cycle_vertex_count,
    decomposition_report,
    diameter_bound_parts,
    expand_homeo_reduction,
    hanging_trees,
    kernel,
    replace_kernel_edge,
    simple_homeo_reduction,
    simple_kernel,
    simple_kernel_inequalities,
    splice_simple_kernel,
    split_cycle_components,
    suppressed_labels
)
from models import DegreeSequence, LabeledGraph, NotApplicableError, RootedForest
from sample import iter_graphs


def _graph(*edges) -> LabeledGraph:
    return LabeledGraph.from_edges(edges)


def _cycle(labels) -> LabeledGraph:
    labels = list(labels)
    return LabeledGraph.from_edges(list(zip(labels, labels[1:] + labels[:1])))


def _k4() -> LabeledGraph:
    return LabeledGraph.from_edges([(u, v) for u in range(1, 5) for v in range(u + 1, 5)])


def _triangle_with_pendant() -> LabeledGraph:
    return _graph((1, 2), (2, 3), (1, 3), (3, 4))


def _theta_with_direct_edge() -> LabeledGraph:
    # 1 and 2 joined directly, through 3-4 and through 5
    return _graph((1, 2), (1, 3), (3, 4), (4, 2), (1, 5), (5, 2))


def _subdivided_k4() -> LabeledGraph:
    # K4 on 1..4 with its six edges subdivided by 5..11
    return _graph((1, 5), (5, 2), (1, 6), (6, 7), (7, 3), (1, 4), (2, 8), (8, 9), (9, 10), (10, 3),
                  (2, 4), (3, 11), (11, 4))


def test_core_of_tree_is_empty():
    assert core(_graph((1, 2), (2, 3), (2, 4))).is_empty


def test_core_of_cycle_and_subdivided_k4_is_itself():
    C5 = _cycle(range(1, 6))
    assert core(C5) == C5
    assert core(_subdivided_k4()) == _subdivided_k4()


def test_core_strips_pendant_paths():
    G = _triangle_with_pendant().union(_graph((4, 5)))
    assert core(G) == _cycle([1, 2, 3])


def test_attached_forest_of_path_deletes_minimum_leaf():
    decomposition = core_decomposition(_graph((1, 3), (3, 2)))
    forest = decomposition.forest
    assert decomposition.removed_leaves == frozenset({1})
    assert forest.roots == (3,)
    assert forest.children(3) == (2,)
    assert forest.height == 1


def test_attached_forest_of_cycle_is_empty():
    assert attached_forest(_cycle([1, 2, 3])).is_empty


def test_attached_forest_of_triangle_with_pendant():
    decomposition = core_decomposition(_triangle_with_pendant())
    assert decomposition.forest.roots == (4,)
    assert decomposition.forest.height == 0
    assert decomposition.alpha(4) == 3
    assert decomposition.alpha(1) == 1


def test_alpha_undefined_on_tree_components():
    decomposition = core_decomposition(_triangle_with_pendant().union(_graph((7, 8))))
    with pytest.raises(ValueError):
        decomposition.alpha(8)


def test_kernel_of_cycle_is_empty():
    assert kernel(_cycle(range(1, 7))).is_empty


def test_kernel_of_unicyclic_graph_is_a_loop():
    K = kernel(_triangle_with_pendant())
    assert K.vertices == frozenset({3})
    assert K.endpoints == ((3, 3),)
    assert K.paths == ((1, 2),)


def test_kernel_of_subdivided_k4():
    K = kernel(_subdivided_k4())
    assert K.vertices == frozenset({1, 2, 3, 4})
    assert K.endpoints == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
    assert K.paths == ((5,), (6, 7), (), (8, 9, 10), (), (11,))


def test_kernel_orders_parallel_edges_by_smallest_internal_label():
    K = kernel(_theta_with_direct_edge())
    assert K.endpoints == ((1, 2), (1, 2), (1, 2))
    assert K.paths == ((), (3, 4), (5,))
    assert [K.multiplicity(i) for i in range(3)] == [3, 3, 3]


def test_simple_kernel_of_k4_is_k4_all_mutable():
    kernel_star = simple_kernel(_k4())
    assert kernel_star.graph == _k4()
    assert kernel_star.mutable_edges == _k4().edges
    assert kernel_star.path_lengths() == (0,) * 6


def test_simple_kernel_of_loop_is_triangle():
    kernel_star = simple_kernel(_triangle_with_pendant())
    assert kernel_star.graph == _cycle([1, 2, 3])
    assert kernel_star.mutable_edges == frozenset({(1, 2)})


def test_simple_kernel_of_parallel_edges():
    kernel_star = simple_kernel(_theta_with_direct_edge())
    assert kernel_star.mutable_edges == frozenset({(1, 4), (1, 5)})
    assert kernel_star.immutable_edges == frozenset({(1, 2), (2, 4), (2, 5)})
    assert kernel_star.path_map[(1, 4)] == (3,)
    assert kernel_star.path_map[(1, 5)] == ()


def test_replace_kernel_edge_rules():
    assert replace_kernel_edge(1, 2, (5, 6), 1) == [((1, 2), True, (5, 6))]
    assert replace_kernel_edge(1, 2, (), 2) == [((1, 2), False, ())]
    assert replace_kernel_edge(1, 2, (5, 6), 2) == [((1, 6), True, (5,)), ((2, 6), False, ())]
    assert replace_kernel_edge(3, 3, (7, 8, 9), 1) == [((3, 7), False, ()), ((3, 9), False, ()), ((7, 9), True, (8,))]


@pytest.mark.parametrize("G", [_k4(), _subdivided_k4(), _theta_with_direct_edge(), _triangle_with_pendant()])
def test_splice_rebuilds_core(G):
    assert splice_simple_kernel(simple_kernel(G)) == core(G)


def test_splice_rebuilds_core_for_every_small_connected_graph():
    d = DegreeSequence.from_degrees([3, 3, 2, 2, 2, 2])
    for G in iter_graphs(d, "connected"):
        assert splice_simple_kernel(simple_kernel(G)) == core(G)


def test_homeo_reduction_of_path():
    H = simple_homeo_reduction(_graph((1, 3), (3, 2)))
    assert H.graph == _graph((1, 2))
    assert H.mutable_edges == frozenset({(1, 2)})
    assert H.path_lengths == {(1, 2): 1}
    assert suppressed_labels(H) == (3,)


def test_homeo_reduction_of_k4_is_k4():
    H = simple_homeo_reduction(_k4())
    assert H.graph == _k4()
    assert H.num_mutable == 6
    assert set(H.path_lengths.values()) == {0}


def test_homeo_reduction_drops_cycle_components():
    G = _cycle([1, 2, 3, 4]).union(_graph((5, 6), (6, 7)))
    H = simple_homeo_reduction(G)
    assert H.graph == _graph((5, 7))
    assert H.cycles == _cycle([1, 2, 3, 4])
    assert suppressed_labels(H) == (1, 2, 3, 4, 6)
    assert expand_homeo_reduction(H) == G


def test_homeo_reduction_roundtrip_with_loop_kernel():
    G = _triangle_with_pendant().union(_graph((4, 5))).union(_cycle([6, 7, 8, 9]))
    H = simple_homeo_reduction(G)
    assert H.path_map[(3, 5)] == (4,)
    assert expand_homeo_reduction(H) == G


def test_cycle_vertex_count():
    assert cycle_vertex_count(_cycle([1, 2, 3, 4]).union(_cycle([5, 6, 7]))) == 7
    assert cycle_vertex_count(_graph((1, 2), (2, 3))) == 0
    assert cycle_vertex_count(_triangle_with_pendant()) == 0
    rest, cycles = split_cycle_components(_cycle([1, 2, 3]).union(_graph((4, 5))))
    assert rest == _graph((4, 5))
    assert cycles.num_vertices == 3


def test_diameter_bound_parts_k4():
    parts = diameter_bound_parts(_k4())
    assert (parts.forest_height, parts.core_diameter, parts.kernel_diameter, parts.max_path) == (0, 1, 1, 1)
    assert parts.holds()


def test_diameter_bound_parts_triangle_with_pendant():
    parts = diameter_bound_parts(_triangle_with_pendant())
    assert parts.forest_height == 0
    assert parts.core_diameter == 1
    assert parts.graph_diameter == 2
    assert parts.graph_diameter <= parts.core_bound() == 3
    assert parts.holds()


def test_diameter_bound_parts_cycle_has_no_kernel_terms():
    parts = diameter_bound_parts(_cycle(range(1, 7)))
    assert parts.kernel_diameter is None
    assert parts.kernel_bound() is None


def test_diameter_bound_parts_not_applicable():
    with pytest.raises(NotApplicableError):
        diameter_bound_parts(_graph((1, 2), (2, 3)))
    with pytest.raises(NotApplicableError):
        diameter_bound_parts(_cycle([1, 2, 3]).union(_cycle([4, 5, 6])))


def test_simple_kernel_inequalities_hold_on_examples():
    for G in (_k4(), _subdivided_k4(), _theta_with_direct_edge(), _triangle_with_pendant(), _cycle([1, 2, 3])):
        assert all(simple_kernel_inequalities(G).values())


def test_decomposition_report_document():
    report = decomposition_report(_triangle_with_pendant())
    assert report["vertices"] == 4
    assert report["surplus"] == 1
    assert report["diameter_plus"] == 2
    assert report["core_vertices"] == [1, 2, 3]
    assert report["forest"] == [{"root": 4, "vertices": [4], "height": 0}]
    assert report["kernel_edges"][0]["internal"] == [1, 2]
    assert report["bound"]["core_bound"] == 3
    assert decomposition_report(_cycle([1, 2, 3]).union(_graph((4, 5))))["diameter_plus"] is None


def test_hanging_trees_rooted_at_core_vertices():
    G = _graph((1, 2), (2, 3), (1, 3), (3, 4), (4, 5))
    F = hanging_trees(G, [1, 2, 3])
    assert F == RootedForest.from_parent_map({4: 3, 5: 4}, [1, 2, 3])
    assert F.height_of(5) == 2
