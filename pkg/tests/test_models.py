from __future__ import annotations

from fractions import Fraction

import pytest

from models import (
    AugmentedCore,
    ChildSequence,
    Composition,
    CoreRecord,
    DegreeSequence,
    DiscreteDistribution,
    GraphClass,
    HalfEdge,
    InvalidAugmentedCoreError,
    LabeledGraph,
    MultiGraph,
    MultisetSequence,
    RejectionCapExceeded,
    RootedForest,
    SamplerKind,
    TailCheckResult,
    validate_records
)


def _theta() -> DegreeSequence:
    # two degree-3 kernel vertices and three degree-2 labels
    return DegreeSequence.from_mapping({1: 3, 2: 3, 3: 2, 4: 2, 5: 2})


def test_degree_sequence_rejects_odd_sum_and_zero_label():
    with pytest.raises(ValueError, match="odd"):
        DegreeSequence.from_degrees([3, 2, 2])
    with pytest.raises(ValueError, match="reserved"):
        DegreeSequence.from_mapping({0: 1, 1: 1})
    with pytest.raises(ValueError, match="isolated"):
        DegreeSequence.from_mapping({1: 0, 2: 2})


def test_degree_sequence_from_degrees_labels_from_one():
    d = DegreeSequence.from_degrees([3, 2, 2, 1])
    assert d.labels == (1, 2, 3, 4)
    assert d.degree(1) == 3
    assert d.degree_sum == 8
    assert d.restrict([2, 3]).as_dict == {2: 2, 3: 2}


def test_child_sequence_counts_roots_and_predicates():
    c = ChildSequence.from_counts([0, 2, 2, 0, 0])
    assert c.is_tree_sequence
    assert c.is_binary and c.is_one_free and c.is_sub_binary
    assert c.multiset() == [1, 1, 2, 2]
    forest = ChildSequence.from_counts([0, 2, 0, 0])
    assert forest.num_roots == 2
    with pytest.raises(ValueError):
        ChildSequence.from_counts([3, 0, 0])


def test_composition_prefix_sums():
    P = Composition((2, 0, 3))
    assert P.total == 5 and P.m == 3
    assert P.prefix_sums() == (0, 2, 2, 5)
    with pytest.raises(ValueError):
        Composition((1, -1))


def test_multiset_sequence_membership():
    c = ChildSequence.from_counts([0, 2, 1, 0])
    assert MultisetSequence((1, 2, 1)).belongs_to(c)
    assert not MultisetSequence((1, 2, 2)).belongs_to(c)


def test_labeled_graph_rejects_loops_and_parallel_edges():
    with pytest.raises(ValueError, match="loop"):
        LabeledGraph.from_edges([(1, 1)])
    with pytest.raises(ValueError, match="parallel"):
        LabeledGraph.from_edges([(1, 2), (2, 1)])


def test_labeled_graph_components_and_surplus():
    G = LabeledGraph.from_edges([(1, 2), (2, 3), (3, 1), (4, 5)])
    assert G.components() == [frozenset({1, 2, 3}), frozenset({4, 5})]
    assert not G.is_connected()
    assert G.surplus() == 0
    assert G.degree_sequence().as_dict == {1: 2, 2: 2, 3: 2, 4: 1, 5: 1}


def test_multigraph_multiplicity_and_loop_degree():
    K = MultiGraph(frozenset({1, 2}), ((1, 2), (2, 1), (1, 1)), ((), (7,), (8, 9)))
    assert K.multiplicity(0) == 2
    assert K.is_loop(2)
    assert K.degree(1) == 4
    assert K.internal_counts == (0, 1, 2)
    assert K.underlying_simple_edges() == frozenset({(1, 2)})


def test_rooted_forest_heights_and_cycle_check():
    F = RootedForest.from_parent_map({2: 1, 3: 2, 5: 4}, [1, 4])
    assert F.height_of(3) == 2
    assert F.height == 2
    assert F.root_of(3) == 1
    assert F.path_from_root(3) == [1, 2, 3]
    with pytest.raises(ValueError, match="cycle"):
        RootedForest.from_parent_map({2: 3, 3: 2}, [1])


def test_core_record_canonical_orientation():
    record = CoreRecord.of(HalfEdge(2, 1), HalfEdge(1, 3), (7, 8))
    assert record.first == HalfEdge(1, 3)
    assert record.internal == (8, 7)
    assert record.internal_from(HalfEdge(2, 1)) == (7, 8)


def test_augmented_core_rules():
    d = _theta()
    A = AugmentedCore.from_pairs(d, [((1, 1), (2, 1), (3,)), ((1, 2), (2, 2), (4,)), ((1, 3), (2, 3), (5,))])
    assert A.kernel_vertices == (1, 2)
    assert A.num_records == 3
    assert A.partner(HalfEdge(1, 2)) == HalfEdge(2, 2)

    parallel = [CoreRecord.of(HalfEdge(1, 1), HalfEdge(2, 1)), CoreRecord.of(HalfEdge(1, 2), HalfEdge(2, 2)),
                CoreRecord.of(HalfEdge(1, 3), HalfEdge(2, 3), (3, 4, 5))]
    assert validate_records(d, parallel) == "parallel-unsubdivided"
    with pytest.raises(InvalidAugmentedCoreError) as excinfo:
        AugmentedCore(d, tuple(parallel))
    assert excinfo.value.rule == "parallel-unsubdivided"


def test_discrete_distribution_exact_operations():
    X = DiscreteDistribution.from_weights({1: 1, 2: 2})
    assert X.pmf == {1: Fraction(1, 3), 2: Fraction(2, 3)}
    assert X.tail(2) == Fraction(2, 3)
    assert X.shift(1).support == (2, 3)
    assert X.condition_at_least(2) == DiscreteDistribution.point_mass(2)
    with pytest.raises(ValueError):
        X.condition_at_least(5)


def test_graph_class_aliases_and_sampler_exactness():
    assert GraphClass.parse("no_cycle_components") is GraphClass.NO_CYCLE_COMPONENTS
    assert GraphClass.parse("connected") is GraphClass.CONNECTED
    assert not SamplerKind.MCMC.exact
    assert SamplerKind.PRUFER.exact


def test_tail_check_result_uses_three_standard_errors():
    row = TailCheckResult(kind="forest-height", n=10, m=1, x=1.0, threshold=3.0,
                          empirical_tail=0.5, stderr=0.1, analytic_bound=0.25, samples=25, seed=0)
    assert row.within_bound
    row.empirical_tail = 0.6
    assert not row.within_bound


def test_rejection_cap_message_reports_rate():
    error = RejectionCapExceeded("sampler", 100, 0)
    assert "100 attempts" in str(error)
    assert error.attempts == 100
