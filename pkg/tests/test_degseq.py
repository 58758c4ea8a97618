from __future__ import annotations

from collections import Counter

import numpy as np
import pytest

from degseq import (
    binary_child_sequence,
    canonical_child_sequence,
    count_compositions,
    count_degree,
    count_trees_with_degrees,
    extend_with_singletons,
    is_graphical,
    iter_child_sequence_types,
    iter_child_sequences,
    iter_compositions,
    iter_degree_sequence_types,
    iter_degree_sequences,
    kernel_child_sequence,
    sample_composition,
    sequence_from_runs,
    surplus
)
from decompose import simple_kernel
from models import ChildSequence, DegreeSequence, LabeledGraph
from sample import enumerate_graphs


def _d(*degrees: int) -> DegreeSequence:
    return DegreeSequence.from_degrees(degrees)


@pytest.mark.parametrize("degrees, expected", [((1, 1), 0), ((2, 2, 2), 1), ((3, 3, 3, 3), 3), ((1, 1, 1, 1), -1)])
def test_surplus(degrees, expected):
    assert surplus(_d(*degrees)) == expected


def test_surplus_is_permutation_invariant():
    assert surplus(_d(3, 2, 2, 1)) == surplus(_d(1, 2, 3, 2))


@pytest.mark.parametrize("degrees, b, expected", [((3, 2, 2, 1), 2, 2), ((3, 3, 3, 1), 2, 0), ((1, 1, 1, 1), 1, 4)])
def test_count_degree(degrees, b, expected):
    assert count_degree(_d(*degrees), b) == expected


@pytest.mark.parametrize("degrees, expected", [((3, 3, 3, 3), True), ((3, 1), False), ((2, 2, 1, 1), True),
                                               ((3, 3, 1, 1), False), ((4, 4, 4, 4, 4), True)])
def test_is_graphical(degrees, expected):
    assert is_graphical(_d(*degrees)) is expected


def test_is_graphical_agrees_with_enumeration():
    for d in iter_degree_sequences(5, 12):
        assert is_graphical(d) == bool(enumerate_graphs(d)), str(d)


@pytest.mark.parametrize("m, h, expected", [(2, 2, 3), (1, 5, 1), (3, 2, 6), (0, 0, 1), (0, 3, 0)])
def test_count_compositions(m, h, expected):
    assert count_compositions(m, h) == expected


def test_iter_compositions_lexicographic():
    assert [P.parts for P in iter_compositions(2, 2)] == [(0, 2), (1, 1), (2, 0)]


@pytest.mark.parametrize("m, h", [(1, 0), (3, 4), (4, 3), (5, 2)])
def test_iter_compositions_matches_count(m, h):
    found = [P.parts for P in iter_compositions(m, h)]
    assert len(found) == len(set(found)) == count_compositions(m, h)
    assert all(sum(parts) == h and len(parts) == m for parts in found)


def test_sample_composition_is_roughly_uniform():
    rng = np.random.default_rng(3)
    counts = Counter(sample_composition(2, 2, rng).parts for _ in range(3000))
    assert set(counts) == {(0, 2), (1, 1), (2, 0)}
    assert all(800 < c < 1200 for c in counts.values())


def test_sample_composition_empty_set():
    with pytest.raises(ValueError):
        sample_composition(0, 2, np.random.default_rng(0))


def test_count_trees_with_degrees():
    assert count_trees_with_degrees(_d(1, 2, 2, 1)) == 2
    assert count_trees_with_degrees(_d(1, 1, 1, 3)) == 1
    assert count_trees_with_degrees(_d(2, 2, 2)) == 0


def test_binary_child_sequence_puts_two_child_vertices_last():
    b = binary_child_sequence(4)
    assert b.as_dict == {0: 0, 1: 0, 2: 0, 3: 2, 4: 2}
    assert b.is_tree_sequence
    with pytest.raises(ValueError):
        binary_child_sequence(3)


def test_extend_with_singletons():
    c = ChildSequence.from_counts([0, 2, 0])
    extended, extras = extend_with_singletons(c, 3)
    assert extras == (3, 4)
    assert extended.as_dict == {0: 0, 1: 2, 2: 0, 3: 1, 4: 1}
    assert extend_with_singletons(c, 1) == (c, ())


def test_iter_child_sequences_filters():
    for c in iter_child_sequences(5, one_free=True, leaf_zero=True):
        assert c.is_tree_sequence
        assert c.is_one_free
        assert c.count(0) == 0
    sizes = Counter(c.num_vertices for c in iter_child_sequences(3))
    # weak compositions of n into n + 1 parts
    assert sizes == {2: 2, 3: 6, 4: 20}


def test_sequence_from_runs():
    d = sequence_from_runs([(3, 2), (1, 2)])
    assert d.as_dict == {1: 3, 2: 3, 3: 1, 4: 1}


def test_kernel_child_sequence_of_triangle_with_pendant():
    G = LabeledGraph.from_edges([(1, 2), (2, 3), (1, 3), (3, 4)])
    c = kernel_child_sequence(G.degree_sequence(), simple_kernel(G))
    assert c == ChildSequence.from_counts([0, 0, 0, 1, 0])
    assert c.num_roots == 4


def test_kernel_child_sequence_rejects_low_degree():
    K4 = LabeledGraph.from_edges([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    d = DegreeSequence.from_mapping({1: 2, 2: 3, 3: 3, 4: 2})
    with pytest.raises(ValueError, match="below its simple-kernel degree"):
        kernel_child_sequence(d, simple_kernel(K4))


def test_degree_sequence_types_cover_each_multiset_once():
    types = list(iter_degree_sequence_types(5, 12))
    keys = [tuple(sorted(d.degrees)) for d in types]
    assert len(keys) == len(set(keys))
    assert set(keys) == {tuple(sorted(d.degrees)) for d in iter_degree_sequences(5, 12)}
    assert all(list(d.degrees) == sorted(d.degrees, reverse=True) for d in types)
    assert _d(2, 2, 1, 1) in types


def test_child_sequence_types_put_leaves_first():
    types = list(iter_child_sequence_types(6))
    keys = [c.counts for c in types]
    assert len(keys) == len(set(keys))
    assert set(keys) == {tuple(sorted(c.counts)) for c in iter_child_sequences(6)}
    assert all(c.counts[0] == 0 and list(c.counts) == sorted(c.counts) for c in types)

    one_free = {c.counts for c in iter_child_sequence_types(6, one_free=True, min_total=2)}
    assert one_free == {
        tuple(sorted(c.counts)) for c in iter_child_sequences(6, one_free=True, leaf_zero=True, min_total=2)
    }


def test_canonical_child_sequence():
    c = ChildSequence.from_counts([2, 0, 1, 0])
    assert canonical_child_sequence(c) == ChildSequence.from_counts([0, 0, 1, 2])
    assert canonical_child_sequence(canonical_child_sequence(c)) == canonical_child_sequence(c)
