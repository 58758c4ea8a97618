from __future__ import annotations

from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from linebreak import (
    count_first_rep_above,
    count_sequences,
    elementary_symmetric,
    enumerate_forests,
    enumerate_trees,
    final_singleton,
    first_repetition,
    first_repetition_law,
    iter_multiset_sequences,
    sample_forest,
    sample_sequence,
    sample_tree,
    sequence_to_tree,
    star_tree_preimages,
    star_tree_reduction,
    tree_to_sequence
)
from models import ChildSequence, Composition, MultisetSequence, RootedForest


@pytest.fixture
def binary_c() -> ChildSequence:
    # 1 and 2 have two children each, 0, 3 and 4 are leaves
    return ChildSequence.from_counts([0, 2, 2, 0, 0])


@pytest.fixture
def binary_tree() -> RootedForest:
    return RootedForest.from_parent_map({0: 1, 2: 1, 3: 2, 4: 2}, [1])


def test_tree_to_sequence_hand_example(binary_tree):
    assert tree_to_sequence(binary_tree) == MultisetSequence((1, 1, 2, 2))


def test_sequence_to_tree_inverts(binary_c, binary_tree):
    assert sequence_to_tree(MultisetSequence((1, 1, 2, 2)), binary_c) == binary_tree


def test_bijection_over_all_sequences(binary_c):
    sequences = list(iter_multiset_sequences(binary_c))
    assert len(sequences) == count_sequences(binary_c) == 6
    trees = [sequence_to_tree(V, binary_c) for V in sequences]
    assert len(set(trees)) == len(trees)
    for V, T in zip(sequences, trees):
        assert T.child_sequence() == binary_c
        assert tree_to_sequence(T) == V


def test_enumerate_trees_matches_count():
    c = ChildSequence.from_counts([0, 3, 1, 0, 0])
    trees = enumerate_trees(c)
    assert len(trees) == count_sequences(c) == 4
    assert all(T.child_sequence() == c for T in trees)


def test_sequence_to_tree_rejects_foreign_sequence(binary_c):
    with pytest.raises(ValueError, match="not in V_c"):
        sequence_to_tree(MultisetSequence((1, 1, 1, 2)), binary_c)
    with pytest.raises(ValueError, match="roots"):
        sequence_to_tree(MultisetSequence((1,)), ChildSequence.from_counts([0, 1, 0]))


def test_first_repetition_and_final_singleton():
    assert first_repetition(MultisetSequence((1, 1, 2, 2))) == 2
    assert first_repetition(MultisetSequence((3, 1, 2, 1))) == 4
    assert final_singleton(MultisetSequence((1, 2, 1, 3))) == 4
    assert final_singleton(MultisetSequence((2, 1, 1))) == 1
    with pytest.raises(ValueError):
        first_repetition(MultisetSequence((1, 2, 3)))
    with pytest.raises(ValueError):
        final_singleton(MultisetSequence((1, 1, 2, 2)))


def test_elementary_symmetric():
    assert elementary_symmetric([1, 2, 3], 0) == 1
    assert elementary_symmetric([1, 2, 3], 2) == 11
    assert elementary_symmetric([1, 2, 3], 3) == 6
    assert elementary_symmetric([1, 2], 3) == 0
    assert elementary_symmetric([1, 2], -1) == 0


def test_count_first_rep_above_hand_values(binary_c):
    assert [count_first_rep_above(binary_c, h) for h in range(5)] == [6, 6, 4, 0, 0]
    assert count_first_rep_above(binary_c, 9) == 0
    with pytest.raises(ValueError):
        count_first_rep_above(binary_c, -1)


def test_first_repetition_law_hand_values(binary_c):
    law = first_repetition_law(binary_c)
    assert law.pmf == {2: Fraction(1, 3), 3: Fraction(2, 3)}


@pytest.mark.parametrize("counts", [[0, 3, 1, 0, 0], [2, 0, 2, 1, 0, 0], [0, 2, 2, 2, 0, 0, 0]])
def test_first_repetition_law_matches_enumeration(counts):
    c = ChildSequence.from_counts(counts)
    observed = Counter(first_repetition(V) for V in iter_multiset_sequences(c))
    total = count_sequences(c)
    law = first_repetition_law(c)
    assert {r: Fraction(k, total) for r, k in observed.items()} == law.pmf


def test_first_repetition_law_needs_a_repeat():
    with pytest.raises(ValueError):
        first_repetition_law(ChildSequence.from_counts([1, 0]))


def test_enumerate_forests_with_root_set():
    c = ChildSequence.from_counts([1, 0, 0])
    forests = enumerate_forests(c, [0, 2])
    assert forests == [RootedForest.from_parent_map({1: 0}, [0, 2])]
    assert enumerate_forests(c, [1, 2]) == []
    with pytest.raises(ValueError):
        enumerate_forests(c, [7])


def test_samplers_respect_child_sequence(binary_c):
    rng = np.random.default_rng(0)
    for _ in range(20):
        assert sample_tree(binary_c, rng).child_sequence() == binary_c
    forest_c = ChildSequence.from_counts([0, 2, 0, 1, 1, 0])
    for _ in range(20):
        F = sample_forest(forest_c, rng)
        assert F.child_sequence() == forest_c
        assert len(F.roots) == forest_c.num_roots == 2


def _path_tree() -> RootedForest:
    # root 1, 0 at height 2 below 2
    return RootedForest.from_parent_map({2: 1, 3: 1, 0: 2, 4: 2}, [1])


def test_star_tree_reduction_hand_example():
    T_star = RootedForest.from_parent_map({5: 1, 6: 5, 2: 6, 0: 2, 4: 2, 3: 1}, [1])
    T, P = star_tree_reduction(T_star)
    assert T == _path_tree()
    assert P == Composition((1, 0, 1))


def test_star_tree_reduction_rejects_off_path_extras():
    T_star = RootedForest.from_parent_map({5: 1, 6: 5, 2: 6, 0: 2, 4: 2, 3: 1, 7: 3}, [1])
    with pytest.raises(ValueError, match="off the root-to-0 path"):
        star_tree_reduction(T_star)


def test_star_tree_preimages_are_all_distinct_and_reduce_back():
    T = _path_tree()
    P = Composition((1, 0, 1))
    preimages = list(star_tree_preimages(T, P, [5, 6]))
    assert len(set(preimages)) == 2
    for T_star in preimages:
        assert star_tree_reduction(T_star, [5, 6]) == (T, P)


def test_star_tree_preimages_check_shape():
    with pytest.raises(ValueError):
        list(star_tree_preimages(_path_tree(), Composition((1, 1)), [5, 6]))
    with pytest.raises(ValueError):
        list(star_tree_preimages(_path_tree(), Composition((3, 0, 0)), [5, 6]))


def test_sample_sequence_stays_in_v_c(binary_c):
    population = set(iter_multiset_sequences(binary_c))
    rng = np.random.default_rng(5)
    seen = {sample_sequence(binary_c, rng) for _ in range(100)}
    assert seen == population
