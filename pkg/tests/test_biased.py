from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest

from biased import (
    binary_height_pmf,
    binary_height_probabilities,
    binary_tail_exact,
    check_conditional_dominance,
    biased_height_law,
    check_stochastic_dominance,
    conditional_dominance_report,
    conditioned_law,
    conditioning_is_monotone,
    dominated_by_binary,
    enumerated_height_law,
    exact_dominance_instance,
    first_repetition_dominated_by_binary,
    forest_tail_check,
    forest_tail_sweep,
    max_subset_dominance,
    max_subset_law,
    representation_height_law,
    sample_biased_heights,
    sample_biased_pair,
    standardized_heights,
    tail_bound,
    tail_bound_check,
    tail_threshold
)
from degseq import binary_child_sequence, iter_compositions
from evaluators import chi_square_pvalue
from linebreak import enumerate_trees
from models import ChildSequence, DiscreteDistribution

# c_1 = 3, c_2 = 1, with 0 a leaf
MIXED = ChildSequence.from_counts([0, 3, 1, 0, 0])


def test_binary_height_pmf_hand_values():
    assert binary_height_pmf(2, 1) == DiscreteDistribution.point_mass(1)
    assert binary_height_pmf(4, 1).pmf == {1: Fraction(1, 3), 2: Fraction(2, 3)}
    assert binary_height_pmf(4, 2).pmf == {1: Fraction(1, 4), 2: Fraction(3, 4)}
    with pytest.raises(ValueError):
        binary_height_pmf(5, 1)
    with pytest.raises(ValueError):
        binary_height_pmf(4, 0)


@pytest.mark.parametrize("n", [2, 4, 6, 8])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_biased_height_law_of_binary_sequence_has_closed_form(n, m):
    assert biased_height_law(binary_child_sequence(n), m) == binary_height_pmf(n, m)


@pytest.mark.parametrize("m", [1, 2, 4])
def test_biased_height_law_matches_enumeration(m):
    for c in (MIXED, binary_child_sequence(6), ChildSequence.from_counts([0, 2, 0, 3, 1, 0, 0])):
        assert biased_height_law(c, m) == enumerated_height_law(c, m)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_representation_law_matches_biased_law(m):
    for c in (MIXED, binary_child_sequence(4), binary_child_sequence(6)):
        assert representation_height_law(c, m) == biased_height_law(c, m)


def test_biased_height_law_of_a_path_is_a_point_mass():
    path = ChildSequence.from_counts([0, 1, 1, 1])
    assert biased_height_law(path, 2) == DiscreteDistribution.point_mass(3)


def test_height_laws_need_leaf_zero():
    with pytest.raises(ValueError, match="leaf 0"):
        biased_height_law(ChildSequence.from_counts([2, 0, 0]), 1)


def test_max_subset_law():
    assert max_subset_law(4, 2).pmf == {2: Fraction(1, 6), 3: Fraction(1, 3), 4: Fraction(1, 2)}
    assert max_subset_law(4, 0) == DiscreteDistribution.point_mass(0)
    with pytest.raises(ValueError):
        max_subset_law(2, 3)


def test_conditioned_law():
    Y = DiscreteDistribution.from_weights({1: 1, 2: 1, 3: 2})
    assert conditioned_law(Y, DiscreteDistribution.point_mass(0)) == Y
    assert conditioned_law(Y, DiscreteDistribution.point_mass(2)).pmf == {2: Fraction(1, 3), 3: Fraction(2, 3)}
    with pytest.raises(ValueError):
        conditioned_law(Y, DiscreteDistribution.point_mass(9))


def test_check_stochastic_dominance():
    low = DiscreteDistribution.from_weights({1: 1, 2: 1})
    high = DiscreteDistribution.from_weights({1: 1, 2: 3})
    assert check_stochastic_dominance(low, high)
    assert not check_stochastic_dominance(high, low)
    assert check_stochastic_dominance(low, low)


def test_conditioning_is_monotone():
    assert conditioning_is_monotone(DiscreteDistribution.from_weights({0: 3, 1: 1, 4: 2, 7: 5}))


def test_conditional_dominance_report_consistent():
    X = DiscreteDistribution.point_mass(0)
    report = conditional_dominance_report(X, DiscreteDistribution.point_mass(1), X, DiscreteDistribution.point_mass(2))
    assert report.hypotheses_hold and report.conclusion and report.consistent
    assert report.violations == ()

    flipped = conditional_dominance_report(X, DiscreteDistribution.point_mass(2), X, DiscreteDistribution.point_mass(1))
    assert not flipped.conclusion
    assert not flipped.upper_hypothesis
    assert flipped.consistent


@pytest.mark.parametrize("j, k, l", [(1, 3, 5), (2, 4, 6), (3, 3, 7), (0, 2, 4)])
def test_max_subset_dominance(j, k, l):
    assert max_subset_dominance(j, k, l)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_dominated_by_binary(m):
    assert dominated_by_binary(MIXED, m)
    assert exact_dominance_instance(MIXED, m)


def test_first_repetition_dominated_by_binary():
    assert first_repetition_dominated_by_binary(MIXED)


def test_binary_height_probabilities_match_exact_pmf():
    heights, probs = binary_height_probabilities(10, 3)
    exact = binary_height_pmf(10, 3)
    assert list(heights) == [1, 2, 3, 4, 5]
    assert probs == pytest.approx([float(exact.probability(int(h))) for h in heights])


def test_sample_biased_heights_stay_in_support():
    heights = sample_biased_heights(20, 2, 500, np.random.default_rng(1))
    assert heights.shape == (500,)
    assert heights.min() >= 1 and heights.max() <= 10


def test_sample_biased_pair_shape():
    c = binary_child_sequence(6)
    rng = np.random.default_rng(2)
    for _ in range(10):
        tree, P = sample_biased_pair(c, 2, rng)
        assert tree.child_sequence() == c
        assert P.m == 2
        assert P.total == tree.height_of(0)


def test_sample_biased_pair_needs_one_free_sequence():
    with pytest.raises(ValueError, match="1-free"):
        sample_biased_pair(ChildSequence.from_counts([0, 1, 2, 0]), 1, np.random.default_rng(0))


def test_tail_threshold_and_bound():
    assert tail_threshold(64, 1, 1.0) == pytest.approx(24.0)
    assert tail_bound(0.0) == pytest.approx(math.exp(4))


def test_tail_bound_check_exact_sampler():
    row = tail_bound_check(128, 1, 1.0, 2000, np.random.default_rng(3), seed=3)
    assert row.kind == "biased-height"
    assert row.threshold == pytest.approx(tail_threshold(128, 1, 1.0))
    assert row.model_tail == pytest.approx(float(binary_tail_exact(128, 1, 1.0)), abs=1e-9)
    assert row.within_bound
    assert row.seed == 3


def test_tail_bound_check_argument_errors():
    rng = np.random.default_rng(0)
    with pytest.raises(ValueError, match="64m"):
        tail_bound_check(100, 2, 1.0, 10, rng)
    with pytest.raises(ValueError, match="Unknown tail sampler"):
        tail_bound_check(128, 1, 1.0, 10, rng, sampler="bogus")


def test_forest_tail_sweep_rows():
    c = ChildSequence.from_counts([0, 0, 0, 2, 2, 0])
    rows = forest_tail_sweep(c, [0.5, 1.0, 100.0], 200, np.random.default_rng(4), seed=4)
    assert [r.x for r in rows] == [0.5, 1.0, 100.0]
    assert all(r.kind == "forest-height" and r.n == 6 and r.m == 2 for r in rows)
    assert rows[-1].empirical_tail == 0.0
    assert rows[0].empirical_tail >= rows[1].empirical_tail


def test_forest_tail_check_matches_sweep():
    c = ChildSequence.from_counts([0, 0, 0, 2, 2, 0])
    single = forest_tail_check(c, 1.0, 100, np.random.default_rng(5))
    (swept,) = forest_tail_sweep(c, [1.0], 100, np.random.default_rng(5))
    assert single == swept


def test_standardized_heights_histogram():
    counts, edges = standardized_heights([10, 12, 14, 16], 64, 1, bins=4)
    assert counts.sum() == 4
    assert len(edges) == 5


def test_check_conditional_dominance():
    Y = DiscreteDistribution.from_weights({1: 1, 2: 1, 3: 1})
    X_low = DiscreteDistribution.point_mass(1)
    X_high = DiscreteDistribution.point_mass(3)
    assert check_conditional_dominance(X_low, Y, X_high, Y)
    assert not check_conditional_dominance(X_high, Y, X_low, Y)


def _biased_pairs(c, m):
    return [(T, P) for T in enumerate_trees(c) for P in iter_compositions(m, T.height_of(0))]


def test_biased_pair_sampler_stays_in_support():
    c = binary_child_sequence(4)
    pairs = set(_biased_pairs(c, 2))
    assert len(pairs) == 16
    rng = np.random.default_rng(3)
    assert all(sample_biased_pair(c, 2, rng) in pairs for _ in range(500))


@pytest.mark.slow
def test_biased_pair_sampler_is_uniform():
    c = binary_child_sequence(4)
    rng = np.random.default_rng(5)
    drawn = [sample_biased_pair(c, 2, rng) for _ in range(10 ** 5)]
    assert chi_square_pvalue(drawn, _biased_pairs(c, 2)) > 1e-3
