"""
Exact laws of the distinguished-leaf height in composition-biased trees,
and the auxiliary laws used to compare them.
"""

from fractions import Fraction
from math import comb
from typing import Dict

from degseq import count_compositions
from linebreak import count_first_rep_above, enumerate_trees, first_repetition_law
from models import ChildSequence, DiscreteDistribution

DISTINGUISHED_LEAF = 0


def binary_height_pmf(n: int, m: int) -> DiscreteDistribution:
    """
    Law of ht_T(0) for (T, P) uniform with T binary on [0, n] and P an
    m-composition of ht_T(0).

    P(h) is proportional to (h + m - 1)_(m-1) * h / (n - h) * prod_{i<h} (1 - i / (n - i))
    for h in [n/2]; m = 1 is the uniform binary tree.
    """
    if n < 2 or n % 2:
        raise ValueError(f"binary height law needs an even n >= 2, got {n}")
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    weights: Dict[int, Fraction] = {}
    running = Fraction(1)
    for h in range(1, n // 2 + 1):
        if h > 1:
            running *= 1 - Fraction(h - 1, n - h + 1)
        weights[h] = comb(h + m - 1, m - 1) * Fraction(h, n - h) * running
    return DiscreteDistribution.from_weights(weights)


def require_leaf_sequence(c: ChildSequence) -> None:
    if DISTINGUISHED_LEAF not in c.as_dict or c.count(DISTINGUISHED_LEAF) != 0:
        raise ValueError("child sequence must contain the leaf 0 with c_0 = 0")
    if not c.is_tree_sequence:
        raise ValueError(f"child sequence has {c.num_roots} roots, a tree needs exactly one")


def biased_height_law(c: ChildSequence, m: int) -> DiscreteDistribution:
    """
    Law of ht_T(0) for (T, P) uniform over T in T_c and P in P_{m, ht_T(0)}.

    ht_T(0) = r(V) - 1 under line-breaking, so the weight of h is
    (N(h) - N(h + 1)) * |P_{m,h}| with N(h) = |{V : r(V) > h}|.
    """
    require_leaf_sequence(c)
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if all(x <= 1 for x in c.counts):
        # a path: 0 is the only leaf
        return DiscreteDistribution.point_mass(c.total)
    above = [count_first_rep_above(c, h) for h in range(c.total + 2)]
    weights = {
        h: (above[h] - above[h + 1]) * count_compositions(m, h)
        for h in range(c.total + 1)
    }
    return DiscreteDistribution.from_weights(weights)


def enumerated_height_law(c: ChildSequence, m: int) -> DiscreteDistribution:
    """The same law by listing every (T, P)"""
    require_leaf_sequence(c)
    weights: Dict[int, int] = {}
    for tree in enumerate_trees(c):
        h = tree.height_of(DISTINGUISHED_LEAF)
        weights[h] = weights.get(h, 0) + count_compositions(m, h)
    return DiscreteDistribution.from_weights(weights)


def max_subset_law(k: int, j: int) -> DiscreteDistribution:
    """Law of max A for A uniform among j-subsets of [k]; max of the empty set is 0"""
    if not 0 <= j <= k:
        raise ValueError(f"need 0 <= j <= k, got j={j}, k={k}")
    if j == 0:
        return DiscreteDistribution.point_mass(0)
    total = comb(k, j)
    return DiscreteDistribution.from_weights({x: Fraction(comb(x - 1, j - 1), total) for x in range(j, k + 1)})


def conditioned_law(Y: DiscreteDistribution, X: DiscreteDistribution) -> DiscreteDistribution:
    """Law of (Y | Y >= X) for independent X and Y"""
    weights = {y: p * X.cdf(y) for y, p in Y.masses}
    if not any(weights.values()):
        raise ValueError("conditioning event Y >= X has probability 0")
    return DiscreteDistribution.from_weights(weights)


def representation_height_law(c: ChildSequence, m: int) -> DiscreteDistribution:
    """
    ht_T(0) realized as (r(V) | r(V) >= max A - m + 2) - 1 with V uniform in
    V_c and A uniform among (m - 1)-subsets of [n + m - 1].
    """
    require_leaf_sequence(c)
    R = first_repetition_law(c)
    M = max_subset_law(c.total + m - 1, m - 1)
    return conditioned_law(R, M.shift(-(m - 2))).shift(-1)
