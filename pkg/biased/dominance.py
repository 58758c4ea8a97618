"""
Exact stochastic-dominance checks on finite laws.

X precedes Y (X <=_st Y) when P(X >= t) <= P(Y >= t) for every t, which for
finite supports means cdf_X >= cdf_Y at every support point of either law.
"""

from typing import List, Optional

from degseq import binary_child_sequence
from linebreak import first_repetition_law
from models import ChildSequence, DiscreteDistribution, DominanceReport
from .laws import biased_height_law, conditioned_law, enumerated_height_law, max_subset_law


def check_stochastic_dominance(law_a: DiscreteDistribution, law_b: DiscreteDistribution) -> bool:
    """True iff law_a <=_st law_b"""
    points = sorted(set(law_a.support) | set(law_b.support))
    return all(law_a.cdf(t) >= law_b.cdf(t) for t in points)


def _upper_violations(Y1: DiscreteDistribution, Y2: DiscreteDistribution) -> List[str]:
    found = []
    for y in sorted(set(Y1.support) | set(Y2.support)):
        if Y1.tail(y) == 0 or Y2.tail(y) == 0:
            continue
        if not check_stochastic_dominance(Y1.condition_at_least(y), Y2.condition_at_least(y)):
            found.append(f"(Y1 | Y1 >= {y}) does not precede (Y2 | Y2 >= {y})")
    return found


def _lower_violations(X1: DiscreteDistribution, X2: DiscreteDistribution) -> List[str]:
    found = []
    for x in sorted(set(X1.support) | set(X2.support)):
        if X1.cdf(x) == 0 or X2.cdf(x) == 0:
            continue
        if not check_stochastic_dominance(X1.condition_at_most(x), X2.condition_at_most(x)):
            found.append(f"(X1 | X1 <= {x}) does not precede (X2 | X2 <= {x})")
    return found


def upper_conditioning_dominates(Y1: DiscreteDistribution, Y2: DiscreteDistribution) -> bool:
    """(Y1 | Y1 >= y) <=_st (Y2 | Y2 >= y) for every y where both events are possible"""
    return not _upper_violations(Y1, Y2)


def lower_conditioning_dominates(X1: DiscreteDistribution, X2: DiscreteDistribution) -> bool:
    """(X1 | X1 <= x) <=_st (X2 | X2 <= x) for every x where both events are possible"""
    return not _lower_violations(X1, X2)


def check_conditional_dominance(X1: DiscreteDistribution, Y1: DiscreteDistribution,
                                X2: DiscreteDistribution, Y2: DiscreteDistribution) -> bool:
    """(Y1 | Y1 >= X1) <=_st (Y2 | Y2 >= X2), X_i independent of Y_i"""
    return check_stochastic_dominance(conditioned_law(Y1, X1), conditioned_law(Y2, X2))


def conditional_dominance_report(X1: DiscreteDistribution, Y1: DiscreteDistribution,
                                 X2: DiscreteDistribution, Y2: DiscreteDistribution) -> DominanceReport:
    lower = _lower_violations(X1, X2)
    upper = _upper_violations(Y1, Y2)
    conclusion = check_conditional_dominance(X1, Y1, X2, Y2)
    violations = lower + upper
    if not conclusion:
        violations.append("(Y1 | Y1 >= X1) does not precede (Y2 | Y2 >= X2)")
    return DominanceReport(
        lower_hypothesis=not lower,
        upper_hypothesis=not upper,
        conclusion=conclusion,
        violations=tuple(violations),
    )


def conditioning_is_monotone(X: DiscreteDistribution) -> bool:
    """(X | X >= a) and (X | X <= a) both increase stochastically in a"""
    points = X.support
    for i, a in enumerate(points):
        for b in points[i:]:
            if not check_stochastic_dominance(X.condition_at_least(a), X.condition_at_least(b)):
                return False
            if not check_stochastic_dominance(X.condition_at_most(a), X.condition_at_most(b)):
                return False
    return True


def binary_comparison_sequence(c: ChildSequence) -> ChildSequence:
    """Binary child sequence on n + parity(n) vertices, n = |c|_1"""
    n = c.total
    return binary_child_sequence(n + n % 2)


def dominated_by_binary(c: ChildSequence, m: int, law: Optional[DiscreteDistribution] = None) -> bool:
    """ht_T(0) under c is dominated by ht_S(0) under the binary comparison sequence"""
    law = law if law is not None else biased_height_law(c, m)
    return check_stochastic_dominance(law, biased_height_law(binary_comparison_sequence(c), m))


def first_repetition_dominated_by_binary(c: ChildSequence) -> bool:
    """(r(V) | r(V) >= y) <=_st (r(W) | r(W) >= y) for all y, W over the binary comparison sequence"""
    return upper_conditioning_dominates(
        first_repetition_law(c),
        first_repetition_law(binary_comparison_sequence(c)),
    )


def max_subset_dominance(j: int, k: int, l: int) -> bool:
    """For j <= k <= l: (max A | max A <= x) <=_st (max B | max B <= x) for all x"""
    return lower_conditioning_dominates(max_subset_law(k, j), max_subset_law(l, j))


def exact_dominance_instance(c: ChildSequence, m: int) -> bool:
    """Enumerated law of ht_T(0) against the binary comparison law"""
    return dominated_by_binary(c, m, enumerated_height_law(c, m))
