"""
Exact counts over V_c and the law of the first repetition.
"""

from fractions import Fraction
from math import factorial, prod
from typing import Iterable, List

from models import ChildSequence, DiscreteDistribution


def elementary_symmetric(values: Iterable[int], h: int) -> int:
    """e_h(values) by the usual O(len * h) table"""
    if h < 0:
        return 0
    table: List[int] = [1] + [0] * h
    for x in values:
        for j in range(h, 0, -1):
            table[j] += table[j - 1] * x
    return table[h]


def count_sequences(c: ChildSequence) -> int:
    """|V_c| = n! / prod c_v!, which is also |T_c| for a tree sequence"""
    return factorial(c.total) // prod(factorial(x) for x in c.counts)


def count_first_rep_above(c: ChildSequence, h: int) -> int:
    """
    |{V in V_c : r(V) > h}| = h! (n - h)! / prod c_v! * e_h(c_v : c_v > 0).

    The first h entries are then distinct, chosen as a set A of size h with
    one of c_v copies each, in any order.
    """
    if h < 0:
        raise ValueError(f"h must be non-negative, got {h}")
    n = c.total
    if h > n:
        return 0
    weights = [x for x in c.counts if x > 0]
    return factorial(h) * factorial(n - h) * elementary_symmetric(weights, h) // prod(
        factorial(x) for x in c.counts
    )


def first_repetition_law(c: ChildSequence) -> DiscreteDistribution:
    """Exact law of r(V) for V uniform in V_c"""
    if all(x <= 1 for x in c.counts):
        raise ValueError("no entry of c exceeds 1, so r(V) is undefined")
    total = count_first_rep_above(c, 0)
    above = [count_first_rep_above(c, h) for h in range(c.total + 1)]
    weights = {i: Fraction(above[i - 1] - above[i], total) for i in range(1, c.total + 1)}
    return DiscreteDistribution.from_weights(weights)
