"""
Counting and listing labelled 2-regular graphs.
"""

from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterable, Iterator, List

from models import Edge, LabeledGraph, edge_key


@lru_cache(maxsize=None)
def two_regular_count(k: int) -> int:
    """
    c_k: labelled 2-regular graphs on k vertices.

    The cycle through the smallest label has j >= 3 vertices, chosen in
    binomial(k-1, j-1) ways and arranged in (j-1)!/2 ways.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if k == 0:
        return 1
    total = 0
    for j in range(3, k + 1):
        total += comb(k - 1, j - 1) * (factorial(j - 1) // 2) * two_regular_count(k - j)
    return total


def iter_two_regular(labels: Iterable[int]) -> Iterator[LabeledGraph]:
    """Every 2-regular graph on exactly the given labels (the empty graph on none)"""
    labels = sorted(set(labels))
    for edges in _cycle_covers(labels):
        yield LabeledGraph.from_edges(edges, labels)


def enumerate_two_regular(labels: Iterable[int]) -> List[LabeledGraph]:
    return list(iter_two_regular(labels))


def _cycle_covers(labels: List[int]) -> Iterator[List[Edge]]:
    if not labels:
        yield []
        return
    first, rest = labels[0], labels[1:]
    for size in range(2, len(rest) + 1):
        for chosen in combinations(rest, size):
            remaining = [v for v in rest if v not in chosen]
            for order in permutations(chosen):
                # each cycle once: fix the direction by its two neighbours of `first`
                if order[0] > order[-1]:
                    continue
                cycle = (first,) + order
                edges = [edge_key(a, b) for a, b in zip(cycle, cycle[1:] + cycle[:1])]
                for tail in _cycle_covers(remaining):
                    yield edges + tail
