"""
Degree-sequence statistics, feasibility and derived child sequences.
"""

from math import factorial, prod
from typing import Iterable, Iterator, List, Tuple

from models import ChildSequence, DegreeSequence, SimpleKernel


def surplus(d: DegreeSequence) -> int:
    """s(d) = 1 + |d|_1 / 2 - |d|_0; negative for forests of several trees."""
    return 1 + d.degree_sum // 2 - d.num_vertices


def count_degree(d: DegreeSequence, b: int) -> int:
    """n_b(d): number of vertices of degree exactly b."""
    return sum(1 for _, degree in d.entries if degree == b)


def is_graphical(d: DegreeSequence) -> bool:
    """
    Erdős–Gallai test: some simple graph realizes d.

    With degrees sorted non-increasingly, every prefix k must satisfy
    sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k).
    """
    degrees = sorted(d.degrees, reverse=True)
    n = len(degrees)
    if degree_sum_is_odd(degrees):
        return False
    if degrees and degrees[0] > n - 1:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += degrees[k - 1]
        rest = sum(min(x, k) for x in degrees[k:])
        if prefix > k * (k - 1) + rest:
            return False
    return True


def degree_sum_is_odd(degrees: Iterable[int]) -> bool:
    return sum(degrees) % 2 == 1


def restrict(d: DegreeSequence, labels: Iterable[int]) -> DegreeSequence:
    """d|_A"""
    return d.restrict(labels)


def count_trees_with_degrees(d: DegreeSequence) -> int:
    """Number of labelled trees with degrees d: (n-2)! / prod (d_v - 1)!."""
    n = d.num_vertices
    if d.degree_sum != 2 * (n - 1):
        return 0
    if n == 2:
        return 1
    return factorial(n - 2) // prod(factorial(x - 1) for x in d.degrees)


def kernel_child_sequence(d: DegreeSequence, kernel: SimpleKernel) -> ChildSequence:
    """
    Child sequence on [0, n] attached to a simple kernel.

    c_0 = 0, c_v = d_v - 1 off the kernel and c_v = d_v - deg_{K*}(v) on it.
    Raises ValueError if some kernel degree exceeds the prescribed degree.
    """
    counts = {0: 0}
    kernel_vertices = kernel.graph.vertices
    for v, degree in d.entries:
        if v in kernel_vertices:
            counts[v] = degree - kernel.graph.degree(v)
        else:
            counts[v] = degree - 1
        if counts[v] < 0:
            raise ValueError(f"vertex {v} has degree {degree} below its simple-kernel degree")
    return ChildSequence.from_mapping(counts)


def binary_child_sequence(n: int) -> ChildSequence:
    """
    Binary child sequence b on [0, n] with b_0 = 0.

    The n/2 two-child vertices take the largest labels, so 0 is always the
    minimum-label leaf.
    """
    if n < 0 or n % 2:
        raise ValueError(f"binary child sequence needs an even n >= 0, got {n}")
    counts = {v: 0 for v in range(n + 1)}
    for v in range(n // 2 + 1, n + 1):
        counts[v] = 2
    return ChildSequence.from_mapping(counts)


def extend_with_singletons(c: ChildSequence, m: int) -> Tuple[ChildSequence, Tuple[int, ...]]:
    """
    c+ = (c, 1, ..., 1) with m - 1 fresh one-child labels.

    Returns the extension together with the fresh labels.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    start = max(c.labels, default=-1) + 1
    extras = tuple(range(start, start + m - 1))
    counts = dict(c.entries)
    counts.update({v: 1 for v in extras})
    return ChildSequence.from_mapping(counts), extras


def iter_degree_sequences(max_vertices: int, max_sum: int, min_vertices: int = 2) -> Iterator[DegreeSequence]:
    """
    Every degree sequence on labels 1..n with n in [min_vertices, max_vertices],
    entries in [1, n-1] and even sum at most max_sum.
    """
    for n in range(min_vertices, max_vertices + 1):
        for degrees in _bounded_tuples(n, n - 1, max_sum):
            if sum(degrees) % 2 == 0:
                yield DegreeSequence.from_degrees(degrees)


def _bounded_tuples(length: int, top: int, budget: int) -> Iterator[Tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    # every remaining entry needs at least 1
    for first in range(1, min(top, budget - (length - 1)) + 1):
        for rest in _bounded_tuples(length - 1, top, budget - first):
            yield (first,) + rest


def sequence_from_runs(runs: List[Tuple[int, int]]) -> DegreeSequence:
    """Expand (degree, repeat) runs such as [(3, 5), (1, 7)] in order."""
    degrees: List[int] = []
    for degree, repeat in runs:
        degrees.extend([degree] * repeat)
    return DegreeSequence.from_degrees(degrees)


def _weak_tuples(length: int, total: int) -> Iterator[Tuple[int, ...]]:
    if length == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_tuples(length - 1, total - first):
            yield (first,) + rest


def iter_child_sequences(max_total: int, one_free: bool = False, leaf_zero: bool = False,
                         min_total: int = 1) -> Iterator[ChildSequence]:
    """
    Every tree child sequence on labels 0..n with n in [min_total, max_total].

    `one_free` drops sequences with an entry equal to 1; `leaf_zero` keeps
    only those with c_0 = 0.
    """
    for n in range(min_total, max_total + 1):
        for counts in _weak_tuples(n + 1, n):
            if leaf_zero and counts[0] != 0:
                continue
            if one_free and 1 in counts:
                continue
            yield ChildSequence.from_counts(counts)


def _non_increasing(length: int, top: int, low: int, budget: int) -> Iterator[Tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for first in range(min(top, budget - low * (length - 1)), low - 1, -1):
        for rest in _non_increasing(length - 1, first, low, budget - first):
            yield (first,) + rest


def iter_degree_sequence_types(max_vertices: int, max_sum: int, min_vertices: int = 2) -> Iterator[DegreeSequence]:
    """
    One degree sequence per multiset of degrees, labelled 1..n in
    non-increasing degree order. Same range as iter_degree_sequences.
    """
    for n in range(min_vertices, max_vertices + 1):
        for degrees in _non_increasing(n, n - 1, 1, max_sum):
            if sum(degrees) % 2 == 0:
                yield DegreeSequence.from_degrees(degrees)


def iter_child_sequence_types(max_total: int, one_free: bool = False, min_total: int = 1) -> Iterator[ChildSequence]:
    """
    One tree child sequence per multiset of counts, labelled 0..n in
    non-decreasing count order. The leaves take the smallest labels, so
    c_0 = 0.
    """
    for n in range(min_total, max_total + 1):
        for counts in _non_increasing(n + 1, n, 0, n):
            if sum(counts) != n:
                continue
            if one_free and 1 in counts:
                continue
            yield ChildSequence.from_counts(tuple(reversed(counts)))


def canonical_child_sequence(c: ChildSequence) -> ChildSequence:
    """The representative of c's type in iter_child_sequence_types"""
    return ChildSequence.from_counts(tuple(sorted(c.counts)))
