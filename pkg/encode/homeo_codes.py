"""
Bijection between graphs with a fixed simple homeomorphic reduction H and
triples (C, sigma, P).

C is the union of the cycle components, sigma lists the remaining suppressed
labels path by path, and P holds the path lengths of the mutable edges of H
in lexicographic order. Suppressed labels are whatever labels of d are
missing from V(H); positions 1..h refer to them in increasing order.
"""

from fractions import Fraction
from itertools import combinations, permutations
from math import comb, factorial
from typing import Dict, Iterator, List, Tuple

from decompose import expand_homeo_reduction, simple_homeo_reduction, split_cycle_components
from degseq import count_compositions, iter_compositions
from models import (
    Composition,
    DegreeSequence,
    DiscreteDistribution,
    HomeoCodeDict,
    HomeoCodeTriple,
    HomeoReduction,
    LabeledGraph
)
from .two_regular import iter_two_regular, two_regular_count


def suppressed_vertices(d: DegreeSequence, H: HomeoReduction) -> Tuple[int, ...]:
    """Labels of d outside V(H), sorted"""
    return tuple(v for v in d.labels if v not in H.graph.vertices)


def encode_given_H(G: LabeledGraph, H: HomeoReduction) -> HomeoCodeTriple:
    """(C, sigma, P) for a graph with H(G) = H"""
    own = simple_homeo_reduction(G)
    if own != H:
        raise ValueError("the simple homeomorphic reduction of G differs from the given H")
    _, cycles = split_cycle_components(G)
    placement: List[int] = []
    lengths: List[int] = []
    for edge in own.mutable_in_order():
        path = own.path_map.get(edge, ())
        placement.extend(path)
        lengths.append(len(path))
    return HomeoCodeTriple(cycles=cycles, placement=tuple(placement), composition=Composition(tuple(lengths)))


def decode_given_H(code: HomeoCodeTriple, d: DegreeSequence, H: HomeoReduction) -> LabeledGraph:
    """The graph of G_d(H) encoded by (C, sigma, P)"""
    suppressed = set(suppressed_vertices(d, H))
    cycles, placement, P = code.cycles, code.placement, code.composition
    if not cycles.vertices <= suppressed or any(cycles.degree(v) != 2 for v in cycles.vertices):
        raise ValueError("cycles must be a 2-regular graph on suppressed labels")
    if len(set(placement)) != len(placement) or set(placement) != suppressed - cycles.vertices:
        raise ValueError("placement must list every suppressed label outside the cycles exactly once")
    if P.m != H.num_mutable or P.total != len(placement):
        raise ValueError(
            f"composition must have {H.num_mutable} parts summing to {len(placement)}, got {P.parts}"
        )

    sums = P.prefix_sums()
    paths: Dict = {
        edge: placement[sums[i]:sums[i + 1]]
        for i, edge in enumerate(H.mutable_in_order())
    }
    rebuilt = HomeoReduction(graph=H.graph, mutable_edges=H.mutable_edges, paths=paths, cycles=cycles)
    return expand_homeo_reduction(rebuilt)


def iter_homeo_codes(d: DegreeSequence, H: HomeoReduction) -> Iterator[HomeoCodeTriple]:
    """Every (C, sigma, P) in X_d(H)"""
    suppressed = suppressed_vertices(d, H)
    m = H.num_mutable
    for size in range(len(suppressed) + 1):
        if size in (1, 2):
            continue
        for chosen in combinations(suppressed, size):
            rest = [v for v in suppressed if v not in chosen]
            if count_compositions(m, len(rest)) == 0:
                continue
            for cycles in iter_two_regular(chosen):
                for placement in permutations(rest):
                    for P in iter_compositions(m, len(rest)):
                        yield HomeoCodeTriple(cycles=cycles, placement=placement, composition=P)


def enumerate_homeo_codes(d: DegreeSequence, H: HomeoReduction) -> List[HomeoCodeTriple]:
    return list(iter_homeo_codes(d, H))


def _cycle_weights(h: int, m: int) -> Dict[int, int]:
    if h < 0 or m < 0:
        raise ValueError(f"need h >= 0 and m >= 0, got h={h}, m={m}")
    return {
        k: comb(h, k) * two_regular_count(k) * factorial(h - k) * count_compositions(m, h - k)
        for k in range(h + 1)
    }


def count_homeo_codes(h: int, m: int) -> int:
    """|X_d(H)| = sum_k binomial(h, k) c_k (h - k)! |P_{m, h-k}|"""
    return sum(_cycle_weights(h, m).values())


def cycle_count_law(h: int, m: int) -> DiscreteDistribution:
    """Exact law of cyc(G) for G uniform in G_d(H) with h suppressed labels and m mutable edges"""
    weights = {k: Fraction(w) for k, w in _cycle_weights(h, m).items() if w}
    return DiscreteDistribution.from_weights(weights)


def homeo_code_to_dict(code: HomeoCodeTriple) -> HomeoCodeDict:
    return HomeoCodeDict(
        cycle_edges=[[u, v] for u, v in code.cycles.sorted_edges],
        placement=list(code.placement),
        composition=list(code.composition.parts),
    )
