"""
Augmented cores versus per-vertex port maps.

For a core C with no cycle components, an augmented core A with C(A) = C is
the same data as a bijection sigma_u from the ports 1..d_u of each kernel
vertex u to its neighbours in C.
"""

from itertools import permutations
from math import factorial, prod
from typing import Dict, Iterator, List, Sequence, Tuple

from decompose import kernel
from degseq import iter_compositions
from models import AugmentedCore, CoreRecord, DegreeSequence, HalfEdge, LabeledGraph, validate_records

PortMaps = Dict[int, Tuple[int, ...]]  # u -> (sigma_u(1), ..., sigma_u(d_u))


def core_to_port_maps(A: AugmentedCore) -> PortMaps:
    """sigma_u(i): the neighbour of u reached through half-edge ui"""
    maps: PortMaps = {}
    for u in A.kernel_vertices:
        targets = []
        for half_edge in A.half_edges_at(u):
            record = A.record_at[half_edge]
            other = record.other(half_edge)
            if not record.internal:
                targets.append(other.vertex)
            else:
                targets.append(record.internal_from(half_edge)[0])
        maps[u] = tuple(targets)
    return maps


def port_maps_to_core(C: LabeledGraph, d: DegreeSequence, maps: PortMaps) -> AugmentedCore:
    """The augmented core with C(A) = C and the given port maps"""
    port_of: Dict[Tuple[int, int], int] = {}
    for u, targets in maps.items():
        if sorted(targets) != sorted(C.neighbours(u)):
            raise ValueError(f"port map at {u} is not a bijection onto its neighbours")
        for i, target in enumerate(targets, start=1):
            port_of[(u, target)] = i

    K = kernel(C)
    records: List[CoreRecord] = []
    for (u, v), internal in zip(K.endpoints, K.paths):
        if u != v:
            i = port_of[(u, internal[0] if internal else v)]
            j = port_of[(v, internal[-1] if internal else u)]
            records.append(CoreRecord.of(HalfEdge(u, i), HalfEdge(v, j), internal))
            continue
        a, b = port_of[(u, internal[0])], port_of[(u, internal[-1])]
        if a > b:
            a, b, internal = b, a, internal[::-1]
        records.append(CoreRecord(HalfEdge(u, a), HalfEdge(u, b), tuple(internal)))
    return AugmentedCore(d, tuple(records))


def count_port_maps(d: DegreeSequence) -> int:
    """prod over kernel vertices of d_u!"""
    return prod(factorial(degree) for _, degree in d.entries if degree >= 3)


def iter_port_maps(C: LabeledGraph, d: DegreeSequence) -> Iterator[PortMaps]:
    kernel_vertices = [v for v, degree in d.entries if degree >= 3]
    yield from _port_products(C, kernel_vertices, {})


def _port_products(C: LabeledGraph, todo: Sequence[int], chosen: PortMaps) -> Iterator[PortMaps]:
    if not todo:
        yield dict(chosen)
        return
    u = todo[0]
    for targets in permutations(C.neighbours(u)):
        chosen[u] = targets
        yield from _port_products(C, todo[1:], chosen)
    del chosen[u]


def _perfect_matchings(items: List[HalfEdge]) -> Iterator[List[Tuple[HalfEdge, HalfEdge]]]:
    if not items:
        yield []
        return
    first = items[0]
    for k in range(1, len(items)):
        rest = items[1:k] + items[k + 1:]
        for tail in _perfect_matchings(rest):
            yield [(first, items[k])] + tail


def iter_augmented_cores(d: DegreeSequence) -> Iterator[AugmentedCore]:
    """
    Every augmented core with degree sequence d.

    Each perfect matching of kernel half-edges is combined with every ordered
    distribution of the degree-2 labels over its pairs; candidates whose
    C(A) is not simple are skipped.
    """
    half_edges = [HalfEdge(v, i) for v, degree in d.entries if degree >= 3 for i in range(1, degree + 1)]
    two_labels = [v for v, degree in d.entries if degree == 2]
    if any(degree < 2 for _, degree in d.entries):
        raise ValueError("augmented cores need degrees of at least 2")
    if not half_edges:
        raise ValueError("augmented cores need at least one vertex of degree 3 or more")

    for matching in _perfect_matchings(half_edges):
        for order in permutations(two_labels):
            for P in iter_compositions(len(matching), len(order)):
                sums = P.prefix_sums()
                records = tuple(
                    CoreRecord.of(a, b, order[sums[i]:sums[i + 1]])
                    for i, (a, b) in enumerate(matching)
                )
                if validate_records(d, records) is None:
                    yield AugmentedCore(d, records)


def enumerate_augmented_cores(d: DegreeSequence) -> List[AugmentedCore]:
    return list(iter_augmented_cores(d))
