"""
Exact enumeration of the simple graphs with a given degree sequence.
"""

from itertools import combinations
from typing import Dict, Iterator, List, Union

from decompose import cycle_components
from models import DegreeSequence, Edge, EnumerationGuardError, GraphClass, LabeledGraph

ENUMERATION_GUARD = 18


def _realizations(labels: List[int], remaining: Dict[int, int], edges: List[Edge]) -> Iterator[List[Edge]]:
    """Backtrack over the lowest unfinished vertex, joining it to higher vertices only"""
    pending = [v for v in labels if remaining[v] > 0]
    if not pending:
        yield list(edges)
        return
    v = pending[0]
    higher = [w for w in pending[1:] if w > v]
    need = remaining[v]
    if need > len(higher):
        return
    remaining[v] = 0
    for chosen in combinations(higher, need):
        for w in chosen:
            remaining[w] -= 1
        edges.extend((v, w) for w in chosen)
        yield from _realizations(labels, remaining, edges)
        del edges[-need:]
        for w in chosen:
            remaining[w] += 1
    remaining[v] = need


def in_class(G: LabeledGraph, graph_class: GraphClass) -> bool:
    if graph_class is GraphClass.CONNECTED:
        return G.is_connected()
    if graph_class is GraphClass.NO_CYCLE_COMPONENTS:
        return not cycle_components(G)
    return True


def iter_graphs(d: DegreeSequence, graph_class: Union[GraphClass, str] = GraphClass.ALL,
                guard: int = ENUMERATION_GUARD) -> Iterator[LabeledGraph]:
    if isinstance(graph_class, str):
        graph_class = GraphClass.parse(graph_class)
    if d.degree_sum > guard:
        raise EnumerationGuardError(
            f"degree sum {d.degree_sum} exceeds the enumeration guard {guard}"
        )
    labels = list(d.labels)
    for edges in _realizations(labels, dict(d.entries), []):
        G = LabeledGraph.from_edges(edges, labels)
        if in_class(G, graph_class):
            yield G


def enumerate_graphs(d: DegreeSequence, graph_class: Union[GraphClass, str] = GraphClass.ALL,
                     guard: int = ENUMERATION_GUARD) -> List[LabeledGraph]:
    """
    Every simple graph with degree sequence d in the requested class.

    Raises EnumerationGuardError when |d|_1 exceeds the guard.
    """
    return list(iter_graphs(d, graph_class, guard))
