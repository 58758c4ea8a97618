"""
Simple homeomorphic reduction H(G) and its inverse.
"""

from typing import Dict, List, Optional, Set, Tuple

from models import Edge, HomeoReduction, LabeledGraph, SimpleKernel
from .core import split_cycle_components
from .kernel import simple_kernel


def simple_homeo_reduction(G: LabeledGraph, kernel_star: Optional[SimpleKernel] = None) -> HomeoReduction:
    """
    H(G): delete the cycle components, then suppress every degree-2 vertex
    outside V(K*).

    Mutable edges are the edges of H other than the immutable edges of K*;
    each records the suppressed path it replaces, oriented from its lower end.
    """
    rest, cycles = split_cycle_components(G)
    kernel_star = kernel_star if kernel_star is not None else simple_kernel(G)
    suppressed = {
        v for v in rest.vertices
        if rest.degree(v) == 2 and v not in kernel_star.graph.vertices
    }
    kept = rest.vertices - suppressed

    found: Dict[Edge, Tuple[int, ...]] = {}
    for u in sorted(kept):
        for first in rest.adjacency[u]:
            internal: List[int] = []
            previous, current = u, first
            while current in suppressed:
                internal.append(current)
                a, b = rest.adjacency[current]
                previous, current = current, (b if a == previous else a)
            if current == u:
                raise ValueError(f"suppressing degree-2 vertices creates a loop at {u}")
            edge, path = ((u, current), tuple(internal)) if u < current else ((current, u), tuple(internal[::-1]))
            if edge in found and found[edge] != path:
                raise ValueError(f"suppressing degree-2 vertices creates parallel edges {edge}")
            found[edge] = path

    graph = LabeledGraph.from_edges(found, kept)
    immutable = kernel_star.immutable_edges
    mutable = frozenset(e for e in found if e not in immutable)
    return HomeoReduction(
        graph=graph,
        mutable_edges=mutable,
        paths={e: found[e] for e in mutable},
        cycles=cycles,
    )


def expand_homeo_reduction(H: HomeoReduction) -> LabeledGraph:
    """Re-subdivide mutable edges along their paths and add back the cycle components"""
    edges: List[Edge] = []
    vertices: Set[int] = set(H.graph.vertices)
    for u, v in H.graph.sorted_edges:
        path = H.path_map.get((u, v), ()) if (u, v) in H.mutable_edges else ()
        chain = (u,) + path + (v,)
        vertices.update(path)
        edges.extend(zip(chain, chain[1:]))
    return LabeledGraph.from_edges(edges, vertices).union(H.cycles)


def suppressed_labels(H: HomeoReduction) -> Tuple[int, ...]:
    """Labels absent from H: internal path vertices and cycle-component vertices"""
    labels = set(H.cycles.vertices)
    for path in H.path_map.values():
        labels.update(path)
    return tuple(sorted(labels))
