"""
Kernel multigraph and simple kernel.

Kernel edges are ordered by (e-, e+, smallest internal label or 0) and carry
the internal vertices of the core path they replace, oriented from e-. A
loop's sequence is oriented so that its first internal label is the smaller
of the two ends.
"""

from typing import Callable, Dict, Iterable, List, Set, Tuple

from models import Edge, LabeledGraph, MultiGraph, SimpleKernel, edge_key
from .core import component_surplus, core_decomposition, is_cycle_component

# (edge, mutable, internal sequence oriented from the edge's lower endpoint)
SimpleKernelPart = Tuple[Edge, bool, Tuple[int, ...]]


def _walk(C: LabeledGraph, start: int, first: int, stops: Set[int]) -> Tuple[Tuple[int, ...], int]:
    """Follow degree-2 vertices from start through first until a stop vertex"""
    internal: List[int] = []
    previous, current = start, first
    while current not in stops:
        internal.append(current)
        a, b = C.adjacency[current]
        previous, current = current, (b if a == previous else a)
    return tuple(internal), current


def _loop_orientation(internal: Tuple[int, ...]) -> Tuple[int, ...]:
    return internal if internal[0] < internal[-1] else internal[::-1]


def _edge_sort_key(item: Tuple[Edge, Tuple[int, ...]]):
    (u, v), internal = item
    return (u, v, min(internal, default=0))


def kernel(G: LabeledGraph) -> MultiGraph:
    """
    K(G), built per component.

    Trees and cycles contribute nothing. A unicyclic component with a leaf
    gives a single loop at alpha of its minimum-label leaf. Otherwise the
    kernel vertices are the core vertices of core degree at least 3 and each
    maximal path through degree-2 core vertices becomes one edge.
    """
    decomposition = core_decomposition(G)
    C = decomposition.core
    vertices: Set[int] = set()
    found: Dict[Tuple[int, ...], Tuple[Edge, Tuple[int, ...]]] = {}

    for component in G.components():
        component_core = component & C.vertices
        if not component_core or is_cycle_component(G, component):
            continue
        if component_surplus(G, component) == 1:
            leaf = min(v for v in component if G.degree(v) == 1)
            u = decomposition.alpha(leaf)
            internal, _ = _walk(C, u, C.adjacency[u][0], {u})
            vertices.add(u)
            found[(u,) + internal + (u,)] = ((u, u), _loop_orientation(internal))
            continue
        stops = {v for v in component_core if C.degree(v) >= 3}
        vertices |= stops
        for u in sorted(stops):
            for w in C.adjacency[u]:
                internal, v = _walk(C, u, w, stops)
                full = (u,) + internal + (v,)
                key = min(full, full[::-1])
                if key in found:
                    continue
                if u == v:
                    found[key] = ((u, u), _loop_orientation(internal))
                elif u < v:
                    found[key] = ((u, v), internal)
                else:
                    found[key] = ((v, u), internal[::-1])

    return assemble_kernel(vertices, found.values())


def assemble_kernel(vertices: Iterable[int], edges: Iterable[Tuple[Edge, Tuple[int, ...]]]) -> MultiGraph:
    """Kernel multigraph from (edge, internal path) items in canonical edge order and orientation"""
    items = []
    for (u, v), internal in edges:
        internal = tuple(internal)
        if u == v and internal:
            internal = _loop_orientation(internal)
        elif u > v:
            (u, v), internal = (v, u), internal[::-1]
        items.append(((u, v), internal))
    items.sort(key=_edge_sort_key)
    return MultiGraph(
        vertices=frozenset(vertices),
        endpoints=tuple(e for e, _ in items),
        paths=tuple(p for _, p in items),
    )


def _oriented(a: int, b: int, internal_from_a: Tuple[int, ...]) -> Tuple[Edge, Tuple[int, ...]]:
    if a <= b:
        return (a, b), tuple(internal_from_a)
    return (b, a), tuple(internal_from_a)[::-1]


def replace_kernel_edge(u: int, v: int, internal: Tuple[int, ...], multiplicity: int) -> List[SimpleKernelPart]:
    """
    Simple-kernel pieces replacing one kernel edge u <= v with its core path.

    loop: triangle u, p1, pk with only p1pk mutable; multiplicity 1: the edge
    itself, mutable; multiplicity >= 2 with a nonempty path: mutable u-x and
    immutable x-v where x = pk; multiplicity >= 2 without internal vertices:
    immutable u-v.
    """
    if u == v:
        p1, pk = internal[0], internal[-1]
        mutable_edge, path = _oriented(p1, pk, internal[1:-1])
        return [
            (edge_key(u, p1), False, ()),
            (edge_key(u, pk), False, ()),
            (mutable_edge, True, path),
        ]
    if multiplicity == 1:
        return [((u, v), True, tuple(internal))]
    if internal:
        x = internal[-1]
        mutable_edge, path = _oriented(u, x, internal[:-1])
        return [(mutable_edge, True, path), (edge_key(x, v), False, ())]
    return [((u, v), False, ())]


def simple_kernel_of(K: MultiGraph,
                     replace: Callable[[int, int, Tuple[int, ...], int], List[SimpleKernelPart]] = replace_kernel_edge
                     ) -> SimpleKernel:
    """K* of a kernel multigraph; `replace` maps one kernel edge to its pieces"""
    edges: List[Edge] = []
    mutable: List[Edge] = []
    paths: Dict[Edge, Tuple[int, ...]] = {}
    vertices = set(K.vertices)
    for edge_id, (u, v) in enumerate(K.endpoints):
        for edge, is_mutable, path in replace(u, v, K.paths[edge_id], K.multiplicity(edge_id)):
            edges.append(edge)
            vertices.update(edge)
            if is_mutable:
                mutable.append(edge)
                paths[edge] = path
    graph = LabeledGraph.from_edges(edges, vertices)
    return SimpleKernel(graph=graph, mutable_edges=frozenset(mutable), paths=paths)


def simple_kernel(G: LabeledGraph) -> SimpleKernel:
    """K*(G) with its mutable edges and the core paths they replace"""
    return simple_kernel_of(kernel(G))


def splice_simple_kernel(kernel_star: SimpleKernel) -> LabeledGraph:
    """Rebuild C(G) by subdividing every mutable edge along its recorded path"""
    edges: List[Edge] = []
    vertices = set(kernel_star.graph.vertices)
    for u, v in kernel_star.graph.sorted_edges:
        path = kernel_star.path_map.get((u, v), ()) if (u, v) in kernel_star.mutable_edges else ()
        chain = (u,) + path + (v,)
        vertices.update(path)
        edges.extend(zip(chain, chain[1:]))
    return LabeledGraph.from_edges(edges, vertices)
