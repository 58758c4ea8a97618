"""
Breadth-first distances, diameters and balls.

All functions accept a LabeledGraph or a MultiGraph; only the `vertices`
and `adjacency` attributes are used, so loops and parallel edges of a
multigraph are irrelevant to distances.
"""

import math
from collections import deque
from typing import Dict, FrozenSet, Iterable, Union

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from models import LabeledGraph, MultiGraph

Graph = Union[LabeledGraph, MultiGraph]

INFINITY = math.inf


def bfs_distances(G: Graph, sources: Union[int, Iterable[int]]) -> Dict[int, int]:
    """Distances from a source (or the nearest of several sources)"""
    if isinstance(sources, int):
        sources = [sources]
    distances: Dict[int, int] = {}
    queue = deque()
    for s in sources:
        if s not in G.vertices:
            raise ValueError(f"vertex {s} is not in the graph")
        if s not in distances:
            distances[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        for w in G.adjacency[u]:
            if w not in distances:
                distances[w] = distances[u] + 1
                queue.append(w)
    return distances


def radius_from(G: Graph, v: int) -> int:
    """Largest BFS distance from v inside its component"""
    return max(bfs_distances(G, v).values())


def diameter(G: Graph) -> int:
    """diam(G): greatest diameter of any component; 0 for the empty graph"""
    return max((radius_from(G, v) for v in G.vertices), default=0)


def diameter_plus(G: Graph) -> Union[int, float]:
    """diam+(G): the diameter if G is connected, math.inf otherwise"""
    if not G.vertices:
        return 0
    start = min(G.vertices)
    if len(bfs_distances(G, start)) != len(G.vertices):
        return INFINITY
    return diameter(G)


def diameter_all_pairs(G: Graph, connected_only: bool = False) -> Union[int, float]:
    """
    Diameter through scipy's all-pairs unweighted shortest paths.

    With connected_only=True the result follows diam+ and is math.inf for a
    disconnected graph.
    """
    if not G.vertices:
        return 0
    order = sorted(G.vertices)
    index = {v: i for i, v in enumerate(order)}
    rows, cols = [], []
    for u, neighbours in G.adjacency.items():
        for w in neighbours:
            rows.append(index[u])
            cols.append(index[w])
    n = len(order)
    matrix = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    dist = shortest_path(matrix, method="D", directed=False, unweighted=True)
    finite = np.isfinite(dist)
    if connected_only and not finite.all():
        return INFINITY
    return int(dist[finite].max())


def tree_diameter(T: Graph) -> int:
    """Diameter of a tree by a double BFS sweep"""
    if not T.vertices:
        return 0
    first = bfs_distances(T, min(T.vertices))
    far = max(first, key=lambda v: (first[v], -v))
    return max(bfs_distances(T, far).values())


def edge_ball(K: Graph, L: Iterable[int], r: int):
    """
    B_K(L, r): edges whose endpoints both lie within distance r of L.

    Returns edge ids for a MultiGraph and (u, v) pairs for a LabeledGraph.
    """
    if r < 0:
        raise ValueError(f"radius must be non-negative, got {r}")
    L = list(L)
    if not L:
        return frozenset()
    distances = bfs_distances(K, L)
    near = {v for v, dist in distances.items() if dist <= r}
    if isinstance(K, MultiGraph):
        return frozenset(i for i, (u, v) in enumerate(K.endpoints) if u in near and v in near)
    return frozenset(e for e in K.edges if e[0] in near and e[1] in near)


def vertex_ball(K: Graph, L: Iterable[int], r: int) -> FrozenSet[int]:
    """Vertices within distance r of L"""
    distances = bfs_distances(K, list(L))
    return frozenset(v for v, dist in distances.items() if dist <= r)
