"""
Core, attached forest and hanging trees.
"""

from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

from models import CoreDecomposition, LabeledGraph, RootedForest


def core(G: LabeledGraph) -> LabeledGraph:
    """C(G): the largest subgraph of minimum degree at least 2 (empty for forests)"""
    degree = G.degree_map()
    removed: Set[int] = set()
    queue = deque(v for v in G.sorted_vertices if degree[v] <= 1)
    while queue:
        u = queue.popleft()
        if u in removed:
            continue
        removed.add(u)
        for w in G.adjacency[u]:
            if w not in removed:
                degree[w] -= 1
                if degree[w] == 1:
                    queue.append(w)
    return G.subgraph(G.vertices - removed)


def hanging_trees(G: LabeledGraph, core_vertices: Iterable[int]) -> RootedForest:
    """
    Trees of G - E(C) rooted at the given core vertices.

    Every vertex outside the core that is attached to one of the roots through
    non-core vertices becomes a descendant of that root.
    """
    roots = sorted(set(core_vertices))
    blocked = set(roots)
    parent: Dict[int, int] = {}
    for r in roots:
        queue = deque([r])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if w in blocked or w in parent:
                    continue
                parent[w] = u
                queue.append(w)
    return RootedForest.from_parent_map(parent, roots)


def core_decomposition(G: LabeledGraph) -> CoreDecomposition:
    """
    (C(G), F(G), R, alpha).

    Tree components lose their minimum-label leaf and are rooted at its
    neighbour; a single-edge component loses its smaller endpoint. Elsewhere
    every edge rs with r outside the core and s in it roots a tree at r, and
    every vertex of that tree has alpha = s.
    """
    C = core(G)
    parent: Dict[int, int] = {}
    roots: List[int] = []
    removed: Set[int] = set()
    nearest: Dict[int, int] = {}

    for component in G.components():
        if component & C.vertices:
            continue
        tree = G.subgraph(component)
        leaves = [v for v in tree.sorted_vertices if tree.degree(v) == 1]
        if not leaves:
            # isolated vertex
            roots.append(min(component))
            continue
        leaf = leaves[0]
        root = tree.neighbours(leaf)[0]
        removed.add(leaf)
        roots.append(root)
        for v, p in _bfs_parents(tree, root, blocked={leaf}).items():
            parent[v] = p

    hanging = hanging_trees(G, C.vertices)
    for s in C.sorted_vertices:
        for r in hanging.children(s):
            roots.append(r)
            for v in hanging.tree_vertices(r):
                nearest[v] = s
                if v != r:
                    parent[v] = hanging.parent_map[v]

    forest = RootedForest.from_parent_map(parent, roots)
    return CoreDecomposition(
        core=C,
        forest=forest,
        removed_leaves=frozenset(removed),
        nearest_core=tuple(sorted(nearest.items())),
    )


def attached_forest(G: LabeledGraph) -> RootedForest:
    """F(G), with child counts deg_G(v) - 1"""
    return core_decomposition(G).forest


def _bfs_parents(G: LabeledGraph, root: int, blocked: FrozenSet[int] = frozenset()) -> Dict[int, int]:
    parent: Dict[int, int] = {}
    seen = {root} | set(blocked)
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in G.adjacency[u]:
            if w not in seen:
                seen.add(w)
                parent[w] = u
                queue.append(w)
    return parent


def is_cycle_component(G: LabeledGraph, component: FrozenSet[int]) -> bool:
    return len(component) >= 3 and all(G.degree(v) == 2 for v in component)


def cycle_components(G: LabeledGraph) -> List[FrozenSet[int]]:
    return [c for c in G.components() if is_cycle_component(G, c)]


def cycle_vertex_count(G: LabeledGraph) -> int:
    """cyc(G): number of vertices in components that are cycles"""
    return sum(len(c) for c in cycle_components(G))


def component_surplus(G: LabeledGraph, component: FrozenSet[int]) -> int:
    sub = G.subgraph(component)
    return sub.surplus()


def split_cycle_components(G: LabeledGraph) -> Tuple[LabeledGraph, LabeledGraph]:
    """(G without its cycle components, the cycle components)"""
    cycle_vertices = set()
    for c in cycle_components(G):
        cycle_vertices |= c
    return G.subgraph(G.vertices - cycle_vertices), G.subgraph(cycle_vertices)
