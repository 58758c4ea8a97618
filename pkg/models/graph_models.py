"""
Data models for labelled simple graphs, multigraphs and rooted forests.
"""

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from .sequence_models import ChildSequence, DegreeSequence

Edge = Tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Canonical (min, max) form of an undirected edge"""
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph on totally ordered integer labels"""
    vertices: FrozenSet[int]
    edges: FrozenSet[Edge]

    def __post_init__(self):
        vertices = frozenset(int(v) for v in self.vertices)
        edges = frozenset(edge_key(int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} in a simple graph")
            if u not in vertices or v not in vertices:
                raise ValueError(f"edge {(u, v)} has an endpoint outside the vertex set")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], vertices: Optional[Iterable[int]] = None) -> "LabeledGraph":
        """Build a graph; vertices default to the edge endpoints.

        Raises ValueError on a repeated edge so that parallel edges are never
        silently merged.
        """
        edge_list = [edge_key(int(u), int(v)) for u, v in edges]
        if len(set(edge_list)) != len(edge_list):
            raise ValueError("parallel edges are not allowed in a simple graph")
        vertex_set = set(vertices) if vertices is not None else set()
        for u, v in edge_list:
            vertex_set.update((u, v))
        return cls(frozenset(vertex_set), frozenset(edge_list))

    @classmethod
    def empty(cls) -> "LabeledGraph":
        return cls(frozenset(), frozenset())

    @cached_property
    def sorted_vertices(self) -> Tuple[int, ...]:
        return tuple(sorted(self.vertices))

    @cached_property
    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> Dict[int, Tuple[int, ...]]:
        neighbours: Dict[int, List[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            neighbours[u].append(v)
            neighbours[v].append(u)
        return {v: tuple(sorted(ns)) for v, ns in neighbours.items()}

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbours(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edges

    def degree_map(self) -> Dict[int, int]:
        return {v: len(ns) for v, ns in self.adjacency.items()}

    def degree_sequence(self) -> DegreeSequence:
        return DegreeSequence.from_mapping(self.degree_map())

    def surplus(self) -> int:
        """1 + e(G) - v(G)"""
        return 1 + self.num_edges - self.num_vertices

    def subgraph(self, vertices: Iterable[int]) -> "LabeledGraph":
        """Induced subgraph"""
        keep = frozenset(vertices) & self.vertices
        return LabeledGraph(keep, frozenset((u, v) for u, v in self.edges if u in keep and v in keep))

    def without_edges(self, edges: Iterable[Edge]) -> "LabeledGraph":
        drop = {edge_key(u, v) for u, v in edges}
        return LabeledGraph(self.vertices, self.edges - drop)

    def union(self, other: "LabeledGraph") -> "LabeledGraph":
        return LabeledGraph(self.vertices | other.vertices, self.edges | other.edges)

    def components(self) -> List[FrozenSet[int]]:
        """Vertex sets of the connected components, ordered by minimum label"""
        seen = set()
        found = []
        for start in self.sorted_vertices:
            if start in seen:
                continue
            stack = [start]
            seen.add(start)
            members = [start]
            while stack:
                u = stack.pop()
                for w in self.adjacency[u]:
                    if w not in seen:
                        seen.add(w)
                        members.append(w)
                        stack.append(w)
            found.append(frozenset(members))
        return found

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


@dataclass(frozen=True)
class MultiGraph:
    """Multigraph (V, E, iota) whose edge identifiers are positions in `endpoints`.

    Each edge optionally records the internal vertex sequence of the core path
    it replaces, oriented from its lower endpoint e^- to its upper endpoint e^+.
    """
    vertices: FrozenSet[int]
    endpoints: Tuple[Edge, ...]  # (e^-, e^+) per edge id; equal for a loop
    paths: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        vertices = frozenset(self.vertices)
        endpoints = tuple(edge_key(u, v) for u, v in self.endpoints)
        paths = tuple(tuple(p) for p in self.paths) or tuple(() for _ in endpoints)
        if len(paths) != len(endpoints):
            raise ValueError("every multigraph edge needs a path entry")
        for u, v in endpoints:
            if u not in vertices or v not in vertices:
                raise ValueError(f"edge {(u, v)} has an endpoint outside the vertex set")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "endpoints", endpoints)
        object.__setattr__(self, "paths", paths)

    @classmethod
    def empty(cls) -> "MultiGraph":
        return cls(frozenset(), ())

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.endpoints)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def internal_counts(self) -> Tuple[int, ...]:
        """|C(e)| for each edge id"""
        return tuple(len(p) for p in self.paths)

    def lower(self, edge_id: int) -> int:
        return self.endpoints[edge_id][0]

    def upper(self, edge_id: int) -> int:
        return self.endpoints[edge_id][1]

    def is_loop(self, edge_id: int) -> bool:
        u, v = self.endpoints[edge_id]
        return u == v

    @cached_property
    def _multiplicities(self) -> Dict[Edge, int]:
        counts: Dict[Edge, int] = defaultdict(int)
        for pair in self.endpoints:
            counts[pair] += 1
        return dict(counts)

    def multiplicity(self, edge_id: int) -> int:
        """mult(e): number of edges sharing the endpoints of e"""
        return self._multiplicities[self.endpoints[edge_id]]

    @cached_property
    def adjacency(self) -> Dict[int, Tuple[int, ...]]:
        neighbours: Dict[int, set] = {v: set() for v in self.vertices}
        for u, v in self.endpoints:
            neighbours[u].add(v)
            neighbours[v].add(u)
        return {v: tuple(sorted(ns)) for v, ns in neighbours.items()}

    def degree(self, v: int) -> int:
        """Degree counting a loop twice"""
        return sum((u == v) + (w == v) for u, w in self.endpoints)

    def underlying_simple_edges(self) -> FrozenSet[Edge]:
        return frozenset(pair for pair in self.endpoints if pair[0] != pair[1])


@dataclass(frozen=True)
class RootedForest:
    """Rooted forest given by a parent map and a root set"""
    parent: Tuple[Tuple[int, int], ...]  # sorted (vertex, parent) pairs
    roots: Tuple[int, ...]

    def __post_init__(self):
        parent = _normalize_parent(self.parent)
        roots = tuple(sorted(set(int(r) for r in self.roots)))
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "roots", roots)
        parent_map = dict(parent)
        if len(parent_map) != len(parent):
            raise ValueError("a vertex has more than one parent")
        vertices = set(roots) | set(parent_map)
        for v, p in parent:
            if v in roots:
                raise ValueError(f"root {v} cannot have a parent")
            if p not in vertices:
                raise ValueError(f"parent {p} of {v} is not a forest vertex")
        for v in parent_map:
            seen = {v}
            u = parent_map[v]
            while u in parent_map:
                if u in seen:
                    raise ValueError(f"parent map has a cycle through {u}")
                seen.add(u)
                u = parent_map[u]

    @classmethod
    def from_parent_map(cls, parent: Mapping[int, int], roots: Iterable[int]) -> "RootedForest":
        return cls(tuple(parent.items()), tuple(roots))

    @classmethod
    def empty(cls) -> "RootedForest":
        return cls((), ())

    @cached_property
    def parent_map(self) -> Dict[int, int]:
        return dict(self.parent)

    @cached_property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(self.roots) | frozenset(self.parent_map)

    @cached_property
    def children_map(self) -> Dict[int, Tuple[int, ...]]:
        children: Dict[int, List[int]] = {v: [] for v in self.vertices}
        for v, p in self.parent:
            children[p].append(v)
        return {v: tuple(sorted(cs)) for v, cs in children.items()}

    @cached_property
    def depths(self) -> Dict[int, int]:
        depth = {r: 0 for r in self.roots}
        stack = list(self.roots)
        while stack:
            u = stack.pop()
            for w in self.children_map[u]:
                depth[w] = depth[u] + 1
                stack.append(w)
        return depth

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def is_tree(self) -> bool:
        return len(self.roots) == 1

    @property
    def root(self) -> int:
        if len(self.roots) != 1:
            raise ValueError(f"forest has {len(self.roots)} roots, not a tree")
        return self.roots[0]

    def children(self, v: int) -> Tuple[int, ...]:
        return self.children_map[v]

    def height_of(self, v: int) -> int:
        """ht(v): distance from v to the root of its tree"""
        return self.depths[v]

    @property
    def height(self) -> int:
        """Largest vertex height; 0 for the empty forest"""
        return max(self.depths.values(), default=0)

    def root_of(self, v: int) -> int:
        parents = self.parent_map
        while v in parents:
            v = parents[v]
        return v

    def path_from_root(self, v: int) -> List[int]:
        """Vertices on the root-to-v path, root first"""
        path = [v]
        parents = self.parent_map
        while path[-1] in parents:
            path.append(parents[path[-1]])
        path.reverse()
        return path

    def tree_vertices(self, root: int) -> FrozenSet[int]:
        found = [root]
        stack = [root]
        while stack:
            u = stack.pop()
            for w in self.children_map[u]:
                found.append(w)
                stack.append(w)
        return frozenset(found)

    def leaves(self) -> Tuple[int, ...]:
        return tuple(sorted(v for v, cs in self.children_map.items() if not cs))

    def child_sequence(self) -> ChildSequence:
        return ChildSequence.from_mapping({v: len(cs) for v, cs in self.children_map.items()})

    def edges(self) -> FrozenSet[Edge]:
        return frozenset(edge_key(v, p) for v, p in self.parent)

    def as_graph(self) -> LabeledGraph:
        return LabeledGraph(self.vertices, self.edges())


def _normalize_parent(parent) -> Tuple[Tuple[int, int], ...]:
    if isinstance(parent, Mapping):
        parent = parent.items()
    return tuple(sorted((int(v), int(p)) for v, p in parent))
