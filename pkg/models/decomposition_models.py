"""
Data models for structural decompositions of a graph.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Optional, Tuple

from .graph_models import Edge, LabeledGraph, RootedForest, edge_key


@dataclass(frozen=True)
class CoreDecomposition:
    """C(G), F(G), the removed tree leaves R and the nearest-core map alpha"""
    core: LabeledGraph
    forest: RootedForest
    removed_leaves: FrozenSet[int]
    nearest_core: Tuple[Tuple[int, int], ...]  # sorted (vertex, alpha(vertex)) pairs

    @cached_property
    def alpha_map(self) -> Dict[int, int]:
        return dict(self.nearest_core)

    def alpha(self, v: int) -> int:
        """Core vertex closest to v; undefined for tree components"""
        if v in self.core.vertices:
            return v
        try:
            return self.alpha_map[v]
        except KeyError:
            raise ValueError(f"alpha({v}) is undefined: {v} lies in a tree component") from None


def _oriented_paths(paths) -> Tuple[Tuple[Edge, Tuple[int, ...]], ...]:
    if isinstance(paths, dict):
        paths = paths.items()
    return tuple(sorted((edge_key(*e), tuple(p)) for e, p in paths))


@dataclass(frozen=True)
class SimpleKernel:
    """K*(G) with its mutable edges stored explicitly.

    `paths` maps each mutable edge to the internal vertices of the core path
    it replaces, oriented from the edge's lower endpoint. Two simple kernels
    are equal when their graphs and mutable edge sets agree.
    """
    graph: LabeledGraph
    mutable_edges: FrozenSet[Edge]
    paths: Tuple[Tuple[Edge, Tuple[int, ...]], ...] = field(default=(), compare=False)

    def __post_init__(self):
        mutable = frozenset(edge_key(*e) for e in self.mutable_edges)
        if not mutable <= self.graph.edges:
            raise ValueError("mutable edges must be edges of the simple kernel")
        object.__setattr__(self, "mutable_edges", mutable)
        object.__setattr__(self, "paths", _oriented_paths(self.paths))

    @classmethod
    def empty(cls) -> "SimpleKernel":
        return cls(LabeledGraph.empty(), frozenset())

    @property
    def is_empty(self) -> bool:
        return self.graph.is_empty

    @cached_property
    def path_map(self) -> Dict[Edge, Tuple[int, ...]]:
        return dict(self.paths)

    def mutable_in_order(self) -> Tuple[Edge, ...]:
        """e*_1, ..., e*_m in lexicographic order"""
        return tuple(sorted(self.mutable_edges))

    @property
    def immutable_edges(self) -> FrozenSet[Edge]:
        return self.graph.edges - self.mutable_edges

    @property
    def num_mutable(self) -> int:
        """e*(K*)"""
        return len(self.mutable_edges)

    def internal_count(self, edge: Edge) -> int:
        """|C(e*)|"""
        return len(self.path_map.get(edge_key(*edge), ()))

    def path_lengths(self) -> Tuple[int, ...]:
        """(|C(e*_1)|, ..., |C(e*_m)|) in lexicographic edge order"""
        return tuple(self.internal_count(e) for e in self.mutable_in_order())


@dataclass(frozen=True)
class HomeoReduction:
    """H(G) with mutable edges, replaced paths and the deleted cycle components"""
    graph: LabeledGraph
    mutable_edges: FrozenSet[Edge]
    paths: Tuple[Tuple[Edge, Tuple[int, ...]], ...] = field(default=(), compare=False)
    cycles: LabeledGraph = field(default_factory=LabeledGraph.empty, compare=False)

    def __post_init__(self):
        mutable = frozenset(edge_key(*e) for e in self.mutable_edges)
        if not mutable <= self.graph.edges:
            raise ValueError("mutable edges must be edges of the reduction")
        object.__setattr__(self, "mutable_edges", mutable)
        object.__setattr__(self, "paths", _oriented_paths(self.paths))

    @cached_property
    def path_map(self) -> Dict[Edge, Tuple[int, ...]]:
        return dict(self.paths)

    def mutable_in_order(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.mutable_edges))

    @property
    def num_mutable(self) -> int:
        """e*(H)"""
        return len(self.mutable_edges)

    @property
    def path_lengths(self) -> Dict[Edge, int]:
        """|G(e*)| per mutable edge"""
        return {e: len(self.path_map.get(e, ())) for e in self.mutable_in_order()}


@dataclass
class DiameterBoundParts:
    """Terms of the chained diameter bound through the forest, core and kernel"""
    forest_height: int
    core_diameter: int
    kernel_diameter: Optional[int]  # None when the kernel is empty
    max_path: Optional[int]  # max over kernel edges of |C(e)| + 1
    graph_diameter: int

    def core_bound(self) -> int:
        """2(ht(F) + 1) + diam(C)"""
        return 2 * (self.forest_height + 1) + self.core_diameter

    def kernel_bound(self) -> Optional[int]:
        """2(ht(F) + 1) + (diam(K) + 2) * max(|C(e)| + 1)"""
        if self.kernel_diameter is None or self.max_path is None:
            return None
        return 2 * (self.forest_height + 1) + (self.kernel_diameter + 2) * self.max_path

    def holds(self) -> bool:
        if self.graph_diameter > self.core_bound():
            return False
        bound = self.kernel_bound()
        return bound is None or self.core_bound() <= bound
