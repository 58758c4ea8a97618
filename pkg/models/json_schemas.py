"""
TypedDict schemas for the structured decomposition and code documents.
"""

from typing import List, Optional, TypedDict


class KernelEdgeDict(TypedDict):
    """A kernel edge with the core path it replaces"""
    lower: int
    upper: int
    internal: List[int]
    internal_count: int


class SimpleKernelEdgeDict(TypedDict):
    lower: int
    upper: int
    mutable: bool
    internal: List[int]


class ForestTreeDict(TypedDict):
    root: int
    vertices: List[int]
    height: int


class DiameterBoundDict(TypedDict):
    forest_height: int
    core_diameter: int
    kernel_diameter: Optional[int]
    max_path: Optional[int]
    graph_diameter: int
    core_bound: int
    kernel_bound: Optional[int]


class DecompositionReportDict(TypedDict):
    """Full decomposition document for one graph"""
    vertices: int
    edges: int
    surplus: int
    diameter: int
    diameter_plus: Optional[int]  # null when disconnected
    core_vertices: List[int]
    removed_leaves: List[int]
    forest: List[ForestTreeDict]
    kernel_edges: List[KernelEdgeDict]
    simple_kernel_edges: List[SimpleKernelEdgeDict]
    homeo_mutable_lengths: List[List[int]]  # [lower, upper, |G(e*)|]
    cycle_vertices: int
    bound: Optional[DiameterBoundDict]


class KernelCodeDict(TypedDict):
    forest_parent: List[List[int]]
    forest_roots: List[int]
    tree_parent: List[List[int]]
    tree_root: int
    composition: List[int]


class HomeoCodeDict(TypedDict):
    cycle_edges: List[List[int]]
    placement: List[int]
    composition: List[int]
