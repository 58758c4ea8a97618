"""
Structural decompositions: core, attached forest, kernel, simple kernel,
simple homeomorphic reduction and the diameter decomposition bound.
"""

from .core import (
    core,
    core_decomposition,
    attached_forest,
    hanging_trees,
    cycle_vertex_count,
    cycle_components,
    split_cycle_components
)
from .kernel import (
    kernel,
    simple_kernel,
    simple_kernel_of,
    replace_kernel_edge,
    splice_simple_kernel,
    assemble_kernel
)
from .homeo import (
    simple_homeo_reduction,
    expand_homeo_reduction,
    suppressed_labels
)
from .bounds import diameter_bound_parts, simple_kernel_inequalities
from .report import decomposition_report

__all__ = [
    # Core and forest
    "core",
    "core_decomposition",
    "attached_forest",
    "hanging_trees",
    "cycle_vertex_count",
    "cycle_components",
    "split_cycle_components",
    # Kernels
    "kernel",
    "simple_kernel",
    "simple_kernel_of",
    "replace_kernel_edge",
    "splice_simple_kernel",
    "assemble_kernel",
    # Homeomorphic reduction
    "simple_homeo_reduction",
    "expand_homeo_reduction",
    "suppressed_labels",
    # Bounds and reports
    "diameter_bound_parts",
    "simple_kernel_inequalities",
    "decomposition_report",
]
