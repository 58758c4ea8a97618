"""
Terms of the forest / core / kernel diameter chain and the simple-kernel
size and diameter sandwich.
"""

from typing import Dict

from graphs import diameter
from models import DiameterBoundParts, LabeledGraph, NotApplicableError
from .core import core_decomposition
from .kernel import kernel, simple_kernel_of


def diameter_bound_parts(G: LabeledGraph) -> DiameterBoundParts:
    """
    ht(F(G)), diam(C(G)), diam(K(G)) and max_e(|C(e)| + 1) for a connected G
    with nonempty core. The kernel terms are None when the core is a cycle.
    """
    if not G.is_connected():
        raise NotApplicableError("diameter bound parts need a connected graph")
    decomposition = core_decomposition(G)
    if decomposition.core.is_empty:
        raise NotApplicableError("diameter bound parts need a nonempty core (G is a tree)")
    K = kernel(G)
    kernel_diameter = None
    max_path = None
    if not K.is_empty:
        kernel_diameter = diameter(K)
        max_path = max(count + 1 for count in K.internal_counts)
    return DiameterBoundParts(
        forest_height=decomposition.forest.height,
        core_diameter=diameter(decomposition.core),
        kernel_diameter=kernel_diameter,
        max_path=max_path,
        graph_diameter=diameter(G),
    )


def simple_kernel_inequalities(G: LabeledGraph) -> Dict[str, bool]:
    """e(K)/2 <= e*(K*) <= e(K) and diam(K) <= diam(K*) <= 2 diam(K) + 2"""
    K = kernel(G)
    kernel_star = simple_kernel_of(K)
    if K.is_empty:
        return {"mutable_count": kernel_star.is_empty, "diameter": kernel_star.is_empty}
    m = kernel_star.num_mutable
    diam_k = diameter(K)
    diam_star = diameter(kernel_star.graph)
    return {
        "mutable_count": K.num_edges <= 2 * m <= 2 * K.num_edges,
        "diameter": diam_k <= diam_star <= 2 * diam_k + 2,
    }
