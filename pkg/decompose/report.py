"""
Structured decomposition document for one graph.
"""

from graphs import INFINITY, diameter, diameter_plus
from models import (
    DecompositionReportDict,
    DiameterBoundDict,
    ForestTreeDict,
    KernelEdgeDict,
    LabeledGraph,
    NotApplicableError,
    SimpleKernelEdgeDict
)
from .bounds import diameter_bound_parts
from .core import core_decomposition, cycle_vertex_count
from .homeo import simple_homeo_reduction
from .kernel import kernel, simple_kernel_of


def decomposition_report(G: LabeledGraph) -> DecompositionReportDict:
    decomposition = core_decomposition(G)
    forest = decomposition.forest
    K = kernel(G)
    kernel_star = simple_kernel_of(K)
    H = simple_homeo_reduction(G, kernel_star)

    trees = []
    for root in forest.roots:
        members = forest.tree_vertices(root)
        trees.append(ForestTreeDict(
            root=root,
            vertices=sorted(members),
            height=max(forest.height_of(v) for v in members),
        ))

    kernel_edges = [
        KernelEdgeDict(lower=u, upper=v, internal=list(K.paths[i]), internal_count=len(K.paths[i]))
        for i, (u, v) in enumerate(K.endpoints)
    ]
    simple_edges = [
        SimpleKernelEdgeDict(
            lower=u,
            upper=v,
            mutable=(u, v) in kernel_star.mutable_edges,
            internal=list(kernel_star.path_map.get((u, v), ())),
        )
        for u, v in kernel_star.graph.sorted_edges
    ]

    bound = None
    try:
        parts = diameter_bound_parts(G)
        bound = DiameterBoundDict(
            forest_height=parts.forest_height,
            core_diameter=parts.core_diameter,
            kernel_diameter=parts.kernel_diameter,
            max_path=parts.max_path,
            graph_diameter=parts.graph_diameter,
            core_bound=parts.core_bound(),
            kernel_bound=parts.kernel_bound(),
        )
    except NotApplicableError:
        pass

    plus = diameter_plus(G)
    return DecompositionReportDict(
        vertices=G.num_vertices,
        edges=G.num_edges,
        surplus=G.surplus(),
        diameter=diameter(G),
        diameter_plus=None if plus == INFINITY else int(plus),
        core_vertices=list(decomposition.core.sorted_vertices),
        removed_leaves=sorted(decomposition.removed_leaves),
        forest=trees,
        kernel_edges=kernel_edges,
        simple_kernel_edges=simple_edges,
        homeo_mutable_lengths=[[u, v, n] for (u, v), n in H.path_lengths.items()],
        cycle_vertices=cycle_vertex_count(G),
        bound=bound,
    )
