"""
Building cores and kernels from augmented cores, and sampling augmented
cores uniformly.
"""

from typing import List

import numpy as np

from decompose import assemble_kernel
from degseq import sample_composition
from models import (
    AugmentedCore,
    CoreRecord,
    DegreeSequence,
    Edge,
    HalfEdge,
    LabeledGraph,
    MultiGraph,
    RejectionCapExceeded,
    validate_records
)

DEFAULT_MAX_REJECTIONS = 10 ** 6


def build_core(A: AugmentedCore) -> LabeledGraph:
    """C(A): one path per record, from its first half-edge's vertex to its second's"""
    edges: List[Edge] = []
    for record in A.records:
        chain = (record.first.vertex,) + record.internal + (record.second.vertex,)
        edges.extend(zip(chain, chain[1:]))
    return LabeledGraph.from_edges(edges, A.degree_seq.labels)


def build_kernel(A: AugmentedCore) -> MultiGraph:
    """K(A): one edge per matched pair, carrying the record's internal sequence"""
    return assemble_kernel(
        A.kernel_vertices,
        ((record.vertex_pair, record.internal) for record in A.records),
    )


def check_core_degrees(d: DegreeSequence) -> None:
    """Degrees must be 2 or at least 3, with some vertex of degree at least 3"""
    if any(degree < 2 for _, degree in d.entries):
        raise ValueError("augmented cores need every degree to be at least 2")
    if not any(degree >= 3 for _, degree in d.entries):
        raise ValueError("augmented cores need a vertex of degree at least 3")


def sample_uniform_augmented_core(d: DegreeSequence, rng: np.random.Generator,
                                  max_rejections: int = DEFAULT_MAX_REJECTIONS) -> AugmentedCore:
    """
    Uniform element of A_d by rejection.

    A uniform perfect matching of the kernel half-edges and a uniform ordered
    distribution of the degree-2 labels over its pairs give every candidate
    the same probability; candidates whose core is not simple are redrawn.
    """
    check_core_degrees(d)
    half_edges = [HalfEdge(v, i) for v, degree in d.entries if degree >= 3 for i in range(1, degree + 1)]
    two_labels = np.array([v for v, degree in d.entries if degree == 2], dtype=np.int64)
    m = len(half_edges) // 2

    for _ in range(max_rejections):
        order = rng.permutation(len(half_edges))
        labels = [int(v) for v in rng.permutation(two_labels)]
        P = sample_composition(m, len(labels), rng)
        sums = P.prefix_sums()
        records = tuple(
            CoreRecord.of(half_edges[order[2 * r]], half_edges[order[2 * r + 1]], labels[sums[r]:sums[r + 1]])
            for r in range(m)
        )
        if validate_records(d, records) is None:
            return AugmentedCore(d, records)
    raise RejectionCapExceeded("sample_uniform_augmented_core", max_rejections)
