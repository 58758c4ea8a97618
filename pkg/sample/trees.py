"""
Uniform labelled trees with prescribed degrees via Prufer sequences.
"""

import heapq
from typing import List, Sequence, Tuple

import numpy as np

from models import DegreeSequence, Edge, LabeledGraph


def _check_tree_degrees(d: DegreeSequence) -> None:
    n = d.num_vertices
    if n < 2:
        raise ValueError("a tree with prescribed degrees needs at least two vertices")
    if d.degree_sum != 2 * (n - 1):
        raise ValueError(f"degrees sum to {d.degree_sum}, a tree on {n} vertices needs {2 * (n - 1)}")


def prufer_to_edges(labels: Sequence[int], sequence: Sequence[int]) -> List[Edge]:
    """Decode a Prufer sequence over the given labels"""
    remaining = {v: 1 for v in labels}
    for v in sequence:
        remaining[v] += 1
    leaves = [v for v in labels if remaining[v] == 1]
    heapq.heapify(leaves)
    edges: List[Edge] = []
    for v in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        remaining[v] -= 1
        if remaining[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return edges


def sample_tree_prufer(d: DegreeSequence, rng: np.random.Generator) -> LabeledGraph:
    """Uniform tree with degrees d: a uniform arrangement of {v repeated d_v - 1}"""
    _check_tree_degrees(d)
    multiset = np.repeat(np.array(d.labels, dtype=np.int64), np.array(d.degrees, dtype=np.int64) - 1)
    sequence: Tuple[int, ...] = tuple(int(v) for v in rng.permutation(multiset))
    return LabeledGraph.from_edges(prufer_to_edges(d.labels, sequence), d.labels)
