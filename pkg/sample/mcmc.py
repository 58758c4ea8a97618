"""
Degree-preserving double edge swap chain.

Not an exact sampler: use it only where the exact samplers are infeasible.
"""

import math
from typing import List, Optional

import numpy as np

from degseq import is_graphical
from models import DegreeSequence, Edge, LabeledGraph, edge_key


def havel_hakimi(d: DegreeSequence) -> LabeledGraph:
    """A realization of a graphical d, joining each vertex to the highest remaining degrees"""
    if not is_graphical(d):
        raise ValueError(f"degree sequence {d} is not graphical")
    remaining = dict(d.entries)
    edges: List[Edge] = []
    while True:
        order = sorted((v for v in remaining if remaining[v] > 0), key=lambda v: (-remaining[v], v))
        if not order:
            break
        v, rest = order[0], order[1:]
        need = remaining[v]
        remaining[v] = 0
        for w in rest[:need]:
            remaining[w] -= 1
            edges.append((v, w))
    return LabeledGraph.from_edges(edges, d.labels)


def default_burnin(num_edges: int) -> int:
    """10 e ln e accepted swaps"""
    if num_edges < 2:
        return 0
    return int(math.ceil(10 * num_edges * math.log(num_edges)))


def mcmc_double_swap(G: LabeledGraph, steps: int, rng: np.random.Generator) -> LabeledGraph:
    """
    Run `steps` proposals of the double edge swap chain.

    A proposal picks two edges uv, xy and replaces them by ux, vy. It is
    rejected, leaving the graph unchanged, if ux or vy would be a loop or an
    existing edge.
    """
    edges = [tuple(e) for e in G.sorted_edges]
    present = set(edges)
    if len(edges) < 2:
        return G
    for _ in range(steps):
        i, j = rng.choice(len(edges), size=2, replace=False)
        u, v = edges[i]
        x, y = edges[j]
        if rng.random() < 0.5:
            x, y = y, x
        if u == x or v == y:
            continue
        new_a, new_b = edge_key(u, x), edge_key(v, y)
        if new_a in present or new_b in present:
            continue
        present.difference_update((edges[i], edges[j]))
        present.update((new_a, new_b))
        edges[i], edges[j] = new_a, new_b
    return LabeledGraph(G.vertices, frozenset(edges))


def mcmc_sample(d: DegreeSequence, rng: np.random.Generator, burnin: Optional[int] = None,
                start: Optional[LabeledGraph] = None) -> LabeledGraph:
    """Approximate sample: burn-in proposals from a Havel-Hakimi start (or `start`)"""
    G = start if start is not None else havel_hakimi(d)
    steps = burnin if burnin is not None else default_burnin(G.num_edges)
    return mcmc_double_swap(G, steps, rng)
