"""
Configuration-model rejection sampling of simple graphs.
"""

from typing import Union

import numpy as np

from degseq import is_graphical
from models import DegreeSequence, GraphClass, LabeledGraph, RejectionCapExceeded
from .enumeration import in_class

DEFAULT_MAX_REJECTIONS = 10 ** 6


def sample_configuration_rejection(d: DegreeSequence, graph_class: Union[GraphClass, str],
                                   rng: np.random.Generator,
                                   max_rejections: int = DEFAULT_MAX_REJECTIONS) -> LabeledGraph:
    """
    Uniform graph of the class with degree sequence d.

    Half-edges are paired by a uniform permutation; every simple graph arises
    from exactly prod d_v! pairings, so redrawing loops, multi-edges and graphs
    outside the class leaves the output uniform.
    """
    if isinstance(graph_class, str):
        graph_class = GraphClass.parse(graph_class)
    if not is_graphical(d):
        raise ValueError(f"degree sequence {d} is not graphical")
    stubs = np.repeat(np.array(d.labels, dtype=np.int64), np.array(d.degrees, dtype=np.int64))
    simple = 0
    for _ in range(max_rejections):
        pairs = np.sort(rng.permutation(stubs).reshape(-1, 2), axis=1)
        if np.any(pairs[:, 0] == pairs[:, 1]):
            continue
        if len(np.unique(pairs, axis=0)) != len(pairs):
            continue
        simple += 1
        G = LabeledGraph.from_edges(((int(u), int(v)) for u, v in pairs), d.labels)
        if in_class(G, graph_class):
            return G
    raise RejectionCapExceeded("sample_configuration_rejection", max_rejections, simple)
