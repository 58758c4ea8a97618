"""
Decomposition suite: core, kernel, simple kernel and homeomorphic
reduction round-trips on every small connected graph.
"""

from typing import Callable, Optional

from decompose import (
    core,
    diameter_bound_parts,
    expand_homeo_reduction,
    kernel,
    simple_homeo_reduction,
    simple_kernel,
    simple_kernel_inequalities,
    splice_simple_kernel
)
from models import GraphClass, LabeledGraph, SimpleKernel
from parsers import SuiteConfig
from sample import enumerate_graphs
from .base import VerifySuite, degree_sequences

SimpleKernelFn = Callable[[LabeledGraph], SimpleKernel]


class DecompositionSuite(VerifySuite):
    """
    Degree sequences are visited by increasing vertex count, so the first
    counterexample recorded is a smallest one.
    """

    name = "decomposition"
    default_bounds = {"max_vertices": 7, "max_sum": 16}

    def __init__(self, simple_kernel_fn: Optional[SimpleKernelFn] = None):
        super().__init__()
        self.simple_kernel_fn = simple_kernel_fn or simple_kernel

    def check(self, config: SuiteConfig) -> None:
        for d in degree_sequences(self.bound(config, "max_vertices"), self.bound(config, "max_sum"),
                                  self.all_labellings(config)):
            for G in enumerate_graphs(d, GraphClass.CONNECTED):
                self.instance()
                try:
                    self.check_graph(G)
                except ValueError as error:
                    self.expect(False, "raised", graph=G, error=str(error))
                if self.saturated:
                    return

    def check_graph(self, G: LabeledGraph) -> None:
        C = core(G)
        self.expect(core(C) == C, "core-idempotent", graph=G)
        if C.is_empty:
            return
        parts = diameter_bound_parts(G)
        self.expect(parts.holds(), "diameter-chain", graph=G)

        kernel_star = self.simple_kernel_fn(G)
        if C != G or G.surplus() >= 2:
            self.expect(splice_simple_kernel(kernel_star) == C, "simple-kernel-splice", graph=G)
        if G.surplus() >= 2:
            self.expect(kernel(G) == kernel(C), "kernel-of-core", graph=G)
        self.expect(all(simple_kernel_inequalities(G).values()), "simple-kernel-bounds", graph=G)

        H = simple_homeo_reduction(G, kernel_star)
        self.expect(expand_homeo_reduction(H) == G, "homeo-roundtrip", graph=G)
