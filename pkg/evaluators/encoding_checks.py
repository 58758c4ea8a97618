"""
Suites for the bijective encodings: kernel codes, homeomorphic-reduction
codes, 2-regular counts and port maps of augmented cores.
"""

from collections import Counter, defaultdict
from typing import Callable, Dict, List, Optional

from decompose import cycle_vertex_count, simple_homeo_reduction, simple_kernel
from encode import (
    count_port_maps,
    core_to_port_maps,
    cycle_count_law,
    decode_given_H,
    decode_given_kernel,
    encode_given_H,
    encode_given_kernel,
    enumerate_augmented_cores,
    enumerate_homeo_codes,
    enumerate_kernel_codes,
    enumerate_two_regular,
    iter_port_maps,
    port_maps_to_core,
    suppressed_vertices,
    two_regular_count
)
from explore import build_core
from models import DegreeSequence, DiscreteDistribution, GraphClass, LabeledGraph, SimpleKernel
from parsers import SuiteConfig
from sample import enumerate_graphs
from .base import VerifySuite, degree_sequences, kernel_degree_sequences


class KernelCodeSuite(VerifySuite):
    """|C_d(K*)| = |X_d(K*)| and both round-trips are identities"""

    name = "kernel_codes"
    default_bounds = {"max_vertices": 7, "max_sum": 16}

    def __init__(self, simple_kernel_fn: Optional[Callable[[LabeledGraph], SimpleKernel]] = None):
        super().__init__()
        self.simple_kernel_fn = simple_kernel_fn or simple_kernel

    def check(self, config: SuiteConfig) -> None:
        for d in degree_sequences(self.bound(config, "max_vertices"), self.bound(config, "max_sum"),
                                  self.all_labellings(config)):
            groups: Dict[SimpleKernel, List[LabeledGraph]] = defaultdict(list)
            lengths: Dict[SimpleKernel, Counter] = defaultdict(Counter)
            for G in enumerate_graphs(d, GraphClass.CONNECTED):
                kernel_star = self.simple_kernel_fn(G)
                if not kernel_star.is_empty:
                    groups[kernel_star].append(G)
                    lengths[kernel_star][tuple(kernel_star.internal_count(e)
                                               for e in kernel_star.mutable_in_order())] += 1
            for kernel_star, graphs in groups.items():
                self.instance()
                self.check_kernel(d, kernel_star, graphs, lengths[kernel_star])
                if self.saturated:
                    return

    def check_kernel(self, d: DegreeSequence, kernel_star: SimpleKernel, graphs: List[LabeledGraph],
                     path_lengths: Counter) -> None:
        try:
            codes = enumerate_kernel_codes(d, kernel_star)
        except ValueError as error:
            self.expect(False, "enumerate-raised", degrees=d, graph=graphs[0], error=str(error))
            return
        self.expect(len(codes) == len(graphs), "count", degrees=d, graph=graphs[0],
                    graphs=len(graphs), codes=len(codes))
        # path lengths along the mutable edges have the law of the composition
        code_law = Counter(code.composition.parts for code in codes)
        self.expect(path_lengths == code_law, "path-length-law", degrees=d, graph=graphs[0])
        for G in graphs:
            try:
                ok = decode_given_kernel(encode_given_kernel(G, kernel_star), d, kernel_star) == G
            except ValueError:
                ok = False
            if not self.expect(ok, "graph-roundtrip", degrees=d, graph=G):
                return
        for code in codes:
            try:
                ok = encode_given_kernel(decode_given_kernel(code, d, kernel_star), kernel_star) == code
            except ValueError:
                ok = False
            if not self.expect(ok, "code-roundtrip", degrees=d, graph=graphs[0]):
                return


class HomeoCodeSuite(VerifySuite):
    """|G_d(H)| = |X_d(H)|, round-trips, and the joint law of cyc(G) and the path lengths"""

    name = "homeo_codes"
    default_bounds = {"max_vertices": 7, "max_sum": 16}

    def check(self, config: SuiteConfig) -> None:
        for d in degree_sequences(self.bound(config, "max_vertices"), self.bound(config, "max_sum"),
                                  self.all_labellings(config)):
            groups = defaultdict(list)
            for G in enumerate_graphs(d):
                groups[simple_homeo_reduction(G)].append(G)
            for H, graphs in groups.items():
                self.instance()
                codes = enumerate_homeo_codes(d, H)
                self.expect(len(codes) == len(graphs), "count", degrees=d, graph=graphs[0],
                            graphs=len(graphs), codes=len(codes))
                for G in graphs:
                    ok = decode_given_H(encode_given_H(G, H), d, H) == G
                    self.expect(ok, "graph-roundtrip", degrees=d, graph=G)
                for code in codes:
                    ok = encode_given_H(decode_given_H(code, d, H), H) == code
                    self.expect(ok, "code-roundtrip", degrees=d, graph=graphs[0])

                graph_law = Counter(
                    (cycle_vertex_count(G),) + tuple(simple_homeo_reduction(G).path_lengths.values())
                    for G in graphs
                )
                code_law = Counter((code.cycles.num_vertices,) + code.composition.parts for code in codes)
                self.expect(graph_law == code_law, "joint-law", degrees=d, graph=graphs[0])

                h = len(suppressed_vertices(d, H))
                observed = DiscreteDistribution.from_counts(Counter(cycle_vertex_count(G) for G in graphs))
                self.expect(observed == cycle_count_law(h, H.num_mutable), "cycle-count-law",
                            degrees=d, graph=graphs[0])
                if self.saturated:
                    return


class TwoRegularSuite(VerifySuite):
    """c_k against brute force, and the ratio c_{k+1} / c_k near k + 1"""

    name = "two_regular"
    default_bounds = {"max_k": 8, "ratio_k": 50}

    def check(self, config: SuiteConfig) -> None:
        for k in range(1, self.bound(config, "max_k") + 1):
            self.instance()
            brute = len(enumerate_graphs(DegreeSequence.from_degrees([2] * k)))
            self.expect(two_regular_count(k) == brute, "brute-force", k=k, brute=brute)
            self.expect(len(enumerate_two_regular(range(1, k + 1))) == brute, "enumerator", k=k)
        self.expect(two_regular_count(1) == 0 and two_regular_count(2) == 0, "small-k")
        k = self.bound(config, "ratio_k")
        ratio = two_regular_count(k + 1) / two_regular_count(k)
        self.expect(0.95 * (k + 1) <= ratio <= 1.05 * (k + 1), "ratio", k=k, ratio=ratio)


class PortMapSuite(VerifySuite):
    """Every core without cycle components has exactly prod d_u! augmented cores"""

    name = "port_maps"
    default_bounds = {"max_vertices": 6, "max_sum": 14}

    def check(self, config: SuiteConfig) -> None:
        for d in kernel_degree_sequences(self.bound(config, "max_vertices"), self.bound(config, "max_sum"),
                                         self.all_labellings(config)):
            self.instance()
            expected = count_port_maps(d)
            groups = defaultdict(list)
            for A in enumerate_augmented_cores(d):
                groups[build_core(A)].append(A)
            population = set(enumerate_graphs(d, GraphClass.NO_CYCLE_COMPONENTS))
            self.expect(set(groups) == population, "image", degrees=d)
            for C, cores in groups.items():
                self.expect(len(cores) == expected, "fibre-size", degrees=d, graph=C, found=len(cores))
                self.expect(len(list(iter_port_maps(C, d))) == expected, "port-map-count", degrees=d, graph=C)
                for A in cores:
                    ok = port_maps_to_core(C, d, core_to_port_maps(A)) == A
                    if not self.expect(ok, "port-map-roundtrip", degrees=d, core=A):
                        return
            if self.saturated:
                return
