"""
Suites for compositions, graphicality and graph distances.
"""

import numpy as np

from degseq import count_compositions, is_graphical, iter_compositions, sequence_from_runs
from graphs import diameter, diameter_all_pairs, diameter_plus, edge_ball
from models import GraphClass
from parsers import SuiteConfig
from sample import enumerate_graphs, sample_configuration_rejection
from .base import VerifySuite, degree_sequences


class CompositionSuite(VerifySuite):
    """The composition enumerator agrees with the closed-form count"""

    name = "compositions"
    default_bounds = {"max_product": 200}

    def check(self, config: SuiteConfig) -> None:
        limit = self.bound(config, "max_product")
        for m in range(1, limit + 1):
            for h in range(0, limit // m + 1):
                if m * h > limit:
                    break
                self.instance()
                found = list(iter_compositions(m, h))
                self.expect(len(found) == count_compositions(m, h), "count", m=m, h=h)
                self.expect(len(set(found)) == len(found), "distinct", m=m, h=h)
                self.expect(all(P.total == h and P.m == m for P in found), "sums", m=m, h=h)
                if self.saturated:
                    return


class GraphicalSuite(VerifySuite):
    """Erdos-Gallai agrees with exhaustive realization search"""

    name = "graphical"
    default_bounds = {"max_vertices": 7, "max_sum": 16}

    def check(self, config: SuiteConfig) -> None:
        for d in degree_sequences(self.bound(config, "max_vertices"), self.bound(config, "max_sum"),
                                  self.all_labellings(config)):
            self.instance()
            realizable = bool(enumerate_graphs(d))
            self.expect(realizable == is_graphical(d), "graphical", degrees=d)
            if self.saturated:
                return


class DistanceSuite(VerifySuite):
    """BFS and all-pairs diameters agree; diam <= diam+; edge balls grow with r"""

    name = "distances"
    default_bounds = {"samples": 40, "max_vertices": 60, "seed": 7}

    def check(self, config: SuiteConfig) -> None:
        rng = np.random.default_rng(self.bound(config, "seed"))
        top = self.bound(config, "max_vertices")
        for _ in range(self.bound(config, "samples")):
            n = int(rng.integers(4, top // 2 + 1)) * 2
            d = sequence_from_runs([(3, n // 2), (1, n // 2)])
            G = sample_configuration_rejection(d, GraphClass.ALL, rng)
            self.instance()
            self.expect(diameter(G) == diameter_all_pairs(G), "all-pairs", graph=G)
            plus = diameter_plus(G)
            self.expect(diameter(G) <= plus, "diam-plus", graph=G)
            self.expect((plus == diameter(G)) == G.is_connected(), "diam-plus-equality", graph=G)
            start = [min(G.vertices)]
            balls = [edge_ball(G, start, r) for r in range(4)]
            self.expect(all(a <= b for a, b in zip(balls, balls[1:])), "ball-monotone", graph=G)
            if self.saturated:
                return
