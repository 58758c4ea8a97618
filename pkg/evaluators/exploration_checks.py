"""
Suites for breadth-first exploration and path switchings on enumerated
augmented cores.
"""

from explore import (
    EVENTS,
    build_core,
    build_kernel,
    explore_until,
    explored_vertices,
    free_pair_violations,
    is_valid_pair,
    oriented_edges,
    reversal,
    equivalent,
    switch,
    switching_count_check
)
from encode import enumerate_augmented_cores
from graphs import bfs_distances
from parsers import SuiteConfig
from .base import VerifySuite, kernel_degree_sequences


class ExplorationSuite(VerifySuite):
    """Replays are identical, the queue balance holds and the start's component is exhausted"""

    name = "exploration"
    default_bounds = {"max_vertices": 5, "max_sum": 12}

    def check(self, config: SuiteConfig) -> None:
        for d in kernel_degree_sequences(self.bound(config, "max_vertices"), self.bound(config, "max_sum"),
                                         self.all_labellings(config)):
            for A in enumerate_augmented_cores(d):
                self.instance()
                for start in A.kernel_vertices:
                    final, rows = explore_until(A, start, lambda s: False)
                    again, rows_again = explore_until(A, start, lambda s: False)
                    self.expect(final == again and rows == rows_again, "deterministic", core=A, start=start)

                    discovered = [v for v in explored_vertices(final) if v != start]
                    back_edges = sum(1 for row in rows if row.back_edge)
                    balance = sum(d.degree(v) - 2 for v in discovered) - 2 * back_edges
                    self.expect(rows[-1].queue_size - rows[0].queue_size == balance, "queue-balance",
                                core=A, start=start)

                    component = set(bfs_distances(build_kernel(A), start))
                    self.expect(set(explored_vertices(final)) == component, "exhausts-component",
                                core=A, start=start)
                if self.saturated:
                    return


class SwitchingSuite(VerifySuite):
    """
    Valid switchings preserve degrees and are undone by their reversal;
    free pairs always switch; the double count of switchings balances.
    """

    name = "switching"
    default_bounds = {"max_vertices": 5, "max_sum": 10, "max_t": 3}

    def check(self, config: SuiteConfig) -> None:
        for d in kernel_degree_sequences(self.bound(config, "max_vertices"), self.bound(config, "max_sum"),
                                         self.all_labellings(config)):
            cores = enumerate_augmented_cores(d)
            for A in cores:
                self.instance()
                self.check_core(A)
                if self.saturated:
                    return
            if not cores:
                continue
            start = cores[0].kernel_vertices[0]
            for t in range(self.bound(config, "max_t") + 1):
                for event in EVENTS:
                    report = switching_count_check(d, start, t, cores, event)
                    self.expect(report.passed, "double-count", degrees=d, t=t, event=event,
                                forward=report.forward_switchings, backward=report.backward_switchings,
                                lower=report.lower_bound_failures, upper=report.upper_bound_failures,
                                ratio=report.ratio_failures)
            if self.saturated:
                return

    def check_core(self, A) -> None:
        degrees = build_core(A).degree_sequence()
        edges = list(oriented_edges(A))
        for e in edges:
            for f in edges:
                if not is_valid_pair(A, e, f):
                    continue
                switched = switch(A, e, f)
                self.expect(build_core(switched).degree_sequence() == degrees, "degrees", core=A)
                self.expect(switch(switched, *reversal(e, f)) == A, "reversal", core=A)
                self.expect(switch(A, *equivalent(e, f)) == switched, "equivalent", core=A)
                if self.saturated:
                    return
        self.expect(not free_pair_violations(A), "free-pairs", core=A)
