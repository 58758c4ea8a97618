from __future__ import annotations

import pytest

from decompose import core, kernel, replace_kernel_edge, simple_kernel, simple_kernel_of, splice_simple_kernel
from evaluators import (
    CompositionSuite,
    DecompositionSuite,
    DistanceSuite,
    GraphicalSuite,
    HomeoCodeSuite,
    KernelCodeSuite,
    LineBreakingSuite,
    SamplerUniformitySuite,
    TwoRegularSuite,
    UnifiedChecker,
    VerifySuite,
    chi_square_pvalue,
    degree_sequences,
    kernel_degree_sequences,
    serialize,
    uniformity_cases
)
from models import DegreeSequence, LabeledGraph, SimpleKernel, VerificationFailure, edge_key
from parsers import SuiteConfig, VerifyConfig
from sample import enumerate_graphs

# every connected graph on at most four vertices
SMALL = {"max_vertices": 4, "max_sum": 12}


def faulty_replace(u, v, internal, multiplicity):
    """Loop rule that hangs the path on u-p1 instead of p1-pk"""
    if u == v:
        p1, pk = internal[0], internal[-1]
        return [
            (edge_key(u, p1), True, tuple(internal[1:-1])),
            (edge_key(u, pk), False, ()),
            (edge_key(p1, pk), False, ()),
        ]
    return replace_kernel_edge(u, v, internal, multiplicity)


def faulty_simple_kernel(G: LabeledGraph) -> SimpleKernel:
    return simple_kernel_of(kernel(G), faulty_replace)


class AlwaysFails(VerifySuite):
    name = "always_fails"
    default_bounds = {"count": 3}

    def check(self, config):
        for i in range(self.bound(config, "count")):
            self.instance()
            self.expect(False, "never", i=i)
            if self.saturated:
                return


def test_serialize_lab_objects():
    G = LabeledGraph.from_edges([(2, 1), (2, 3)])
    assert serialize(G) == {"vertices": [1, 2, 3], "edges": [[1, 2], [2, 3]]}
    assert serialize(DegreeSequence.from_degrees([1, 1])) == {"1": 1, "2": 1}
    assert serialize({"graphs": (G,)})["graphs"][0]["edges"] == [[1, 2], [2, 3]]


def test_kernel_degree_sequences():
    sequences = kernel_degree_sequences(4, 12)
    assert DegreeSequence.from_degrees([3, 3, 3, 3]) in sequences
    assert all(min(d.degrees) >= 2 and max(d.degrees) >= 3 for d in sequences)


def test_suite_stops_at_max_failures():
    result = AlwaysFails().run(SuiteConfig(bounds={"count": 5}))
    assert not result.passed
    assert result.instances == 1
    assert result.failures == [{"check": "never", "i": 0}]
    wider = AlwaysFails().run(SuiteConfig(bounds={"count": 5, "max_failures": 10}))
    assert wider.instances == 5
    assert len(wider.failures) == 5


@pytest.mark.parametrize("suite, bounds", [
    (CompositionSuite(), {"max_product": 30}),
    (GraphicalSuite(), {"max_vertices": 5, "max_sum": 10}),
    (TwoRegularSuite(), {"max_k": 6, "ratio_k": 50}),
    (LineBreakingSuite(), {"max_total": 4}),
    (DecompositionSuite(), SMALL),
])
def test_small_suites_pass(suite, bounds):
    result = suite.run(SuiteConfig(bounds=bounds))
    assert result.passed, result.failures
    assert result.instances > 0
    assert result.checks >= result.instances


def test_faulty_loop_rule_is_caught():
    # a 4-cycle through a degree-3 vertex with a pendant leaf, degrees (3, 2, 2, 2, 1)
    G = LabeledGraph.from_edges([(1, 2), (2, 3), (3, 4), (4, 1), (1, 5)])
    assert splice_simple_kernel(simple_kernel(G)) == core(G)
    assert splice_simple_kernel(faulty_simple_kernel(G)) != core(G)
    result = DecompositionSuite(simple_kernel_fn=faulty_simple_kernel).run(
        SuiteConfig(bounds={"max_vertices": 5, "max_sum": 10, "max_failures": 10 ** 4})
    )
    assert not result.passed
    assert "simple-kernel-splice" in {failure["check"] for failure in result.failures}


def test_chi_square_pvalue():
    population = enumerate_graphs(DegreeSequence.from_degrees([1, 2, 2, 1]))
    assert chi_square_pvalue(population * 50, population) == pytest.approx(1.0)
    assert chi_square_pvalue(population[:1] * 3, population[:1]) == 1.0
    with pytest.raises(ValueError, match="outside"):
        chi_square_pvalue([LabeledGraph.from_edges([(1, 2)])], population)


def test_unified_checker_selects_suites():
    config = VerifyConfig(suites={
        "compositions": SuiteConfig(bounds={"max_product": 10}),
        "graphical": SuiteConfig(enabled=False),
    })
    checker = UnifiedChecker(config, suites=[CompositionSuite(), GraphicalSuite()])
    report = checker.run(progress=False)
    assert [s.name for s in report.suites] == ["compositions"]
    assert report.passed
    report = checker.run(only=["graphical"], progress=False)
    assert [s.name for s in report.suites] == ["graphical"]


def test_unified_checker_default_order_and_opt_in():
    checker = UnifiedChecker()
    assert checker.suite_names[0] == "compositions"
    assert "samplers" in checker.suite_names
    assert not checker.is_enabled("samplers")
    assert checker.is_enabled("switching")
    opted = UnifiedChecker(VerifyConfig(suites={"samplers": SuiteConfig(enabled=True)}))
    assert opted.is_enabled("samplers")


def test_unified_checker_unknown_suite():
    with pytest.raises(ValueError, match="Unknown verify suite"):
        UnifiedChecker().run(only=["nope"], progress=False)


def test_unified_checker_fail_fast():
    checker = UnifiedChecker(suites=[AlwaysFails(), CompositionSuite()])
    with pytest.raises(VerificationFailure) as excinfo:
        checker.run(fail_fast=True, progress=False)
    assert excinfo.value.suite == "always_fails"
    assert excinfo.value.counterexample == {"check": "never", "i": 0}


def test_unified_checker_passes_faulty_kernel_to_its_suites():
    checker = UnifiedChecker(
        VerifyConfig(suites={"decomposition": SuiteConfig(bounds={"max_vertices": 5, "max_sum": 10,
                                                                   "max_failures": 10 ** 4})}),
        simple_kernel_fn=faulty_simple_kernel,
    )
    report = checker.run(only=["decomposition"], progress=False)
    assert not report.passed
    assert report.first_failure.name == "decomposition"


@pytest.mark.slow
def test_distance_suite_on_sampled_cubic_graphs():
    result = DistanceSuite().run(SuiteConfig(bounds={"samples": 10, "max_vertices": 30}))
    assert result.passed, result.failures
    assert result.instances == 10


def test_degree_sequences_visit_two_labellings_per_type():
    visited = list(degree_sequences(4, 8))
    assert DegreeSequence.from_degrees([2, 2, 1, 1]) in visited
    assert DegreeSequence.from_degrees([1, 1, 2, 2]) in visited
    assert DegreeSequence.from_degrees([2, 1, 2, 1]) not in visited
    assert visited.count(DegreeSequence.from_degrees([2, 2, 2])) == 1
    assert DegreeSequence.from_degrees([2, 1, 2, 1]) in degree_sequences(4, 8, all_labellings=True)


def test_line_breaking_types_agree_with_every_labelling():
    by_type = LineBreakingSuite().run(SuiteConfig(bounds={"max_total": 5}))
    labelled = LineBreakingSuite().run(SuiteConfig(bounds={"max_total": 5, "all_labellings": 1}))
    assert by_type.passed, by_type.failures
    assert labelled.passed, labelled.failures
    assert by_type.instances < labelled.instances
    # per-type enumeration plus a count check for every labelled sequence
    assert by_type.checks > 4 * by_type.instances


@pytest.mark.parametrize("suite", [KernelCodeSuite(), HomeoCodeSuite()])
def test_code_suites_pass_on_small_sequences(suite):
    result = suite.run(SuiteConfig(bounds={"max_vertices": 5, "max_sum": 10}))
    assert result.passed, result.failures
    assert result.instances > 0


def test_kernel_code_suite_checks_path_length_law():
    result = KernelCodeSuite().run(SuiteConfig(bounds={"max_vertices": 5, "max_sum": 10}))
    # count, path-length law and at least one round trip per simple kernel
    assert result.checks >= 3 * result.instances


def test_uniformity_cases():
    cases = uniformity_cases(max_sum=8, samples=1000)
    labels = {case.label for case in cases}
    assert {"reject:all", "reject:connected", "prufer", "pushforward", "biased-pair"} <= labels
    four_cycles = [c for c in cases if c.label == "reject:all" and c.subject == "(2, 2, 2, 2)"]
    assert len(four_cycles) == 1 and len(four_cycles[0].population) == 3
    (pairs,) = [c for c in cases if c.label == "biased-pair"]
    assert len(pairs.population) == 16
    assert all(2 <= len(c.population) <= 200 for c in cases if c.label.startswith("reject"))


@pytest.mark.slow
def test_samplers_are_uniform_at_full_sample_size():
    config = SuiteConfig(bounds={"samples": 10 ** 5, "max_sum": 6})
    result = SamplerUniformitySuite().run(config)
    assert result.passed, result.failures
    assert result.instances == len(uniformity_cases(6, 10 ** 5))


@pytest.mark.slow
@pytest.mark.parametrize("suite", [LineBreakingSuite(), KernelCodeSuite(), HomeoCodeSuite(), DecompositionSuite()])
def test_exhaustive_suites_at_default_bounds(suite):
    result = suite.run()
    assert result.passed, result.failures
