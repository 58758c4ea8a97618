"""
Chi-square uniformity of the exact samplers against exhaustive enumeration.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import islice
from typing import Callable, Hashable, List, Sequence, Tuple

import numpy as np
from scipy.stats import chisquare

from biased import sample_biased_pair
from degseq import binary_child_sequence, iter_compositions, iter_degree_sequence_types
from linebreak import DISTINGUISHED_LEAF, enumerate_trees
from models import DegreeSequence, GraphClass
from parsers import SuiteConfig
from sample import (
    iter_graphs,
    sample_augmented_pushforward,
    sample_configuration_rejection,
    sample_tree_prufer,
    spawn_streams
)
from .base import VerifySuite

PRUFER_CASES: List[Tuple[int, ...]] = [(1, 2, 2, 1), (1, 1, 2, 2, 2), (3, 1, 2, 1, 1)]
PUSHFORWARD_CASES: List[Tuple[int, ...]] = [(3, 3, 2, 2, 2), (3, 3, 3, 3, 2, 2)]
BIASED_PAIR_CASES: List[Tuple[int, int]] = [(4, 2)]  # (n, m) on the binary child sequence

# expected count per cell below which a chi-square test is not run
MIN_EXPECTED = 5


@dataclass
class UniformityCase:
    label: str
    subject: str
    population: List[Hashable]
    draw: Callable[[np.random.Generator], Hashable]


def chi_square_pvalue(samples: Sequence[Hashable], population: Sequence[Hashable]) -> float:
    """p-value of the observed frequencies against the uniform law on `population`"""
    counts = Counter(samples)
    observed = np.array([counts.get(x, 0) for x in population], dtype=float)
    if observed.sum() != len(samples):
        raise ValueError("sampler produced a value outside the enumerated population")
    if len(population) == 1:
        return 1.0
    return float(chisquare(observed).pvalue)


def rejection_cases(max_sum: int, samples: int) -> List[UniformityCase]:
    """
    Configuration-model rejection on every degree type with |d|_1 <= max_sum
    and every class whose population has at least two graphs and is small
    enough for `samples` draws.
    """
    cap = samples // MIN_EXPECTED
    cases = []
    for d in iter_degree_sequence_types(max_sum, max_sum):
        for graph_class in GraphClass:
            population = list(islice(iter_graphs(d, graph_class), cap + 1))
            if not 2 <= len(population) <= cap:
                continue
            cases.append(UniformityCase(
                f"reject:{graph_class.value}", str(d.degrees), population,
                lambda rng, d=d, g=graph_class: sample_configuration_rejection(d, g, rng),
            ))
    return cases


def uniformity_cases(max_sum: int, samples: int) -> List[UniformityCase]:
    cases = rejection_cases(max_sum, samples)
    for degrees in PRUFER_CASES:
        d = DegreeSequence.from_degrees(degrees)
        cases.append(UniformityCase("prufer", str(degrees), list(iter_graphs(d, GraphClass.CONNECTED)),
                                    lambda rng, d=d: sample_tree_prufer(d, rng)))
    for degrees in PUSHFORWARD_CASES:
        d = DegreeSequence.from_degrees(degrees)
        cases.append(UniformityCase("pushforward", str(degrees),
                                    list(iter_graphs(d, GraphClass.NO_CYCLE_COMPONENTS)),
                                    lambda rng, d=d: sample_augmented_pushforward(d, rng)))
    for n, m in BIASED_PAIR_CASES:
        c = binary_child_sequence(n)
        pairs = [
            (T, P)
            for T in enumerate_trees(c)
            for P in iter_compositions(m, T.height_of(DISTINGUISHED_LEAF))
        ]
        cases.append(UniformityCase("biased-pair", f"n={n} m={m}", pairs,
                                    lambda rng, c=c, m=m: sample_biased_pair(c, m, rng)))
    return cases


class SamplerUniformitySuite(VerifySuite):
    """Rejection, Prufer, augmented-core pushforward and biased (T, P) samplers are uniform"""

    name = "samplers"
    default_bounds = {"samples": 100000, "max_sum": 14, "seed": 11, "alpha_exponent": 3}

    def check(self, config: SuiteConfig) -> None:
        samples = self.bound(config, "samples")
        alpha = 10.0 ** -self.bound(config, "alpha_exponent")
        cases = uniformity_cases(self.bound(config, "max_sum"), samples)
        streams = spawn_streams(self.bound(config, "seed"), len(cases))

        for case, rng in zip(cases, streams):
            self.instance()
            drawn = [case.draw(rng) for _ in range(samples)]
            try:
                pvalue = chi_square_pvalue(drawn, case.population)
            except ValueError as error:
                self.expect(False, "support", sampler=case.label, subject=case.subject, error=str(error))
                continue
            self.expect(pvalue > alpha, "chi-square", sampler=case.label, subject=case.subject, pvalue=pvalue)
            self.note(f"{case.label} {case.subject}: {len(case.population)} outcomes, p = {pvalue:.3g}")
