"""
Suites for line-breaking, the exact height laws and stochastic dominance.
"""

from collections import Counter
from fractions import Fraction
from typing import Dict, Iterator, Tuple

from biased import (
    binary_comparison_sequence,
    binary_height_pmf,
    biased_height_law,
    conditional_dominance_report,
    enumerated_height_law,
    exact_dominance_instance,
    first_repetition_dominated_by_binary,
    max_subset_dominance,
    max_subset_law,
    representation_height_law
)
from degseq import binary_child_sequence, extend_with_singletons, iter_child_sequence_types, iter_child_sequences
from linebreak import (
    DISTINGUISHED_LEAF,
    count_first_rep_above,
    count_sequences,
    enumerate_trees,
    final_singleton,
    first_repetition,
    first_repetition_law,
    iter_multiset_sequences,
    sequence_to_tree,
    tree_to_sequence
)
from models import ChildSequence, DiscreteDistribution, MultisetSequence
from parsers import SuiteConfig
from .base import VerifySuite


def child_sequences(suite: VerifySuite, config: SuiteConfig, one_free: bool = False, leaf_zero: bool = False,
                    min_total: int = 1) -> Iterator[ChildSequence]:
    """One child sequence per type (leaves on the smallest labels), or every labelling on request"""
    top = suite.bound(config, "max_total")
    if suite.all_labellings(config):
        return iter_child_sequences(top, one_free=one_free, leaf_zero=leaf_zero, min_total=min_total)
    return iter_child_sequence_types(top, one_free=one_free, min_total=min_total)


class LineBreakingSuite(VerifySuite):
    """
    Bijectivity, |V_c|, the height encoding and the first-repetition counts.

    The bijection only looks at the order of the leaf labels, so the type
    representative with the leaves on the smallest labels stands for every
    labelling. The labelled sequences are then checked by their counts
    against the brute-force numbers of their type.
    """

    name = "line_breaking"
    default_bounds = {"max_total": 8}

    def check(self, config: SuiteConfig) -> None:
        brute_counts: Dict[Tuple[int, ...], Tuple[int, Counter]] = {}
        for c in child_sequences(self, config):
            self.instance()
            sequences = list(iter_multiset_sequences(c))
            trees = [sequence_to_tree(V, c) for V in sequences]
            self.expect(len(sequences) == count_sequences(c), "sequence-count", child_sequence=c)
            self.expect(len(set(trees)) == len(trees), "injective", child_sequence=c)
            self.expect(all(tree_to_sequence(T) == V for T, V in zip(trees, sequences)),
                        "inverse", child_sequence=c)

            repeats: Counter = Counter()
            if max(c.counts) >= 2:
                first_leaf = min(v for v, count in c.entries if count == 0)
                self.expect(
                    all(T.height_of(first_leaf) == first_repetition(V) - 1 for T, V in zip(trees, sequences)),
                    "height-encoding", child_sequence=c
                )
                repeats = Counter(first_repetition(V) for V in sequences)
                for h in range(c.total + 2):
                    brute = sum(count for r, count in repeats.items() if r > h)
                    self.expect(count_first_rep_above(c, h) == brute, "first-rep-count", child_sequence=c, h=h)
            brute_counts[tuple(sorted(c.counts))] = (len(sequences), repeats)
            if self.saturated:
                return

        if not self.all_labellings(config):
            self.check_labelled_counts(self.bound(config, "max_total"), brute_counts)

    def check_labelled_counts(self, top: int, brute_counts: Dict[Tuple[int, ...], Tuple[int, Counter]]) -> None:
        for c in iter_child_sequences(top):
            size, repeats = brute_counts[tuple(sorted(c.counts))]
            self.expect(count_sequences(c) == size, "labelled-sequence-count", child_sequence=c)
            if not repeats:
                continue
            for h in range(c.total + 2):
                brute = sum(count for r, count in repeats.items() if r > h)
                if not self.expect(count_first_rep_above(c, h) == brute, "labelled-first-rep-count",
                                   child_sequence=c, h=h):
                    return


class HeightLawSuite(VerifySuite):
    """Closed-form height laws against enumeration of every (T, P)"""

    name = "height_laws"
    default_bounds = {"max_total": 6, "max_m": 3, "max_binary": 8, "max_extended": 8}

    def check(self, config: SuiteConfig) -> None:
        self.expect(binary_height_pmf(4, 1).pmf == {1: Fraction(1, 3), 2: Fraction(2, 3)}, "pmf-4-1")
        self.expect(binary_height_pmf(4, 2).pmf == {1: Fraction(1, 4), 2: Fraction(3, 4)}, "pmf-4-2")

        for n in range(2, self.bound(config, "max_binary") + 1, 2):
            self.instance()
            heights = Counter(T.height_of(DISTINGUISHED_LEAF) for T in enumerate_trees(binary_child_sequence(n)))
            self.expect(binary_height_pmf(n, 1) == DiscreteDistribution.from_counts(heights), "binary-m1", n=n)
            for m in range(1, self.bound(config, "max_m") + 1):
                law = enumerated_height_law(binary_child_sequence(n), m)
                self.expect(binary_height_pmf(n, m) == law, "binary-enumerated", n=n, m=m)

        for c in child_sequences(self, config, one_free=True, leaf_zero=True, min_total=2):
            for m in range(1, self.bound(config, "max_m") + 1):
                self.instance()
                exact = enumerated_height_law(c, m)
                self.expect(biased_height_law(c, m) == exact, "count-formula", child_sequence=c, m=m)
                self.expect(representation_height_law(c, m) == exact, "representation", child_sequence=c, m=m)
                if c.total + m - 1 <= self.bound(config, "max_extended"):
                    self.check_extension(c, m)
                if self.saturated:
                    return

    def check_extension(self, c, m: int) -> None:
        """With c+ = (c, 1, ..., 1): r(V+) >= f(V+) iff r(V+) = r(V) + m - 1"""
        extended, extras = extend_with_singletons(c, m)
        if not extras:
            return
        extra_set = set(extras)
        for V_plus in iter_multiset_sequences(extended):
            V = MultisetSequence(tuple(v for v in V_plus if v not in extra_set))
            r_plus = first_repetition(V_plus)
            left = r_plus >= final_singleton(V_plus)
            right = r_plus == first_repetition(V) + m - 1
            if not self.expect(left == right, "extension-reduction", child_sequence=c, m=m):
                return


class DominanceSuite(VerifySuite):
    """Height laws are dominated by the binary comparison law; conditional-dominance grids"""

    name = "dominance"
    default_bounds = {"max_total": 8, "max_m": 4, "max_subset": 7, "max_pointwise": 7}

    def check(self, config: SuiteConfig) -> None:
        for c in child_sequences(self, config, one_free=True, leaf_zero=True, min_total=2):
            for m in range(1, self.bound(config, "max_m") + 1):
                self.instance()
                self.expect(exact_dominance_instance(c, m), "binary-dominance", child_sequence=c, m=m)
                self.check_conditioning(c, m)
            if c.total <= self.bound(config, "max_pointwise"):
                self.expect(first_repetition_dominated_by_binary(c), "pointwise", child_sequence=c)
            if self.saturated:
                return

        top = self.bound(config, "max_subset")
        for j in range(1, top + 1):
            for k in range(j, top + 1):
                for l in range(k, top + 1):
                    self.instance()
                    self.expect(max_subset_dominance(j, k, l), "max-subset", j=j, k=k, l=l)

    def check_conditioning(self, c, m: int) -> None:
        """Both hypotheses and the conclusion of the conditional comparison"""
        b = binary_comparison_sequence(c)
        X1 = max_subset_law(c.total + m - 1, m - 1).shift(-(m - 2))
        X2 = max_subset_law(b.total + m - 1, m - 1).shift(-(m - 2))
        report = conditional_dominance_report(X1, first_repetition_law(c), X2, first_repetition_law(b))
        self.expect(report.hypotheses_hold and report.conclusion, "conditional", child_sequence=c, m=m,
                    violations=list(report.violations))
