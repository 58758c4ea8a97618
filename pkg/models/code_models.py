"""
Data models for bijective codes and exact discrete laws.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, Mapping, Tuple, Union

from .graph_models import LabeledGraph, RootedForest
from .sequence_models import Composition

Number = Union[int, Fraction]


@dataclass(frozen=True)
class KernelCodeTriple:
    """(F, T, P): forest rooted at V(K*), tree holding leaf 0, composition of ht_T(0)"""
    forest: RootedForest
    tree: RootedForest
    composition: Composition


@dataclass(frozen=True)
class HomeoCodeTriple:
    """(C, sigma, P): cycle components, placement of suppressed labels, composition"""
    cycles: LabeledGraph
    placement: Tuple[int, ...]  # sigma(1), ..., sigma(h - v(C))
    composition: Composition

    def placement_positions(self, suppressed: Iterable[int]) -> Tuple[int, ...]:
        """The placement expressed on positions 1..h of the sorted suppressed labels"""
        index = {label: i for i, label in enumerate(sorted(suppressed), start=1)}
        return tuple(index[label] for label in self.placement)


@dataclass(frozen=True)
class DiscreteDistribution:
    """Finitely supported law with exact rational masses"""
    masses: Tuple[Tuple[int, Fraction], ...]  # sorted (value, probability), all positive

    def __post_init__(self):
        if isinstance(self.masses, Mapping):
            items = self.masses.items()
        else:
            items = self.masses
        merged: Dict[int, Fraction] = {}
        for value, mass in items:
            merged[int(value)] = merged.get(int(value), Fraction(0)) + Fraction(mass)
        masses = tuple(sorted((v, p) for v, p in merged.items() if p != 0))
        if any(p < 0 for _, p in masses):
            raise ValueError("probabilities must be non-negative")
        if sum(p for _, p in masses) != 1:
            raise ValueError(f"masses sum to {sum(p for _, p in masses)}, not 1")
        object.__setattr__(self, "masses", masses)

    @classmethod
    def from_weights(cls, weights: Mapping[int, Number]) -> "DiscreteDistribution":
        """Normalize non-negative weights into a law"""
        total = sum(Fraction(w) for w in weights.values())
        if total <= 0:
            raise ValueError("weights have zero total mass")
        return cls(tuple((v, Fraction(w) / total) for v, w in weights.items() if w))

    from_counts = from_weights

    @classmethod
    def point_mass(cls, value: int) -> "DiscreteDistribution":
        return cls(((value, Fraction(1)),))

    @cached_property
    def pmf(self) -> Dict[int, Fraction]:
        return dict(self.masses)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(v for v, _ in self.masses)

    def probability(self, value: int) -> Fraction:
        return self.pmf.get(value, Fraction(0))

    def cdf(self, t: int) -> Fraction:
        """P(X <= t)"""
        return sum((p for v, p in self.masses if v <= t), Fraction(0))

    def tail(self, t: Number) -> Fraction:
        """P(X >= t)"""
        return sum((p for v, p in self.masses if v >= t), Fraction(0))

    def mean(self) -> Fraction:
        return sum((v * p for v, p in self.masses), Fraction(0))

    def shift(self, k: int) -> "DiscreteDistribution":
        """Law of X + k"""
        return DiscreteDistribution(tuple((v + k, p) for v, p in self.masses))

    def condition_at_least(self, a: Number) -> "DiscreteDistribution":
        """Law of (X | X >= a)"""
        return self._condition(lambda v: v >= a, f">= {a}")

    def condition_at_most(self, a: Number) -> "DiscreteDistribution":
        """Law of (X | X <= a)"""
        return self._condition(lambda v: v <= a, f"<= {a}")

    def _condition(self, keep, description: str) -> "DiscreteDistribution":
        kept = {v: p for v, p in self.masses if keep(v)}
        if not kept:
            raise ValueError(f"conditioning event X {description} has probability 0")
        return DiscreteDistribution.from_weights(kept)

    def as_float_dict(self) -> Dict[int, float]:
        return {v: float(p) for v, p in self.masses}


@dataclass
class DominanceReport:
    """Hypotheses and conclusion of a conditional stochastic-dominance comparison"""
    lower_hypothesis: bool  # (X1 | X1 <= x) precedes (X2 | X2 <= x) for every x
    upper_hypothesis: bool  # (Y1 | Y1 >= y) precedes (Y2 | Y2 >= y) for every y
    conclusion: bool  # (Y1 | Y1 >= X1) precedes (Y2 | Y2 >= X2)
    violations: Tuple[str, ...] = ()

    @property
    def hypotheses_hold(self) -> bool:
        return self.lower_hypothesis and self.upper_hypothesis

    @property
    def consistent(self) -> bool:
        """False only when the hypotheses hold and the conclusion fails"""
        return self.conclusion or not self.hypotheses_hold
