"""
Samplers for composition-biased trees and the Monte Carlo tail checks.
"""

import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.special import gammaln

from degseq import binary_child_sequence, count_compositions, sample_composition
from linebreak import sample_forest, sample_tree
from models import ChildSequence, Composition, RejectionCapExceeded, RootedForest, TailCheckResult
from .laws import DISTINGUISHED_LEAF, require_leaf_sequence, binary_height_pmf

DEFAULT_MAX_REJECTIONS = 10 ** 7


def sample_biased_pair(c: ChildSequence, m: int, rng: np.random.Generator,
                       max_rejections: int = DEFAULT_MAX_REJECTIONS) -> Tuple[RootedForest, Composition]:
    """
    (T, P) uniform over T in T_c and P in P_{m, ht_T(0)}, for 1-free c.

    T is drawn uniformly and kept with probability |P_{m,h}| / |P_{m,n/2}|,
    which is at most 1 because a 1-free tree has ht(0) <= n/2.
    """
    require_leaf_sequence(c)
    if not c.is_one_free:
        raise ValueError("composition-biased sampling needs a 1-free child sequence")
    ceiling = count_compositions(m, c.total // 2)
    for _ in range(max_rejections):
        tree = sample_tree(c, rng)
        h = tree.height_of(DISTINGUISHED_LEAF)
        if rng.random() < float(Fraction(count_compositions(m, h), ceiling)):
            return tree, sample_composition(m, h, rng)
    raise RejectionCapExceeded("sample_biased_pair", max_rejections)


def binary_height_probabilities(n: int, m: int) -> Tuple[np.ndarray, np.ndarray]:
    """Floating-point heights and probabilities of the biased binary law, via log-weights"""
    if n < 2 or n % 2:
        raise ValueError(f"binary height law needs an even n >= 2, got {n}")
    heights = np.arange(1, n // 2 + 1)
    i = np.arange(1, n // 2)
    survival = np.concatenate(([0.0], np.cumsum(np.log1p(-i / (n - i)))))
    log_weights = (
        gammaln(heights + m) - gammaln(heights + 1)
        + np.log(heights) - np.log(n - heights)
        + survival
    )
    probs = np.exp(log_weights - log_weights.max())
    return heights, probs / probs.sum()


def sample_biased_heights(n: int, m: int, samples: int, rng: np.random.Generator) -> np.ndarray:
    """i.i.d. draws of ht_S(0) for the biased binary tree on [0, n]"""
    heights, probs = binary_height_probabilities(n, m)
    return rng.choice(heights, size=samples, p=probs)


def tail_threshold(n: int, m: int, x: float) -> float:
    return 2 * math.sqrt(m * n) + x * math.sqrt(n)


def tail_bound(x: float) -> float:
    """exp(-x^2 / 3 + 4)"""
    return math.exp(-x * x / 3 + 4)


def tail_bound_check(n: int, m: int, x: float, samples: int, rng: np.random.Generator,
                     sampler: str = "exact", seed: Optional[int] = None,
                     max_rejections: int = DEFAULT_MAX_REJECTIONS) -> TailCheckResult:
    """
    Empirical P(h >= 2 sqrt(mn) + x sqrt(n)) for the biased binary tree on
    n + parity(n) vertices, against exp(-x^2/3 + 4). Requires n >= 64m.

    sampler "exact" draws heights from the law itself; "rejection" runs
    sample_biased_pair and is only practical for small n.
    """
    if n < 64 * m:
        raise ValueError(f"tail bound needs n >= 64m, got n={n}, m={m}")
    size = n + n % 2
    threshold = tail_threshold(n, m, x)
    if sampler == "exact":
        heights = sample_biased_heights(size, m, samples, rng)
    elif sampler == "rejection":
        c = binary_child_sequence(size)
        heights = np.array([
            sample_biased_pair(c, m, rng, max_rejections)[0].height_of(DISTINGUISHED_LEAF)
            for _ in range(samples)
        ])
    else:
        raise ValueError(f"Unknown tail sampler: {sampler}. Use 'exact' or 'rejection'")

    support, probs = binary_height_probabilities(size, m)
    hits = heights >= threshold
    p = float(hits.mean())
    return TailCheckResult(
        kind="biased-height",
        n=n,
        m=m,
        x=x,
        threshold=threshold,
        empirical_tail=p,
        stderr=math.sqrt(p * (1 - p) / samples),
        analytic_bound=tail_bound(x),
        samples=samples,
        seed=seed if seed is not None else 0,
        model_tail=float(probs[support >= threshold].sum()),
    )


def forest_tail_bound(x: float) -> float:
    """4 exp(-x^2 / 256)"""
    return 4 * math.exp(-x * x / 256)


def forest_tail_check(c: ChildSequence, x: float, samples: int, rng: np.random.Generator,
                      seed: Optional[int] = None) -> TailCheckResult:
    """Empirical P(ht(F) > x sqrt(|S|)) for F uniform with 1-free child sequence c"""
    return forest_tail_sweep(c, [x], samples, rng, seed)[0]


def forest_tail_sweep(c: ChildSequence, xs: Sequence[float], samples: int, rng: np.random.Generator,
                      seed: Optional[int] = None) -> List[TailCheckResult]:
    """forest_tail_check at every x, sharing one batch of forests"""
    if not c.is_one_free:
        raise ValueError("forest tail check needs a 1-free child sequence")
    size = c.num_vertices
    heights = np.array([sample_forest(c, rng).height for _ in range(samples)])
    results = []
    for x in xs:
        threshold = x * math.sqrt(size)
        p = float((heights > threshold).mean())
        results.append(TailCheckResult(
            kind="forest-height",
            n=size,
            m=c.num_roots,
            x=x,
            threshold=threshold,
            empirical_tail=p,
            stderr=math.sqrt(p * (1 - p) / samples),
            analytic_bound=forest_tail_bound(x),
            samples=samples,
            seed=seed if seed is not None else 0,
        ))
    return results


def standardized_heights(heights, n: int, m: int, bins: int = 20) -> Tuple[np.ndarray, np.ndarray]:
    """Histogram (counts, edges) of (n/2)^(-1/2) (h - sqrt(mn)); reported, never asserted"""
    values = (np.asarray(heights, dtype=float) - math.sqrt(m * n)) / math.sqrt(n / 2)
    return np.histogram(values, bins=bins)


def binary_tail_exact(n: int, m: int, x: float) -> Fraction:
    """Exact tail of the biased binary law at the tail-check threshold (small n)"""
    return binary_height_pmf(n, m).tail(tail_threshold(n, m, x))
