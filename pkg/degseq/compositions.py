"""
Compositions: counting, lexicographic enumeration and uniform sampling.
"""

from math import comb
from typing import Iterator

import numpy as np

from models import Composition


def count_compositions(m: int, h: int) -> int:
    """
    |P_{m,h}| = binomial(h + m - 1, m - 1).

    m = 0 admits only the empty composition of 0, so the count is 1 for h = 0
    and 0 (the empty set) for h > 0.
    """
    if m < 0 or h < 0:
        raise ValueError(f"count_compositions needs m >= 0 and h >= 0, got m={m}, h={h}")
    if m == 0:
        return 1 if h == 0 else 0
    return comb(h + m - 1, m - 1)


def iter_compositions(m: int, h: int) -> Iterator[Composition]:
    """All m-compositions of h in lexicographic order."""
    if m < 0 or h < 0:
        raise ValueError(f"iter_compositions needs m >= 0 and h >= 0, got m={m}, h={h}")
    for parts in _parts(m, h):
        yield Composition(parts)


def _parts(m: int, h: int):
    if m == 0:
        if h == 0:
            yield ()
        return
    if m == 1:
        yield (h,)
        return
    for first in range(h + 1):
        for rest in _parts(m - 1, h - first):
            yield (first,) + rest


def sample_composition(m: int, h: int, rng: np.random.Generator) -> Composition:
    """Uniform element of P_{m,h} by stars and bars."""
    if count_compositions(m, h) == 0:
        raise ValueError(f"there are no {m}-compositions of {h}")
    if m == 0:
        return Composition(())
    slots = h + m - 1
    bars = np.sort(rng.choice(slots, size=m - 1, replace=False)) if m > 1 else np.array([], dtype=int)
    edges = np.concatenate(([-1], bars, [slots]))
    return Composition(tuple(int(x) for x in np.diff(edges) - 1))
