"""
Named degree-sequence and child-sequence families swept by the experiments.

Each degree family maps a size parameter and integer params to a
DegreeSequence on labels 1..n; the child family maps to a ChildSequence on
labels 0..size-1.
"""

import math
from typing import Callable, Dict, Mapping, Sequence

import numpy as np

from degseq import sequence_from_runs
from models import ChildSequence, DegreeSequence


def sub_binary(m: int, k: int = 1) -> DegreeSequence:
    """m threes, m + 2 ones and k*m twos: degree sequences of sub-binary trees on (k+2)m + 2 vertices"""
    if m < 1 or k < 0:
        raise ValueError(f"sub-binary family needs m >= 1 and k >= 0, got m={m}, k={k}")
    return sequence_from_runs([(3, m), (1, m + 2), (2, k * m)])


def deg3seq(m: int, k: int = 1, s: int = 0) -> DegreeSequence:
    """m + s threes, m + 2 - s ones and k*m twos; surplus s"""
    if m < 1 or k < 0 or not 0 <= s <= m + 2:
        raise ValueError(f"deg3seq needs m >= 1, k >= 0 and 0 <= s <= m + 2, got m={m}, k={k}, s={s}")
    return sequence_from_runs([(3, m + s), (1, m + 2 - s), (2, k * m)])


def all_threes(n: int) -> DegreeSequence:
    if n < 4 or n % 2:
        raise ValueError(f"3-regular sequences need an even n >= 4, got {n}")
    return sequence_from_runs([(3, n)])


def mixed_three_four(n: int) -> DegreeSequence:
    """n/2 threes then n/2 fours"""
    if n < 4 or n % 4:
        raise ValueError(f"mixed (3, 4) sequences need n divisible by 4, got {n}")
    return sequence_from_runs([(3, n // 2), (4, n // 2)])


def binary_forest(size: int, roots: int = 2) -> ChildSequence:
    """
    Binary child sequence on 0..size-1 for a forest of `roots` trees.

    The (size - roots)/2 two-child vertices take the largest labels.
    """
    if roots < 1 or roots > size or (size - roots) % 2:
        raise ValueError(f"binary forest needs 1 <= roots <= size with size - roots even, got {size}, {roots}")
    internal = (size - roots) // 2
    return ChildSequence.from_mapping({v: 2 if v >= size - internal else 0 for v in range(size)})


DEGREE_FAMILIES: Dict[str, Callable[..., DegreeSequence]] = {
    "sub_binary": sub_binary,
    "deg3seq": deg3seq,
    "all_threes": all_threes,
    "mixed_three_four": mixed_three_four,
}

CHILD_FAMILIES: Dict[str, Callable[..., ChildSequence]] = {
    "binary_forest": binary_forest,
}


def degree_family(name: str, size: int, params: Mapping[str, int] = None) -> DegreeSequence:
    """
    Instantiate a degree family at one size.

    Raises ValueError for an unknown family or parameters outside its range.
    """
    if name not in DEGREE_FAMILIES:
        raise ValueError(f"Unknown degree family: {name}. Use one of {', '.join(DEGREE_FAMILIES)}")
    return DEGREE_FAMILIES[name](size, **dict(params or {}))


def child_family(name: str, size: int, params: Mapping[str, int] = None) -> ChildSequence:
    if name not in CHILD_FAMILIES:
        raise ValueError(f"Unknown child family: {name}. Use one of {', '.join(CHILD_FAMILIES)}")
    return CHILD_FAMILIES[name](size, **dict(params or {}))


def format_params(params: Mapping[str, int]) -> str:
    """Stable 'k=1;s=0' form used in CSV rows"""
    return ";".join(f"{key}={params[key]}" for key in sorted(params))


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of log y against log x"""
    if len(xs) < 2:
        return math.nan
    slope, _ = np.polyfit(np.log(np.asarray(xs, dtype=float)), np.log(np.asarray(ys, dtype=float)), 1)
    return float(slope)


def ratio_variation(ratios: Sequence[float], top: int = 3) -> float:
    """(max - min) / min over the last `top` ratios; nan for fewer than two"""
    tail = list(ratios)[-top:]
    if len(tail) < 2:
        return math.nan
    return (max(tail) - min(tail)) / min(tail)
