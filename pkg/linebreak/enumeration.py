"""
Exhaustive enumerators and uniform samplers for multiset sequences, trees
and forests with a prescribed child sequence.
"""

from typing import Dict, Iterable, Iterator, List, Tuple

import numpy as np

from models import ChildSequence, MultisetSequence, RootedForest
from .bijection import sequence_to_tree


def _distinct_permutations(counts: Dict[int, int], length: int) -> Iterator[Tuple[int, ...]]:
    """Lexicographic distinct arrangements of a multiset given by counts"""
    labels = sorted(label for label, count in counts.items() if count > 0)
    current: List[int] = []

    def extend() -> Iterator[Tuple[int, ...]]:
        if len(current) == length:
            yield tuple(current)
            return
        for label in labels:
            if counts[label]:
                counts[label] -= 1
                current.append(label)
                yield from extend()
                current.pop()
                counts[label] += 1

    yield from extend()


def iter_multiset_sequences(c: ChildSequence) -> Iterator[MultisetSequence]:
    """Every V in V_c, lexicographically"""
    for entries in _distinct_permutations(dict(c.entries), c.total):
        yield MultisetSequence(entries)


def enumerate_trees(c: ChildSequence) -> List[RootedForest]:
    """All of T_c, through the inverse line-breaking map"""
    return [sequence_to_tree(V, c) for V in iter_multiset_sequences(c)]


def enumerate_forests(c: ChildSequence, roots: Iterable[int]) -> List[RootedForest]:
    """
    All forests with child sequence c and root set R.

    Non-root vertices receive parents by every distinct arrangement of the
    multiset of child slots; arrangements with a cycle or a self-parent are
    discarded.
    """
    roots = sorted(set(roots))
    if not set(roots) <= set(c.labels):
        raise ValueError("roots must be labels of the child sequence")
    others = [v for v in c.labels if v not in roots]
    if len(others) != c.total:
        return []
    found: List[RootedForest] = []
    for parents in _distinct_permutations(dict(c.entries), c.total):
        if any(v == p for v, p in zip(others, parents)):
            continue
        try:
            forest = RootedForest(tuple(zip(others, parents)), tuple(roots))
        except ValueError:
            continue
        found.append(forest)
    return found


def sample_sequence(c: ChildSequence, rng: np.random.Generator) -> MultisetSequence:
    """Uniform element of V_c"""
    return MultisetSequence(tuple(int(v) for v in rng.permutation(np.array(c.multiset(), dtype=np.int64))))


def sample_tree(c: ChildSequence, rng: np.random.Generator) -> RootedForest:
    """Uniform element of T_c"""
    return sequence_to_tree(sample_sequence(c, rng), c)


def sample_forest(c: ChildSequence, rng: np.random.Generator) -> RootedForest:
    """
    Uniform forest with child sequence c over all root sets.

    An auxiliary root with one child per tree is added and forced to the
    front of the sequence; deleting it afterwards leaves the forest.
    """
    k = c.num_roots
    aux = max(c.labels) + 1
    counts = dict(c.entries)
    counts[aux] = k
    extended = ChildSequence.from_mapping(counts)
    rest = [aux] * (k - 1) + c.multiset()
    tail = rng.permutation(np.array(rest, dtype=np.int64)) if rest else np.array([], dtype=np.int64)
    V = MultisetSequence((aux,) + tuple(int(v) for v in tail))
    tree = sequence_to_tree(V, extended)
    parent = {v: p for v, p in tree.parent if p != aux}
    return RootedForest.from_parent_map(parent, tree.children(aux))
