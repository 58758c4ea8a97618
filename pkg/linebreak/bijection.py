"""
The line-breaking bijection between rooted trees with child sequence c and
the multiset sequences V_c, with the first-repetition and final-singleton
statistics.
"""

from collections import Counter
from typing import Dict, List

from models import ChildSequence, MultisetSequence, RootedForest


def tree_to_sequence(T: RootedForest) -> MultisetSequence:
    """
    List the leaves in increasing label order; for each leaf climb towards
    the root until a vertex already seen, and append that root-path segment
    (top first, the leaf itself excluded).
    """
    root = T.root
    parents = T.parent_map
    seen = {root}
    entries: List[int] = []
    for leaf in T.leaves():
        if leaf == root:
            continue
        segment = []
        v = leaf
        while True:
            v = parents[v]
            segment.append(v)
            if v in seen:
                break
        segment.reverse()
        entries.extend(segment)
        seen.update(segment)
        seen.add(leaf)
    return MultisetSequence(tuple(entries))


def sequence_to_tree(V: MultisetSequence, c: ChildSequence) -> RootedForest:
    """Inverse of tree_to_sequence on V_c"""
    if not c.is_tree_sequence:
        raise ValueError(f"child sequence has {c.num_roots} roots, a tree needs exactly one")
    if not V.belongs_to(c):
        raise ValueError("sequence is not in V_c: multiplicities differ from the child sequence")
    if not len(V):
        return RootedForest.from_parent_map({}, [c.labels[0]])

    leaves = [label for label, count in c.entries if count == 0]
    segments: List[List[int]] = []
    appeared = set()
    for v in V:
        if v in appeared or not segments:
            segments.append([])
        segments[-1].append(v)
        appeared.add(v)
    if len(segments) != len(leaves):
        raise ValueError(f"sequence splits into {len(segments)} segments for {len(leaves)} leaves")

    parent: Dict[int, int] = {}
    for segment, leaf in zip(segments, leaves):
        for above, below in zip(segment, segment[1:]):
            parent[below] = above
        parent[leaf] = segment[-1]
    root = V[0]
    if root in parent:
        raise ValueError(f"sequence is not in V_c: root {root} would receive a parent")
    tree = RootedForest.from_parent_map(parent, [root])
    if tree.vertices != frozenset(c.labels) or tree.child_sequence() != c:
        raise ValueError("sequence does not decode to a tree with child sequence c")
    return tree


def first_repetition(V: MultisetSequence) -> int:
    """r(V): smallest 1-based index i with V_i among V_1, ..., V_{i-1}"""
    appeared = set()
    for i, v in enumerate(V, start=1):
        if v in appeared:
            return i
        appeared.add(v)
    raise ValueError("sequence has no repeated entry; r(V) is undefined")


def final_singleton(V: MultisetSequence) -> int:
    """f(V): largest 1-based index whose entry occurs exactly once in V"""
    counts = Counter(V.entries)
    for i in range(len(V), 0, -1):
        if counts[V[i - 1]] == 1:
            return i
    raise ValueError("sequence has no entry occurring exactly once; f(V) is undefined")
