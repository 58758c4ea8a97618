"""
Reduction of trees with the extended child sequence c+ = (c, 1, ..., 1) to
pairs (T, P), and the (m - 1)! preimages of each pair.
"""

from collections import defaultdict
from itertools import permutations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from models import Composition, RootedForest

DISTINGUISHED_LEAF = 0


def star_tree_reduction(T_star: RootedForest,
                        extras: Optional[Sequence[int]] = None) -> Tuple[RootedForest, Composition]:
    """
    Suppress the one-child vertices of the root-to-0 path.

    With v_1, ..., v_{m-1} those vertices by height and v_m = 0, the parts
    are P_1 = ht(v_1) and P_i = ht(v_i) - ht(v_{i-1}) - 1. `extras` defaults
    to every one-child vertex of T*.
    """
    children = T_star.children_map
    if extras is None:
        extras = [v for v in T_star.vertices if len(children[v]) == 1]
    extras = set(extras)
    path = T_star.path_from_root(DISTINGUISHED_LEAF)
    off_path = extras - set(path)
    if off_path:
        raise ValueError(f"one-child vertices {sorted(off_path)} lie off the root-to-0 path")
    for x in extras:
        if len(children[x]) != 1:
            raise ValueError(f"vertex {x} does not have exactly one child")

    marks = [T_star.height_of(v) for v in path if v in extras] + [T_star.height_of(DISTINGUISHED_LEAF)]
    parts = [marks[0]] + [b - a - 1 for a, b in zip(marks, marks[1:])]

    parent = dict(T_star.parent_map)
    roots = list(T_star.roots)
    # top-down so each suppressed vertex's parent is already final
    for x in [v for v in path if v in extras]:
        (child,) = children[x]
        if x in parent:
            parent[child] = parent.pop(x)
        else:
            del parent[child]
            roots = [child if r == x else r for r in roots]
    return RootedForest.from_parent_map(parent, roots), Composition(tuple(parts))


def star_tree_preimages(T: RootedForest, P: Composition, extras: Sequence[int]) -> Iterator[RootedForest]:
    """
    Every T* mapping to (T, P): the extras, in each of their (m - 1)! orders,
    are inserted on the root-to-0 path so that P_1 + ... + P_i original path
    vertices precede the i-th one.
    """
    if P.m != len(extras) + 1:
        raise ValueError(f"composition has {P.m} parts for {len(extras)} extra vertices")
    path = T.path_from_root(DISTINGUISHED_LEAF)
    if P.total != len(path) - 1:
        raise ValueError(f"composition total {P.total} differs from ht_T(0) = {len(path) - 1}")
    sums = P.prefix_sums()[1:-1]
    for order in permutations(sorted(extras)):
        parent: Dict[int, int] = dict(T.parent_map)
        new_path: List[int] = []
        inserted: Dict[int, List[int]] = defaultdict(list)
        for s, x in zip(sums, order):
            inserted[s].append(x)
        for index, v in enumerate(path):
            new_path.extend(inserted.get(index, []))
            new_path.append(v)
        root = new_path[0]
        for above, below in zip(new_path, new_path[1:]):
            parent[below] = above
        yield RootedForest.from_parent_map(parent, [root])
