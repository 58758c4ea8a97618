"""
Bijection between connected graphs with a fixed simple kernel K* and
triples (F, T, P).

F is a forest rooted at V(K*), T a tree holding the distinguished leaf 0 and
P an m-composition of ht_T(0), m = e*(K*). Decoding cuts the root-to-0 path
of T into m consecutive segments and splices segment i into the i-th mutable
edge in lexicographic order; the trees hanging off the path stay attached.
"""

from itertools import combinations
from typing import Dict, Iterator, List, Optional, Set

from decompose import core, hanging_trees, simple_kernel
from degseq import iter_compositions, kernel_child_sequence
from linebreak import DISTINGUISHED_LEAF, enumerate_forests, enumerate_trees
from models import (
    ChildSequence,
    Composition,
    DegreeSequence,
    Edge,
    KernelCodeDict,
    KernelCodeTriple,
    LabeledGraph,
    RootedForest,
    SimpleKernel
)


def _triangle_apex(kernel_star: SimpleKernel) -> int:
    """v*: the vertex of a surplus-1 simple kernel off its mutable edge"""
    (edge,) = kernel_star.mutable_edges
    (apex,) = kernel_star.graph.vertices - set(edge)
    return apex


def _min_leaf(d: DegreeSequence) -> int:
    leaves = [v for v, degree in d.entries if degree == 1]
    if not leaves:
        raise ValueError("a surplus-1 simple kernel needs a degree-1 vertex in d")
    return min(leaves)


def _check_kernel(kernel_star: SimpleKernel) -> None:
    if kernel_star.is_empty:
        raise ValueError("kernel codes need a nonempty simple kernel")


def _accepts_leaf_rule(d: DegreeSequence, kernel_star: SimpleKernel, forest: RootedForest) -> bool:
    if kernel_star.graph.surplus() != 1:
        return True
    leaf = _min_leaf(d)
    return leaf in forest.vertices and forest.root_of(leaf) == _triangle_apex(kernel_star)


def decode_given_kernel(code: KernelCodeTriple, d: DegreeSequence, kernel_star: SimpleKernel) -> LabeledGraph:
    """The graph of C_d(K*) encoded by (F, T, P)"""
    _check_kernel(kernel_star)
    F, T, P = code.forest, code.tree, code.composition
    c = kernel_child_sequence(d, kernel_star)

    if set(F.roots) != kernel_star.graph.vertices:
        raise ValueError("forest roots must be exactly the simple-kernel vertices")
    if F.vertices & T.vertices or (F.vertices | T.vertices) != set(c.labels):
        raise ValueError("forest and tree must partition the labels and the leaf 0")
    if DISTINGUISHED_LEAF not in T.vertices or not T.is_tree:
        raise ValueError("the tree part must be a single tree containing 0")
    if F.child_sequence() != c.restrict(F.vertices):
        raise ValueError("forest child counts disagree with the kernel child sequence")
    if T.child_sequence() != c.restrict(T.vertices):
        raise ValueError("tree child counts disagree with the kernel child sequence")
    height = T.height_of(DISTINGUISHED_LEAF)
    if P.m != kernel_star.num_mutable or P.total != height:
        raise ValueError(
            f"composition must have {kernel_star.num_mutable} parts summing to {height}, got {P.parts}"
        )
    if not _accepts_leaf_rule(d, kernel_star, F):
        raise ValueError("the minimum leaf must hang from the triangle apex")

    spine = T.path_from_root(DISTINGUISHED_LEAF)[:-1]
    on_spine = set(spine) | {DISTINGUISHED_LEAF}
    edges: List[Edge] = list(kernel_star.immutable_edges)
    edges.extend(F.edges())
    sums = P.prefix_sums()
    for i, (u, v) in enumerate(kernel_star.mutable_in_order()):
        chain = [u] + spine[sums[i]:sums[i + 1]] + [v]
        edges.extend(zip(chain, chain[1:]))
    edges.extend((x, p) for x, p in T.parent if x not in on_spine)
    return LabeledGraph.from_edges(edges, d.labels)


def encode_given_kernel(G: LabeledGraph, kernel_star: SimpleKernel) -> KernelCodeTriple:
    """(F, T, P) for a connected G with K*(G) = K*"""
    _check_kernel(kernel_star)
    if not G.is_connected():
        raise ValueError("kernel codes are defined for connected graphs")
    own = simple_kernel(G)
    if own != kernel_star:
        raise ValueError("the simple kernel of G differs from the given K*")

    C = core(G)
    hanging = hanging_trees(G, C.vertices)
    kernel_vertices = own.graph.vertices

    forest_parent = {
        v: p for v, p in hanging.parent
        if hanging.root_of(v) in kernel_vertices
    }
    forest = RootedForest.from_parent_map(forest_parent, kernel_vertices)

    spine: List[int] = []
    lengths: List[int] = []
    for edge in own.mutable_in_order():
        path = own.path_map.get(edge, ())
        spine.extend(path)
        lengths.append(len(path))

    if not spine:
        tree = RootedForest.from_parent_map({}, [DISTINGUISHED_LEAF])
    else:
        tree_parent: Dict[int, int] = {b: a for a, b in zip(spine, spine[1:])}
        tree_parent[DISTINGUISHED_LEAF] = spine[-1]
        on_spine = set(spine)
        tree_parent.update(
            (v, p) for v, p in hanging.parent if hanging.root_of(v) in on_spine
        )
        tree = RootedForest.from_parent_map(tree_parent, [spine[0]])
    return KernelCodeTriple(forest=forest, tree=tree, composition=Composition(tuple(lengths)))


def iter_kernel_codes(d: DegreeSequence, kernel_star: SimpleKernel) -> Iterator[KernelCodeTriple]:
    """Every (F, T, P) in X_d(K*)"""
    _check_kernel(kernel_star)
    c = kernel_child_sequence(d, kernel_star)
    kernel_vertices = sorted(kernel_star.graph.vertices)
    if not set(kernel_vertices) <= set(d.labels):
        raise ValueError("simple-kernel vertices must be labels of d")
    if kernel_star.graph.surplus() == 1:
        _min_leaf(d)
    others = [v for v in d.labels if v not in kernel_star.graph.vertices]
    m = kernel_star.num_mutable

    for size in range(len(others) + 1):
        for chosen in combinations(others, size):
            forest_labels: Set[int] = set(kernel_vertices) | set(chosen)
            tree_labels = (set(others) - set(chosen)) | {DISTINGUISHED_LEAF}
            c_forest = _restricted(c, forest_labels, roots=len(kernel_vertices))
            c_tree = _restricted(c, tree_labels, roots=1)
            if c_forest is None or c_tree is None:
                continue
            for F in enumerate_forests(c_forest, kernel_vertices):
                if not _accepts_leaf_rule(d, kernel_star, F):
                    continue
                for T in enumerate_trees(c_tree):
                    for P in iter_compositions(m, T.height_of(DISTINGUISHED_LEAF)):
                        yield KernelCodeTriple(forest=F, tree=T, composition=P)


def enumerate_kernel_codes(d: DegreeSequence, kernel_star: SimpleKernel) -> List[KernelCodeTriple]:
    return list(iter_kernel_codes(d, kernel_star))


def _restricted(c: ChildSequence, labels: Set[int], roots: int) -> Optional[ChildSequence]:
    """c|_labels when a forest with that many roots can realize it"""
    total = sum(c.count(v) for v in labels)
    if total != len(labels) - roots:
        return None
    return c.restrict(labels)


def kernel_code_to_dict(code: KernelCodeTriple) -> KernelCodeDict:
    return KernelCodeDict(
        forest_parent=[[v, p] for v, p in code.forest.parent],
        forest_roots=list(code.forest.roots),
        tree_parent=[[v, p] for v, p in code.tree.parent],
        tree_root=code.tree.root,
        composition=list(code.composition.parts),
    )
