"""
Path switching on augmented cores.

An oriented edge is a matched pair (ui, vj) read from ui. Switching on
((ui, vj), (xk, yl)) replaces {ui, vj} and {xk, yl} by {ui, xk} and {vj, yl};
the old u-v internal sequence becomes the u-x sequence and the old x-y
sequence becomes the v-y sequence.
"""

from itertools import combinations
from typing import Iterator, List, Optional, Tuple

from models import (
    AugmentedCore,
    CoreRecord,
    HalfEdge,
    InvalidSwitchError,
    SwitchObstruction,
    validate_records
)

OrientedEdge = Tuple[HalfEdge, HalfEdge]


def reverse(e: OrientedEdge) -> OrientedEdge:
    return (e[1], e[0])


def orientations(record: CoreRecord) -> Tuple[OrientedEdge, OrientedEdge]:
    return ((record.first, record.second), (record.second, record.first))


def oriented_edges(A: AugmentedCore) -> Iterator[OrientedEdge]:
    for record in A.records:
        yield from orientations(record)


def _switched_records(A: AugmentedCore, e: OrientedEdge, f: OrientedEdge) -> Tuple[CoreRecord, ...]:
    ui, vj = e
    xk, yl = f
    e_record, f_record = A.record_at.get(ui), A.record_at.get(xk)
    if e_record is None or e_record.other(ui) != vj:
        raise InvalidSwitchError("not-an-edge", f"({ui}, {vj}) is not a matched pair")
    if f_record is None or f_record.other(xk) != yl:
        raise InvalidSwitchError("not-an-edge", f"({xk}, {yl}) is not a matched pair")
    if e_record == f_record:
        rule = "reversal-pair" if e == reverse(f) else "same-edge"
        raise InvalidSwitchError(rule, f"cannot switch {e_record} with itself")
    kept = tuple(r for r in A.records if r != e_record and r != f_record)
    return kept + (
        CoreRecord.of(ui, xk, e_record.internal_from(ui)),
        CoreRecord.of(vj, yl, f_record.internal_from(xk)),
    )


def switch(A: AugmentedCore, e: OrientedEdge, f: OrientedEdge) -> AugmentedCore:
    """
    A' after switching on (e, f).

    Raises InvalidSwitchError naming the broken rule when A' is not an
    augmented core, e.g. "loop-subdivision" or "parallel-unsubdivided".
    """
    records = _switched_records(A, e, f)
    rule = validate_records(A.degree_seq, records)
    if rule is not None:
        raise InvalidSwitchError(rule)
    return AugmentedCore(A.degree_seq, records)


def is_valid_pair(A: AugmentedCore, e: OrientedEdge, f: OrientedEdge) -> bool:
    try:
        records = _switched_records(A, e, f)
    except InvalidSwitchError:
        return False
    return validate_records(A.degree_seq, records) is None


def reversal(e: OrientedEdge, f: OrientedEdge) -> Tuple[OrientedEdge, OrientedEdge]:
    """The switching that undoes (e, f): ((ui, xk), (vj, yl))"""
    (ui, vj), (xk, yl) = e, f
    return (ui, xk), (vj, yl)


def equivalent(e: OrientedEdge, f: OrientedEdge) -> Tuple[OrientedEdge, OrientedEdge]:
    """(reverse f, reverse e), which yields the same A'"""
    return reverse(f), reverse(e)


def _direct_record(A: AugmentedCore, u: int, v: int) -> Optional[CoreRecord]:
    pair = (u, v) if u <= v else (v, u)
    for record in A.records:
        if record.vertex_pair == pair and not record.internal and not record.is_loop:
            return record
    return None


def switch_obstruction(A: AugmentedCore, e: OrientedEdge, f: OrientedEdge) -> Optional[SwitchObstruction]:
    """
    Certificate that some end of one edge reaches both ends of the other
    through non-subdivided records while e or f is itself non-subdivided.

    Defined for loop-free, vertex-disjoint e and f; None if no certificate.
    """
    e_record, f_record = A.record_at[e[0]], A.record_at[f[0]]
    bare = next((r for r in (e_record, f_record) if not r.internal), None)
    if bare is None:
        return None
    for one, other in ((e_record, f_record), (f_record, e_record)):
        x, y = other.vertex_pair
        for z in one.vertex_pair:
            to_x, to_y = _direct_record(A, z, x), _direct_record(A, z, y)
            if to_x is not None and to_y is not None:
                return SwitchObstruction(vertex=z, target=(x, y), joining=(to_x, to_y), non_subdivided=bare)
    return None


def free_pair_violations(A: AugmentedCore) -> List[Tuple[OrientedEdge, OrientedEdge]]:
    """
    Oriented pairs (e, f) of loop-free, vertex-disjoint edges where neither
    (e, f) nor (e, reverse f) is valid and no obstruction certifies it.
    """
    found = []
    plain = [r for r in A.records if not r.is_loop]
    for a, b in combinations(plain, 2):
        if set(a.vertex_pair) & set(b.vertex_pair):
            continue
        for first, second in ((a, b), (b, a)):
            for e in orientations(first):
                f = (second.first, second.second)
                if is_valid_pair(A, e, f) or is_valid_pair(A, e, reverse(f)):
                    continue
                if switch_obstruction(A, e, f) is None:
                    found.append((e, f))
    return found


def has_adjacent_ends(A: AugmentedCore, e: OrientedEdge, f: OrientedEdge) -> bool:
    """Some endpoint of e is adjacent in K(A) to, or equal to, an endpoint of f"""
    ends_e = {e[0].vertex, e[1].vertex}
    ends_f = {f[0].vertex, f[1].vertex}
    if ends_e & ends_f:
        return True
    return any(
        set(r.vertex_pair) & ends_e and set(r.vertex_pair) & ends_f
        for r in A.records
    )
