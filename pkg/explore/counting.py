"""
Exact double counting of switchings between exploration events.

For every augmented core with degree sequence d, the exploration from
`start` is run to time t. Cores sharing (K_t, Q_t) form a group; inside a
group the event cores (loop, or back-edge with a small 2-ball) are joined to
complement cores by switchings on an orientation of e_{t+1}. Counted from
both sides, the totals must agree, event cores must meet the local lower
bound and complement cores must stay within 4|Q_t|.
"""

from collections import defaultdict
from dataclasses import dataclass
from math import comb
from typing import Dict, Iterable, List, Optional, Tuple

from graphs import edge_ball
from models import AugmentedCore, DegreeSequence, ExplorationState, HalfEdge, SwitchingCountReport
from .augmented import build_kernel
from .exploration import next_half_edge, state_at
from .switching import OrientedEdge, is_valid_pair, orientations, switch

EVENTS = ("loop", "back-edge")


@dataclass
class _Profile:
    state: ExplorationState
    chosen: HalfEdge  # the half-edge explored at step t + 1
    loop: bool
    back_edge: bool
    small_ball: bool  # |B_K(K_t, 2)| <= m / 2


def _profile(A: AugmentedCore, start: int, t: int) -> Optional[_Profile]:
    state = state_at(A, start, t)
    if state.is_finished:
        return None
    ui = next_half_edge(state)
    w = A.partner(ui).vertex
    K = build_kernel(A)
    ball = edge_ball(K, state.distance_map, 2)
    return _Profile(
        state=state,
        chosen=ui,
        loop=ui.vertex == w,
        back_edge=w in state.distance_map,
        small_ball=2 * len(ball) <= A.num_records,
    )


def _in_event(profile: _Profile, event: str) -> bool:
    if event == "loop":
        return profile.loop
    return profile.back_edge and profile.small_ball


def _in_complement(profile: _Profile, event: str) -> bool:
    return not profile.loop if event == "loop" else not profile.back_edge


def _local_lower_bound(A: AugmentedCore, profile: _Profile, event: str) -> int:
    """Switchings the event core is guaranteed: 2|E| for loops, 4 |K - B_K(K_t, 2)| for back-edges"""
    explored = profile.state.distance_map
    K = build_kernel(A)
    if event == "back-edge":
        return 4 * (K.num_edges - len(edge_ball(K, explored, 2)))
    touching = {v for r in A.records for v in r.vertex_pair
                if set(r.vertex_pair) & set(explored)} - set(explored)
    count = 0
    for r in A.records:
        ends = set(r.vertex_pair)
        if ends & set(explored):
            continue
        if r.internal or not ends <= touching:
            count += 1
    return 2 * count


def _precondition(event: str, t: int, queue_size: int, m: int) -> bool:
    if event == "loop":
        return 2 * (t + queue_size + comb(queue_size, 2)) <= m
    return True


def _switchings_from_event(A: AugmentedCore, profile: _Profile) -> Iterable[Tuple[OrientedEdge, OrientedEdge]]:
    """Pairs (e, f) with e an orientation of e_{t+1}(A), one per equivalence class"""
    e_record = A.record_at[profile.chosen]
    for e in orientations(e_record):
        for record in A.records:
            if record == e_record:
                continue
            for f in orientations(record):
                if is_valid_pair(A, e, f):
                    yield e, f


def _switchings_from_complement(B: AugmentedCore, profile: _Profile) -> Iterable[Tuple[OrientedEdge, OrientedEdge]]:
    """Pairs whose first or second oriented edge leaves from the chosen queue half-edge"""
    ui = profile.chosen
    g_record = B.record_at[ui]
    g_out = (ui, g_record.other(ui))
    for record in B.records:
        if record == g_record:
            continue
        for h in orientations(record):
            if is_valid_pair(B, g_out, h):
                yield g_out, h
            if is_valid_pair(B, h, g_out):
                yield h, g_out


def switching_count_check(d: DegreeSequence, start: int, t: int, cores: Iterable[AugmentedCore],
                          event: str = "loop") -> SwitchingCountReport:
    """
    Double count switchings for one event over the given cores (normally all of A_d).

    Raises ValueError for an unknown event.
    """
    if event not in EVENTS:
        raise ValueError(f"Unknown switching event: {event}. Use one of {', '.join(EVENTS)}")
    profiles: Dict[AugmentedCore, _Profile] = {}
    groups: Dict[tuple, List[AugmentedCore]] = defaultdict(list)
    for A in cores:
        if A.degree_seq != d:
            raise ValueError("every core must have the degree sequence d")
        profile = _profile(A, start, t)
        if profile is None:
            continue
        profiles[A] = profile
        groups[profile.state.key()].append(A)

    report = SwitchingCountReport(event=event, t=t)
    for key, members in groups.items():
        event_cores = [A for A in members if _in_event(profiles[A], event)]
        complement = [B for B in members if _in_complement(profiles[B], event)]
        if not event_cores and not complement:
            continue
        report.groups += 1
        report.event_size += len(event_cores)
        report.complement_size += len(complement)
        queue_size = len(key[1])
        m = members[0].num_records

        for A in event_cores:
            degree = 0
            for e, f in _switchings_from_event(A, profiles[A]):
                target = profiles.get(switch(A, e, f))
                if target is not None and target.state.key() == key and _in_complement(target, event):
                    degree += 1
            report.forward_switchings += degree
            if degree < _local_lower_bound(A, profiles[A], event):
                report.lower_bound_failures += 1

        for B in complement:
            degree = 0
            for g, h in _switchings_from_complement(B, profiles[B]):
                target = profiles.get(switch(B, g, h))
                if target is not None and target.state.key() == key and _in_event(target, event):
                    degree += 1
            report.backward_switchings += degree
            if degree > 4 * queue_size:
                report.upper_bound_failures += 1

        if _precondition(event, t, queue_size, m):
            report.precondition_groups += 1
            a = m if event == "loop" else 2 * m
            if a * len(event_cores) > 4 * queue_size * len(complement):
                report.ratio_failures += 1
    return report
