"""
Breadth-first kernel exploration of an augmented core.

At each step the lexicographically least queued half-edge among those at
vertices nearest the start is matched to its partner; the partner's vertex
joins the explored subgraph and its unexplored half-edges join the queue.
"""

from dataclasses import replace
from typing import Callable, List, Optional, Tuple

from models import AugmentedCore, ExplorationState, HalfEdge, TraceRow

StatePredicate = Callable[[ExplorationState], bool]


def initial_state(A: AugmentedCore, start: int) -> ExplorationState:
    """(K_0, Q_0): the lone start vertex with all of its half-edges queued"""
    if start not in A.kernel_vertices:
        raise ValueError(f"start vertex {start} is not a kernel vertex")
    return ExplorationState(
        start=start,
        clock=0,
        distances=((start, 0),),
        explored=frozenset(),
        queue=frozenset(A.half_edges_at(start)),
    )


def next_half_edge(state: ExplorationState) -> HalfEdge:
    """The queued half-edge explored next"""
    distance = state.distance_map
    return min(state.queue, key=lambda h: (distance[h.vertex], h.vertex, h.port))


def bf_explore_step(A: AugmentedCore, state: ExplorationState) -> ExplorationState:
    if state.is_finished:
        return replace(state, clock=state.clock + 1, back_edge=False, loop=False)
    ui = next_half_edge(state)
    wj = A.partner(ui)
    u, w = ui.vertex, wj.vertex
    distances = state.distance_map
    back_edge = w in distances
    queue = set(state.queue)
    if not back_edge:
        distances = dict(distances)
        distances[w] = distances[u] + 1
        queue.update(A.half_edges_at(w))
    queue.discard(ui)
    queue.discard(wj)
    return ExplorationState(
        start=state.start,
        clock=state.clock + 1,
        distances=tuple(sorted(distances.items())),
        explored=state.explored | {A.record_at[ui].pair},
        queue=frozenset(queue),
        back_edge=back_edge,
        loop=u == w,
    )


def state_at(A: AugmentedCore, start: int, t: int) -> ExplorationState:
    """(K_t, Q_t)"""
    state = initial_state(A, start)
    for _ in range(t):
        state = bf_explore_step(A, state)
    return state


def trace_row(state: ExplorationState) -> TraceRow:
    return TraceRow(
        t=state.clock,
        queue_size=state.queue_size,
        radius=state.radius,
        back_edge=state.back_edge,
        loop=state.loop,
    )


def explore_until(A: AugmentedCore, start: int, predicate: StatePredicate,
                  max_steps: Optional[int] = None) -> Tuple[ExplorationState, List[TraceRow]]:
    """
    Step until `predicate` holds or the queue empties.

    Returns the final state and one trace row per time, starting at t = 0.
    """
    state = initial_state(A, start)
    rows = [trace_row(state)]
    while not predicate(state) and not state.is_finished:
        if max_steps is not None and state.clock >= max_steps:
            break
        state = bf_explore_step(A, state)
        rows.append(trace_row(state))
    return state, rows


def queue_reach(A: AugmentedCore, start: int, size: int) -> Optional[ExplorationState]:
    """First state with |Q_t| >= size, or None if the component is exhausted first"""
    state, _ = explore_until(A, start, lambda s: s.queue_size >= size)
    return state if state.queue_size >= size else None


def explored_vertices(state: ExplorationState) -> Tuple[int, ...]:
    return tuple(v for v, _ in state.distances)
