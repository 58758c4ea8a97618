"""
Data models for augmented cores and the breadth-first kernel exploration.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .errors import InvalidAugmentedCoreError
from .sequence_models import DegreeSequence


@dataclass(frozen=True, order=True)
class HalfEdge:
    """Port `port` at vertex `vertex`, written vi"""
    vertex: int
    port: int

    def __str__(self) -> str:
        return f"{self.vertex}:{self.port}"


@dataclass(frozen=True, order=True)
class CoreRecord:
    """({ui, vj}, (p_1, ..., p_a)) with ui < vj and the sequence oriented from ui"""
    first: HalfEdge
    second: HalfEdge
    internal: Tuple[int, ...] = ()

    @classmethod
    def of(cls, a: HalfEdge, b: HalfEdge, internal_from_a: Iterable[int] = ()) -> "CoreRecord":
        """Build a record from a path a -> b, storing it in canonical orientation"""
        internal = tuple(internal_from_a)
        if b < a:
            return cls(b, a, internal[::-1])
        return cls(a, b, internal)

    @property
    def pair(self) -> Tuple[HalfEdge, HalfEdge]:
        return (self.first, self.second)

    @property
    def is_loop(self) -> bool:
        return self.first.vertex == self.second.vertex

    @property
    def is_subdivided(self) -> bool:
        return bool(self.internal)

    @property
    def vertex_pair(self) -> Tuple[int, int]:
        u, v = self.first.vertex, self.second.vertex
        return (u, v) if u <= v else (v, u)

    def internal_from(self, half_edge: HalfEdge) -> Tuple[int, ...]:
        """Internal sequence read from the given end of the record"""
        if half_edge == self.first:
            return self.internal
        if half_edge == self.second:
            return self.internal[::-1]
        raise ValueError(f"{half_edge} is not an end of {self}")

    def other(self, half_edge: HalfEdge) -> HalfEdge:
        if half_edge == self.first:
            return self.second
        if half_edge == self.second:
            return self.first
        raise ValueError(f"{half_edge} is not an end of {self}")


def validate_records(degree_seq: DegreeSequence, records: Iterable[CoreRecord]) -> Optional[str]:
    """Name of the first augmented-core rule the records break, or None"""
    kernel = {v: d for v, d in degree_seq.entries if d >= 3}
    two_labels = {v for v, d in degree_seq.entries if d == 2}
    if len(kernel) + len(two_labels) != degree_seq.num_vertices:
        return "degree-form"
    expected = {HalfEdge(v, i) for v, d in kernel.items() for i in range(1, d + 1)}
    seen_half_edges: List[HalfEdge] = []
    seen_internal: List[int] = []
    direct_pairs = set()
    for record in records:
        seen_half_edges.extend(record.pair)
        seen_internal.extend(record.internal)
        if record.first == record.second:
            return "matching"
        if record.is_loop and len(record.internal) < 2:
            return "loop-subdivision"
        if not record.is_loop and not record.internal:
            if record.vertex_pair in direct_pairs:
                return "parallel-unsubdivided"
            direct_pairs.add(record.vertex_pair)
    if len(seen_half_edges) != len(set(seen_half_edges)) or set(seen_half_edges) != expected:
        return "matching"
    if len(seen_internal) != len(set(seen_internal)) or set(seen_internal) != two_labels:
        return "internal-partition"
    return None


@dataclass(frozen=True)
class AugmentedCore:
    """Perfect matching of kernel half-edges with degree-2 sequences on its pairs"""
    degree_seq: DegreeSequence
    records: Tuple[CoreRecord, ...]

    def __post_init__(self):
        records = tuple(sorted(self.records))
        rule = validate_records(self.degree_seq, records)
        if rule is not None:
            raise InvalidAugmentedCoreError(rule)
        object.__setattr__(self, "records", records)

    @classmethod
    def from_pairs(cls, degree_seq: DegreeSequence, pairs) -> "AugmentedCore":
        """Build from ((u, i), (v, j), internal) triples, internal oriented from ui"""
        return cls(degree_seq, tuple(
            CoreRecord.of(HalfEdge(*a), HalfEdge(*b), internal) for a, b, internal in pairs
        ))

    @cached_property
    def kernel_vertices(self) -> Tuple[int, ...]:
        return tuple(v for v, d in self.degree_seq.entries if d >= 3)

    @cached_property
    def record_at(self) -> Dict[HalfEdge, CoreRecord]:
        index: Dict[HalfEdge, CoreRecord] = {}
        for record in self.records:
            index[record.first] = record
            index[record.second] = record
        return index

    def partner(self, half_edge: HalfEdge) -> HalfEdge:
        return self.record_at[half_edge].other(half_edge)

    def half_edges_at(self, v: int) -> Tuple[HalfEdge, ...]:
        return tuple(HalfEdge(v, i) for i in range(1, self.degree_seq.degree(v) + 1))

    @property
    def num_records(self) -> int:
        """m = |M(A)|"""
        return len(self.records)

    def matching(self) -> FrozenSet[Tuple[HalfEdge, HalfEdge]]:
        """M(A)"""
        return frozenset(record.pair for record in self.records)


@dataclass(frozen=True)
class ExplorationState:
    """(K_t, Q_t) of a breadth-first kernel exploration started at `start`"""
    start: int
    clock: int
    distances: Tuple[Tuple[int, int], ...]  # discovered vertices with distance from start
    explored: FrozenSet[Tuple[HalfEdge, HalfEdge]]  # matched pairs of E(K_t)
    queue: FrozenSet[HalfEdge]
    back_edge: bool = False  # flags describe the most recent step
    loop: bool = False

    @cached_property
    def distance_map(self) -> Dict[int, int]:
        return dict(self.distances)

    @property
    def radius(self) -> int:
        """rad(K_t)"""
        return max(self.distance_map.values(), default=0)

    @property
    def queue_size(self) -> int:
        return len(self.queue)

    @property
    def num_explored(self) -> int:
        return len(self.explored)

    @property
    def is_finished(self) -> bool:
        return not self.queue

    def key(self) -> Tuple[FrozenSet[Tuple[HalfEdge, HalfEdge]], FrozenSet[HalfEdge]]:
        """Identity of (K_t, Q_t)"""
        return (self.explored, self.queue)


@dataclass
class TraceRow:
    """One exploration step as written to the trace CSV"""
    t: int
    queue_size: int
    radius: int
    back_edge: bool
    loop: bool


@dataclass(frozen=True)
class SwitchObstruction:
    """Why neither orientation of f switches with e: `vertex`, an end of one
    edge, reaches both ends of the other edge through non-subdivided records"""
    vertex: int
    target: Tuple[int, int]  # endpoints of the other edge
    joining: Tuple[CoreRecord, CoreRecord]
    non_subdivided: CoreRecord  # e or f, without internal vertices


@dataclass
class SwitchingCountReport:
    """Double count of switchings between an exploration event and its complement.

    Groups are the classes of augmented cores sharing (K_t, Q_t). Switchings
    are counted once per equivalence class, from the event side and again
    from the complement side through their reversals.
    """
    event: str  # "loop" or "back-edge"
    t: int
    groups: int = 0
    event_size: int = 0
    complement_size: int = 0
    forward_switchings: int = 0
    backward_switchings: int = 0
    lower_bound_failures: int = 0  # event cores with fewer switchings than the local bound
    upper_bound_failures: int = 0  # complement cores with more than 4|Q_t| switchings
    precondition_groups: int = 0
    ratio_failures: int = 0  # groups meeting the precondition with a|A| > b|B|

    @property
    def passed(self) -> bool:
        return (
            self.forward_switchings == self.backward_switchings
            and self.lower_bound_failures == 0
            and self.upper_bound_failures == 0
            and self.ratio_failures == 0
        )
