"""
Data models for degree sequences, child sequences, compositions and
multiset sequences.
"""

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple


def _normalize(entries) -> Tuple[Tuple[int, int], ...]:
    if isinstance(entries, Mapping):
        entries = entries.items()
    return tuple(sorted((int(label), int(value)) for label, value in entries))


@dataclass(frozen=True)
class DegreeSequence:
    """Prescribed degrees keyed by positive vertex labels"""
    entries: Tuple[Tuple[int, int], ...]  # sorted (label, degree) pairs

    def __post_init__(self):
        object.__setattr__(self, "entries", _normalize(self.entries))
        labels = [label for label, _ in self.entries]
        if len(set(labels)) != len(labels):
            raise ValueError("degree sequence has repeated labels")
        for label, degree in self.entries:
            if label < 1:
                raise ValueError(f"vertex label {label} must be positive (0 is reserved)")
            if degree < 1:
                raise ValueError(f"vertex {label} has degree {degree}; isolated vertices are not allowed")
        if self.degree_sum % 2:
            raise ValueError(f"degree sum {self.degree_sum} is odd")

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "DegreeSequence":
        """Label the given degrees 1..n in order"""
        return cls(tuple((i, d) for i, d in enumerate(degrees, start=1)))

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "DegreeSequence":
        return cls(_normalize(mapping))

    @cached_property
    def as_dict(self) -> Dict[int, int]:
        return dict(self.entries)

    @property
    def labels(self) -> Tuple[int, ...]:
        return tuple(label for label, _ in self.entries)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(degree for _, degree in self.entries)

    @property
    def num_vertices(self) -> int:
        """|d|_0"""
        return len(self.entries)

    @property
    def degree_sum(self) -> int:
        """|d|_1"""
        return sum(degree for _, degree in self.entries)

    def degree(self, label: int) -> int:
        return self.as_dict[label]

    def restrict(self, labels: Iterable[int]) -> "DegreeSequence":
        """d restricted to a label subset (the result must still have even sum)"""
        keep = set(labels)
        return DegreeSequence(tuple((v, d) for v, d in self.entries if v in keep))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.entries)

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.degrees)


@dataclass(frozen=True)
class ChildSequence:
    """Prescribed child counts keyed by non-negative vertex labels"""
    entries: Tuple[Tuple[int, int], ...]  # sorted (label, child count) pairs

    def __post_init__(self):
        object.__setattr__(self, "entries", _normalize(self.entries))
        labels = [label for label, _ in self.entries]
        if len(set(labels)) != len(labels):
            raise ValueError("child sequence has repeated labels")
        for label, count in self.entries:
            if label < 0 or count < 0:
                raise ValueError(f"invalid child sequence entry {label}:{count}")
        if self.total > max(len(self.entries) - 1, 0):
            raise ValueError(
                f"child counts sum to {self.total} but only {len(self.entries)} vertices exist"
            )

    @classmethod
    def from_counts(cls, counts: Iterable[int]) -> "ChildSequence":
        """Label the given counts 0..n in order"""
        return cls(tuple((i, c) for i, c in enumerate(counts)))

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "ChildSequence":
        return cls(_normalize(mapping))

    @cached_property
    def as_dict(self) -> Dict[int, int]:
        return dict(self.entries)

    @property
    def labels(self) -> Tuple[int, ...]:
        return tuple(label for label, _ in self.entries)

    @property
    def counts(self) -> Tuple[int, ...]:
        return tuple(count for _, count in self.entries)

    @property
    def total(self) -> int:
        """Sum of child counts; equals the vertex count minus one for a tree"""
        return sum(count for _, count in self.entries)

    @property
    def num_vertices(self) -> int:
        return len(self.entries)

    @property
    def num_roots(self) -> int:
        """Number of trees in any forest with this child sequence"""
        return len(self.entries) - self.total

    @property
    def is_tree_sequence(self) -> bool:
        return self.num_roots == 1

    def count(self, label: int) -> int:
        return self.as_dict[label]

    def count_equal(self, b: int) -> int:
        """n_b(c)"""
        return sum(1 for _, count in self.entries if count == b)

    @property
    def is_one_free(self) -> bool:
        return self.count_equal(1) == 0

    @property
    def is_binary(self) -> bool:
        return all(count in (0, 2) for count in self.counts)

    @property
    def is_sub_binary(self) -> bool:
        return all(count <= 2 for count in self.counts)

    def restrict(self, labels: Iterable[int]) -> "ChildSequence":
        """c restricted to a label subset"""
        keep = set(labels)
        return ChildSequence(tuple((v, c) for v, c in self.entries if v in keep))

    def multiset(self) -> List[int]:
        """Each label repeated by its child count, in label order"""
        return [label for label, count in self.entries for _ in range(count)]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.entries)


@dataclass(frozen=True)
class Composition:
    """An m-composition of its total: m non-negative parts"""
    parts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(p < 0 for p in self.parts):
            raise ValueError(f"composition parts must be non-negative: {self.parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def m(self) -> int:
        return len(self.parts)

    def prefix_sums(self) -> Tuple[int, ...]:
        """(S_0, S_1, ..., S_m) with S_0 = 0"""
        sums = [0]
        for part in self.parts:
            sums.append(sums[-1] + part)
        return tuple(sums)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)


@dataclass(frozen=True)
class MultisetSequence:
    """A sequence (V_1, ..., V_n) of vertex labels"""
    entries: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(v) for v in self.entries))

    @cached_property
    def multiplicities(self) -> Dict[int, int]:
        return dict(Counter(self.entries))

    def belongs_to(self, c: ChildSequence) -> bool:
        """Membership in V_c: every label v occurs exactly c_v times"""
        counts = self.multiplicities
        if any(label not in c.as_dict for label in counts):
            return False
        return all(counts.get(label, 0) == count for label, count in c.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]
