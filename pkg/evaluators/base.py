"""
Shared plumbing for the exhaustive verify suites.
"""

import time
from typing import Any, Dict, Iterator, List, Optional

from degseq import iter_degree_sequence_types, iter_degree_sequences
from models import AugmentedCore, ChildSequence, DegreeSequence, LabeledGraph, SuiteResult
from parsers import SuiteConfig


def serialize(value: Any) -> Any:
    """JSON-friendly form of the lab's objects, used in counterexample dumps"""
    if isinstance(value, DegreeSequence):
        return {str(v): deg for v, deg in value.entries}
    if isinstance(value, ChildSequence):
        return {str(v): count for v, count in value.entries}
    if isinstance(value, LabeledGraph):
        return {"vertices": list(value.sorted_vertices), "edges": [list(e) for e in value.sorted_edges]}
    if isinstance(value, AugmentedCore):
        return [[str(r.first), str(r.second), list(r.internal)] for r in value.records]
    if isinstance(value, dict):
        return {str(k): serialize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [serialize(v) for v in value]
    return value


class VerifySuite:
    """
    One exhaustive check. Subclasses implement `check(config)` and report
    through `instance`, `expect` and `note`.
    """

    name = "suite"
    default_bounds: Dict[str, int] = {}

    def __init__(self):
        self._result: Optional[SuiteResult] = None
        self._max_failures = 1

    def bound(self, config: SuiteConfig, key: str) -> int:
        return config.bound(key, self.default_bounds[key])

    def all_labellings(self, config: SuiteConfig) -> bool:
        """`all_labellings: 1` walks every labelled sequence instead of one or two per type"""
        return bool(config.bound("all_labellings", 0))

    def instance(self) -> None:
        self._result.instances += 1

    def expect(self, condition: bool, check: str, **counterexample: Any) -> bool:
        """Count one check; on failure record the counterexample"""
        self._result.checks += 1
        if not condition:
            self._result.passed = False
            if len(self._result.failures) < self._max_failures:
                failure = {"check": check}
                failure.update(serialize(counterexample))
                self._result.failures.append(failure)
        return condition

    def note(self, text: str) -> None:
        self._result.notes.append(text)

    @property
    def saturated(self) -> bool:
        """True once enough counterexamples were collected to stop early"""
        return len(self._result.failures) >= self._max_failures

    def check(self, config: SuiteConfig) -> None:
        raise NotImplementedError

    def run(self, config: Optional[SuiteConfig] = None) -> SuiteResult:
        config = config or SuiteConfig()
        self._max_failures = config.bound("max_failures", 1)
        self._result = SuiteResult(name=self.name, passed=True, instances=0)
        start = time.perf_counter()
        self.check(config)
        self._result.seconds = time.perf_counter() - start
        return self._result


def degree_sequences(max_vertices: int, max_sum: int, all_labellings: bool = False) -> Iterator[DegreeSequence]:
    """
    The degree sequences a suite visits. By default each multiset of degrees
    is checked under two labellings, degrees non-increasing and
    non-decreasing in the label, which put the leaves last and first.
    """
    if all_labellings:
        yield from iter_degree_sequences(max_vertices, max_sum)
        return
    for d in iter_degree_sequence_types(max_vertices, max_sum):
        yield d
        flipped = DegreeSequence.from_degrees(reversed(d.degrees))
        if flipped != d:
            yield flipped


def kernel_degree_sequences(max_vertices: int, max_sum: int, all_labellings: bool = False) -> List[DegreeSequence]:
    """Degree sequences with every degree >= 2 and some degree >= 3"""
    return [
        d for d in degree_sequences(max_vertices, max_sum, all_labellings)
        if min(d.degrees) >= 2 and max(d.degrees) >= 3
    ]
