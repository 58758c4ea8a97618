"""
Plain-text loader for degree sequences, graphs, augmented cores and trees.
"""

import re
from collections import Counter
from typing import Dict, Iterator, List, Tuple

from decompose import assemble_kernel
from degseq import sequence_from_runs
from models import (
    AugmentedCore,
    CoreRecord,
    DegreeSequence,
    Edge,
    HalfEdge,
    LabeledGraph,
    MultiGraph,
    RootedForest
)

_RUN = re.compile(r"^(\d+)\^(\d+)$")
_HALF_EDGE = re.compile(r"^(\d+):(\d+)$")


def _content_lines(content: str) -> Iterator[str]:
    """Non-empty lines with # comments stripped"""
    for line in content.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            yield line


def _ints(tokens: List[str], where: str) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"expected integers in {where!r}")


class TextDataLoader:
    """Parses the lab's whitespace-separated text formats"""

    def parse_degree_sequence(self, text: str) -> DegreeSequence:
        """
        Parse a degree sequence.

        Accepts plain degrees ("3 3 2 2"), run-length tokens ("3^5 1^7"),
        or explicit label:degree pairs ("1:3 4:2 7:1"); commas count as spaces.
        """
        tokens = text.replace(",", " ").split()
        if not tokens:
            raise ValueError("empty degree sequence")
        if all(_HALF_EDGE.match(t) for t in tokens):
            return DegreeSequence.from_mapping({int(a): int(b) for a, b in (t.split(":") for t in tokens)})
        runs: List[Tuple[int, int]] = []
        for token in tokens:
            match = _RUN.match(token)
            if match:
                runs.append((int(match.group(1)), int(match.group(2))))
            else:
                runs.append((_ints([token], text)[0], 1))
        return sequence_from_runs(runs)

    def load_degree_sequence(self, path: str) -> DegreeSequence:
        with open(path, 'r', encoding='utf-8') as f:
            return self.parse_degree_sequence(" ".join(_content_lines(f.read())))

    def parse_edge_list(self, content: str) -> LabeledGraph:
        """One "u v" per line; a line holding a single label adds an isolated vertex"""
        edges: List[Edge] = []
        vertices = set()
        for line in _content_lines(content):
            values = _ints(line.split(), line)
            if len(values) == 1:
                vertices.add(values[0])
            elif len(values) == 2:
                edges.append((values[0], values[1]))
            else:
                raise ValueError(f"edge line {line!r} must hold two labels")
        return LabeledGraph.from_edges(edges, vertices)

    def load_edge_list(self, path: str) -> LabeledGraph:
        with open(path, 'r', encoding='utf-8') as f:
            return self.parse_edge_list(f.read())

    def parse_multigraph(self, content: str) -> MultiGraph:
        """One "u v | p1 p2 ..." per line; the internal path is read from u"""
        edges: List[Tuple[Edge, Tuple[int, ...]]] = []
        vertices = set()
        for line in _content_lines(content):
            ends, _, internal = line.partition("|")
            ends_values = _ints(ends.split(), line)
            if len(ends_values) != 2:
                raise ValueError(f"multigraph line {line!r} must start with two labels")
            u, v = ends_values
            edges.append(((u, v), tuple(_ints(internal.split(), line))))
            vertices.update((u, v))
        return assemble_kernel(vertices, edges)

    def parse_augmented_core(self, content: str) -> AugmentedCore:
        """
        One matched pair per line: "u:i v:j | p1 p2 ...", the internal
        sequence read from u:i. The degree sequence is implied: kernel
        vertices have one degree per port, internal labels degree 2.
        """
        records: List[CoreRecord] = []
        degrees: Dict[int, int] = Counter()
        for line in _content_lines(content):
            ends, _, internal = line.partition("|")
            halves = []
            for token in ends.split():
                match = _HALF_EDGE.match(token)
                if not match:
                    raise ValueError(f"half-edge {token!r} must look like vertex:port")
                halves.append(HalfEdge(int(match.group(1)), int(match.group(2))))
            if len(halves) != 2:
                raise ValueError(f"record {line!r} must name two half-edges")
            path = _ints(internal.split(), line)
            for h in halves:
                degrees[h.vertex] += 1
            for p in path:
                degrees[p] += 2
            records.append(CoreRecord.of(halves[0], halves[1], path))
        d = DegreeSequence.from_mapping(degrees)
        return AugmentedCore(d, tuple(records))

    def load_augmented_core(self, path: str) -> AugmentedCore:
        with open(path, 'r', encoding='utf-8') as f:
            return self.parse_augmented_core(f.read())

    def parse_parent_array(self, content: str) -> RootedForest:
        """One "v parent" per line, "v -" for a root"""
        parent: Dict[int, int] = {}
        roots: List[int] = []
        for line in _content_lines(content):
            tokens = line.split()
            if len(tokens) != 2:
                raise ValueError(f"parent line {line!r} must hold a vertex and its parent")
            if tokens[1] == "-":
                roots.append(_ints(tokens[:1], line)[0])
            else:
                v, p = _ints(tokens, line)
                parent[v] = p
        return RootedForest.from_parent_map(parent, roots)
