"""
Tubular graphs of graphs.

A complex is a list of named vertex graphs plus a list of tubes. A tube is a
circle of length L >= 3 with one attaching walk into a vertex graph at each
end. Walk steps are signed 1-based edge references: +k runs along edge k-1
from its first to its second endpoint, -k runs backwards. Circle vertex i is
sent to the tail of step i, so square (a, i) is bounded by step i of both
walks and by the horizontal edges at circle vertices i and i+1.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterator, List, Sequence, Tuple

from utils.errors import MalformedComplexError
from utils.graph_core import MultiGraph, SimplicialGraph, connected_components, is_connected

logger = logging.getLogger(__name__)

MIN_CIRCLE_LENGTH = 3


def step_edge(step: int) -> int:
    """Edge id traversed by a signed step."""
    return abs(step) - 1


def step_tail(graph: MultiGraph, step: int) -> int:
    u, v = graph.edges[step_edge(step)]
    return u if step > 0 else v


def step_head(graph: MultiGraph, step: int) -> int:
    u, v = graph.edges[step_edge(step)]
    return v if step > 0 else u


def reverse_walk(walk: Sequence[int]) -> Tuple[int, ...]:
    return tuple(-step for step in reversed(walk))


def rotate_walk(walk: Sequence[int], offset: int) -> Tuple[int, ...]:
    offset %= len(walk)
    return tuple(walk[offset:]) + tuple(walk[:offset])


@dataclass(frozen=True)
class VertexGraph:
    name: str
    graph: SimplicialGraph


@dataclass(frozen=True)
class TubeEnd:
    graph: int
    walk: Tuple[int, ...]


@dataclass(frozen=True)
class Tube:
    length: int
    ends: Tuple[TubeEnd, TubeEnd]

    def walk(self, side: int) -> Tuple[int, ...]:
        return self.ends[side].walk

    @property
    def is_loop(self) -> bool:
        return self.ends[0].graph == self.ends[1].graph


@dataclass(frozen=True)
class Square:
    tube: int
    index: int


@dataclass(frozen=True)
class Violation:
    kind: str
    location: str
    detail: str

    def __str__(self):
        return f"{self.kind} at {self.location}: {self.detail}"


@dataclass
class ValidationReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def add(self, kind: str, location: str, detail: str):
        self.violations.append(Violation(kind, location, detail))

    def kinds(self) -> List[str]:
        return [violation.kind for violation in self.violations]

    def summary(self) -> str:
        if self.is_valid:
            return "no violations"
        first = self.violations[0]
        extra = len(self.violations) - 1
        return str(first) + (f" (+{extra} more)" if extra else "")

    def to_dict(self) -> dict:
        return {
            'valid': self.is_valid,
            'violations': [
                {'kind': v.kind, 'location': v.location, 'detail': v.detail} for v in self.violations
            ],
        }


class TubularComplex:
    """Immutable tubular graph of graphs.

    Construction checks only that every index is in range; the geometric
    conditions live in validate().
    """

    def __init__(self, vertex_graphs: Sequence[VertexGraph], tubes: Sequence[Tube] = ()):
        self.vertex_graphs: Tuple[VertexGraph, ...] = tuple(vertex_graphs)
        self.tubes: Tuple[Tube, ...] = tuple(tubes)
        self._check_structure()
        self.underlying = MultiGraph(
            len(self.vertex_graphs),
            [(tube.ends[0].graph, tube.ends[1].graph) for tube in self.tubes],
        )

    def _check_structure(self):
        if not self.vertex_graphs:
            raise MalformedComplexError("/vertex_graphs", "a complex needs at least one vertex graph")
        names = set()
        for s, vertex_graph in enumerate(self.vertex_graphs):
            if vertex_graph.name in names:
                raise MalformedComplexError(f"/vertex_graphs/{s}/name", f"duplicate name {vertex_graph.name!r}")
            names.add(vertex_graph.name)
            if vertex_graph.graph.n_vertices == 0:
                raise MalformedComplexError(f"/vertex_graphs/{s}/vertices", "a vertex graph needs a vertex")

        for a, tube in enumerate(self.tubes):
            if tube.length < MIN_CIRCLE_LENGTH:
                raise MalformedComplexError(
                    f"/tubes/{a}/circle_len", f"circle length {tube.length} is below {MIN_CIRCLE_LENGTH}"
                )
            if len(tube.ends) != 2:
                raise MalformedComplexError(f"/tubes/{a}", "a tube has exactly two ends")
            for side, end in enumerate(tube.ends):
                position = f"/tubes/{a}/end{side}"
                if not 0 <= end.graph < len(self.vertex_graphs):
                    raise MalformedComplexError(f"{position}/graph", f"unknown vertex graph {end.graph}")
                if len(end.walk) != tube.length:
                    raise MalformedComplexError(
                        f"{position}/walk", f"walk has {len(end.walk)} steps, circle has {tube.length}"
                    )
                n_edges = self.vertex_graphs[end.graph].graph.n_edges
                for i, step in enumerate(end.walk):
                    if step == 0 or abs(step) > n_edges:
                        raise MalformedComplexError(
                            f"{position}/walk/{i}", f"step {step} does not name one of {n_edges} edges"
                        )

    # -- basic accessors -------------------------------------------------

    def graph(self, s: int) -> SimplicialGraph:
        return self.vertex_graphs[s].graph

    def index_of(self, name: str) -> int:
        for s, vertex_graph in enumerate(self.vertex_graphs):
            if vertex_graph.name == name:
                return s
        raise KeyError(name)

    @property
    def n_squares(self) -> int:
        return sum(tube.length for tube in self.tubes)

    @property
    def n_vertices(self) -> int:
        return sum(vg.graph.n_vertices for vg in self.vertex_graphs)

    @property
    def n_vertical_edges(self) -> int:
        return sum(vg.graph.n_edges for vg in self.vertex_graphs)

    def squares(self) -> Iterator[Square]:
        for a, tube in enumerate(self.tubes):
            for i in range(tube.length):
                yield Square(a, i)

    def corner(self, a: int, side: int, i: int) -> int:
        """Vertex of the side's graph that circle vertex i of tube a is sent to."""
        end = self.tubes[a].ends[side]
        return step_tail(self.graph(end.graph), end.walk[i % self.tubes[a].length])

    def square_corners(self, square: Square) -> Tuple[Tuple[int, int], ...]:
        """(graph, vertex) of the four corners, in boundary order."""
        tube = self.tubes[square.tube]
        i, j = square.index, (square.index + 1) % tube.length
        g0, g1 = tube.ends[0].graph, tube.ends[1].graph
        return (
            (g0, self.corner(square.tube, 0, i)),
            (g0, self.corner(square.tube, 0, j)),
            (g1, self.corner(square.tube, 1, j)),
            (g1, self.corner(square.tube, 1, i)),
        )

    def walk_image(self, s: int) -> set:
        """Vertices of X_s visited by some attaching walk."""
        image = set()
        graph = self.graph(s)
        for tube in self.tubes:
            for end in tube.ends:
                if end.graph == s:
                    image.update(step_tail(graph, step) for step in end.walk)
        return image

    def is_point(self) -> bool:
        return (
            len(self.vertex_graphs) == 1
            and not self.tubes
            and self.graph(0).n_vertices == 1
        )

    # -- validation ------------------------------------------------------

    def validate(self) -> ValidationReport:
        """Check the conditions of a nonpositively curved tubular graph of graphs."""
        from complexes.links import vertex_links

        report = ValidationReport()
        if not is_connected(self.underlying):
            components = connected_components(self.underlying)
            report.add(
                'disconnected-underlying-graph', '/tubes',
                f"underlying graph has {len(components)} components",
            )
        for s, vertex_graph in enumerate(self.vertex_graphs):
            if not is_connected(vertex_graph.graph):
                report.add(
                    'disconnected-vertex-graph', f"/vertex_graphs/{s}",
                    f"{vertex_graph.name!r} has {len(connected_components(vertex_graph.graph))} components",
                )

        walks_closed = True
        for a, tube in enumerate(self.tubes):
            for side, end in enumerate(tube.ends):
                graph = self.graph(end.graph)
                walk = end.walk
                for i, step in enumerate(walk):
                    following = walk[(i + 1) % len(walk)]
                    position = f"/tubes/{a}/end{side}/walk/{i}"
                    if step_head(graph, step) != step_tail(graph, following):
                        walks_closed = False
                        report.add('open-walk', position, f"step {step} does not end where step {following} starts")
                    elif following == -step:
                        report.add('not-immersed', position, f"step {step} is followed by its reverse")

        if walks_closed:
            for (s, v), link in vertex_links(self).items():
                for first, second in link.parallel_pairs():
                    report.add(
                        'bigon', f"/vertex_graphs/{s}/vertices/{v}",
                        f"link vertices {link.describe(first)} and {link.describe(second)} are joined twice",
                    )
            self._check_duplicate_tubes(report)

        if report.violations:
            logger.debug("validation found %d violations", len(report.violations))
        return report

    def _check_duplicate_tubes(self, report: ValidationReport):
        seen = {}
        for a, tube in enumerate(self.tubes):
            key = tube_key(tube)
            if key not in seen:
                seen[key] = a
                continue
            first = seen[key]
            side, index = twin_corner(self.tubes[first], tube)
            end = self.tubes[first].ends[0]
            vertex = self.corner(first, 0, 0)
            report.add(
                'bigon', f"/vertex_graphs/{end.graph}/vertices/{vertex}",
                f"tubes {first} and {a} share every square: horizontal link vertices "
                f"(tube {first}, end0, 0) and (tube {a}, end{side}, {index}) are twins",
            )

    # -- comparison ------------------------------------------------------

    def _identity(self):
        return (
            tuple((vg.name, vg.graph.n_vertices, vg.graph.edges) for vg in self.vertex_graphs),
            tuple((t.length, t.ends) for t in self.tubes),
        )

    def __eq__(self, other):
        if not isinstance(other, TubularComplex):
            return NotImplemented
        return self._identity() == other._identity()

    def __hash__(self):
        return hash(self._identity())

    def __repr__(self):
        return (
            f"TubularComplex(graphs={[vg.name for vg in self.vertex_graphs]}, "
            f"tubes={len(self.tubes)}, squares={self.n_squares})"
        )


def _tube_variants(tube: Tube):
    """Yield (swapped, reversed, offset, ends) for every re-parametrisation of a tube."""
    length = tube.length
    for swapped in (False, True):
        first, second = (tube.ends[1], tube.ends[0]) if swapped else tube.ends
        for reversed_ in (False, True):
            w0 = reverse_walk(first.walk) if reversed_ else first.walk
            w1 = reverse_walk(second.walk) if reversed_ else second.walk
            for offset in range(length):
                yield swapped, reversed_, offset, (
                    first.graph, rotate_walk(w0, offset), second.graph, rotate_walk(w1, offset)
                )


def tube_key(tube: Tube):
    """Canonical form of a tube up to rotation, simultaneous reversal and end swap."""
    return min(ends for _, _, _, ends in _tube_variants(tube))


def twin_corner(reference: Tube, duplicate: Tube) -> Tuple[int, int]:
    """(side, circle vertex) of duplicate matching circle vertex 0 on end0 of reference."""
    target = (reference.ends[0].graph, reference.ends[0].walk, reference.ends[1].graph, reference.ends[1].walk)
    length = duplicate.length
    for swapped, reversed_, offset, ends in _tube_variants(duplicate):
        if ends == target:
            index = (length - offset) % length if reversed_ else offset
            return (1 if swapped else 0), index
    raise ValueError("tubes are not duplicates")
