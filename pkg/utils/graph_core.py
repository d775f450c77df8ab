"""
Finite graphs with half-edge bookkeeping.

Vertices are dense integers 0..n-1 and every traversal is in ascending id
order, so everything built on top of these graphs is deterministic.
"""

import heapq
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Set, Tuple

import networkx as nx

from utils.errors import GraphError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class MultiGraph:
    """Graph on vertices 0..n-1; loops and parallel edges are allowed."""

    def __init__(self, n_vertices: int, edges: Iterable[Edge] = ()):
        self.n_vertices = int(n_vertices)
        self.edges: Tuple[Edge, ...] = tuple((int(u), int(v)) for u, v in edges)
        if self.n_vertices < 0:
            raise GraphError("vertex count must be nonnegative")

        self._incidence: List[List[Tuple[int, int]]] = [[] for _ in range(self.n_vertices)]
        for index, (u, v) in enumerate(self.edges):
            for end in (u, v):
                if not 0 <= end < self.n_vertices:
                    raise GraphError(f"edge {index} = ({u}, {v}) has an endpoint outside 0..{self.n_vertices - 1}")
            self._incidence[u].append((index, v))
            self._incidence[v].append((index, u))
        for entries in self._incidence:
            entries.sort()

    @property
    def vertices(self) -> range:
        return range(self.n_vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def incidence(self, v: int) -> List[Tuple[int, int]]:
        """(edge id, neighbour) pairs at v; a loop is listed twice."""
        self._check_vertex(v)
        return self._incidence[v]

    def degree(self, v: int) -> int:
        return len(self.incidence(v))

    def neighbours(self, v: int) -> List[int]:
        return sorted({w for _, w in self.incidence(v)})

    def incident_edges(self, v: int) -> List[int]:
        return sorted({e for e, _ in self.incidence(v)})

    def other_end(self, edge: int, v: int) -> int:
        u, w = self.edges[edge]
        if v == u:
            return w
        if v == w:
            return u
        raise GraphError(f"vertex {v} is not an endpoint of edge {edge}")

    def half_edges(self) -> List[Tuple[int, int]]:
        """Directed sides (edge id, anchor vertex); exactly two per edge."""
        sides = []
        for index, (u, v) in enumerate(self.edges):
            sides.append((index, u))
            sides.append((index, v))
        return sides

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges

    def cycle_rank(self) -> int:
        return self.n_edges - self.n_vertices + len(connected_components(self))

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    def _check_vertex(self, v: int):
        if not 0 <= v < self.n_vertices:
            raise GraphError(f"unknown vertex {v}")

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return (self.n_vertices, self.edges) == (other.n_vertices, other.edges)

    def __hash__(self):
        return hash((self.n_vertices, self.edges))

    def __repr__(self):
        return f"{type(self).__name__}(n_vertices={self.n_vertices}, edges={list(self.edges)})"


class SimplicialGraph(MultiGraph):
    """Graph with neither loops nor parallel edges."""

    def __init__(self, n_vertices: int, edges: Iterable[Edge] = ()):
        super().__init__(n_vertices, edges)
        self._index: Dict[frozenset, int] = {}
        for index, (u, v) in enumerate(self.edges):
            if u == v:
                raise GraphError(f"edge {index} is a loop at vertex {u}")
            key = frozenset((u, v))
            if key in self._index:
                raise GraphError(f"edges {self._index[key]} and {index} both join {u} and {v}")
            self._index[key] = index

    def edge_between(self, u: int, v: int) -> Optional[int]:
        return self._index.get(frozenset((u, v)))


def connected_components(g: MultiGraph) -> List[List[int]]:
    """Vertex classes of g, each ascending, ordered by their least vertex."""
    seen = [False] * g.n_vertices
    components = []
    for root in g.vertices:
        if seen[root]:
            continue
        seen[root] = True
        component = [root]
        frontier = [root]
        while frontier:
            v = frontier.pop()
            for _, w in g.incidence(v):
                if not seen[w]:
                    seen[w] = True
                    component.append(w)
                    frontier.append(w)
        components.append(sorted(component))
    return components


def is_connected(g: MultiGraph) -> bool:
    return len(connected_components(g)) <= 1


def articulation_points(g: MultiGraph) -> Set[int]:
    """Cut vertices of every component, by one iterative low-link pass.

    The parent edge is skipped by id rather than by endpoint, so a parallel
    edge back to the parent counts as a back edge. Loops never matter.
    """
    disc = [-1] * g.n_vertices
    low = [0] * g.n_vertices
    points: Set[int] = set()
    counter = 0

    for root in g.vertices:
        if disc[root] != -1:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        stack = [(root, -1, iter(g.incidence(root)))]

        while stack:
            v, parent_edge, neighbours = stack[-1]
            descended = False
            for edge, w in neighbours:
                if edge == parent_edge:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, edge, iter(g.incidence(w))))
                    descended = True
                    break
                low[v] = min(low[v], disc[w])
            if descended:
                continue

            stack.pop()
            if not stack:
                continue
            parent = stack[-1][0]
            low[parent] = min(low[parent], low[v])
            if parent == root:
                root_children += 1
            elif low[v] >= disc[parent]:
                points.add(parent)

        if root_children > 1:
            points.add(root)

    return points


@dataclass(frozen=True)
class PruneResult:
    graph: SimplicialGraph
    vertex_map: Dict[int, int]
    edge_map: Dict[int, int]
    removed_vertices: Tuple[int, ...]
    removed_edges: Tuple[int, ...]

    @property
    def changed(self) -> bool:
        return bool(self.removed_vertices or self.removed_edges)


def prune_hanging_trees(g: SimplicialGraph, protected: Iterable[int] = ()) -> PruneResult:
    """Strip unprotected leaves until none remain.

    A component that is a tree without protected vertices collapses to its
    least vertex. Survivors are renumbered in ascending order.
    """
    protected = set(protected)
    alive_vertices = [True] * g.n_vertices
    alive_edges = [True] * g.n_edges
    degree = [g.degree(v) for v in g.vertices]

    for component in connected_components(g):
        component_edges = {e for v in component for e, _ in g.incidence(v)}
        if len(component_edges) == len(component) - 1 and not protected.intersection(component):
            for v in component[1:]:
                alive_vertices[v] = False
            for e in component_edges:
                alive_edges[e] = False
            degree[component[0]] = 0

    leaves = [v for v in g.vertices if alive_vertices[v] and degree[v] == 1 and v not in protected]
    heapq.heapify(leaves)
    while leaves:
        v = heapq.heappop(leaves)
        if not alive_vertices[v] or degree[v] != 1:
            continue
        alive_vertices[v] = False
        degree[v] = 0
        for edge, w in g.incidence(v):
            if not alive_edges[edge]:
                continue
            alive_edges[edge] = False
            degree[w] -= 1
            if degree[w] == 1 and w not in protected:
                heapq.heappush(leaves, w)

    vertex_map = {}
    for v in g.vertices:
        if alive_vertices[v]:
            vertex_map[v] = len(vertex_map)
    edge_map = {}
    edges = []
    for index, (u, v) in enumerate(g.edges):
        if alive_edges[index]:
            edge_map[index] = len(edges)
            edges.append((vertex_map[u], vertex_map[v]))

    result = PruneResult(
        graph=SimplicialGraph(len(vertex_map), edges),
        vertex_map=vertex_map,
        edge_map=edge_map,
        removed_vertices=tuple(v for v in g.vertices if not alive_vertices[v]),
        removed_edges=tuple(e for e in range(g.n_edges) if not alive_edges[e]),
    )
    if result.changed:
        logger.debug("pruned %d vertices and %d edges", len(result.removed_vertices), len(result.removed_edges))
    return result
