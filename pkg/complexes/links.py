"""
Vertex links of a tubular graph of graphs.

The link of a vertex u of X_s has one vertical vertex per edge of X_s at u
and one horizontal vertex per (tube, side, circle vertex) sent to u. The
horizontal vertex at circle vertex i joins the edges of steps i-1 and i, one
link edge for each of the two squares meeting there.
"""

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Dict, List, Tuple

import networkx as nx

from complexes.tubular import TubularComplex, step_edge, step_tail
from utils.errors import GraphError, MalformedComplexError
from utils.graph_core import MultiGraph, articulation_points, connected_components

logger = logging.getLogger(__name__)

VERTICAL = 'vertical'
HORIZONTAL = 'horizontal'

HorizontalVertex = Tuple[int, int, int]


@dataclass(frozen=True)
class LinkGraph:
    graph_index: int
    vertex: int
    vertical: Tuple[int, ...]
    horizontal: Tuple[HorizontalVertex, ...]
    graph: MultiGraph
    corners: Tuple[Tuple[int, int], ...]

    @property
    def n_vertical(self) -> int:
        return len(self.vertical)

    def is_vertical(self, node: int) -> bool:
        return node < self.n_vertical

    def node_of_edge(self, edge: int) -> int:
        return self.vertical.index(edge)

    def describe(self, node: int) -> str:
        if self.is_vertical(node):
            return f"edge {self.vertical[node]}"
        tube, side, index = self.horizontal[node - self.n_vertical]
        return f"(tube {tube}, end{side}, {index})"

    def components(self) -> List[List[int]]:
        return connected_components(self.graph)

    def is_connected(self) -> bool:
        return self.graph.n_vertices > 0 and len(self.components()) == 1

    def cut_vertices(self) -> List[int]:
        return sorted(articulation_points(self.graph))

    def valence(self, node: int) -> int:
        return self.graph.degree(node)

    def parallel_pairs(self) -> List[Tuple[int, int]]:
        """Pairs of link vertices joined by more than one link edge."""
        counts = Counter(tuple(sorted(edge)) for edge in self.graph.edges)
        return sorted(pair for pair, count in counts.items() if count > 1)

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        for node in self.graph.vertices:
            g.add_node(node, kind=VERTICAL if self.is_vertical(node) else HORIZONTAL, label=self.describe(node))
        for (u, v), corner in zip(self.graph.edges, self.corners):
            g.add_edge(u, v, square=corner)
        return g


def _horizontal_vertices(c: TubularComplex) -> Dict[Tuple[int, int], List[HorizontalVertex]]:
    buckets = defaultdict(list)
    for a, tube in enumerate(c.tubes):
        for side, end in enumerate(tube.ends):
            graph = c.graph(end.graph)
            for i, step in enumerate(end.walk):
                buckets[(end.graph, step_tail(graph, step))].append((a, side, i))
    return buckets


def _assemble(c: TubularComplex, s: int, u: int, horizontal: List[HorizontalVertex]) -> LinkGraph:
    graph = c.graph(s)
    vertical = tuple(graph.incident_edges(u))
    node_of = {edge: node for node, edge in enumerate(vertical)}
    horizontal = tuple(sorted(horizontal))

    edges = []
    corners = []
    for offset, (a, side, i) in enumerate(horizontal):
        node = len(vertical) + offset
        walk = c.tubes[a].ends[side].walk
        length = len(walk)
        for position in ((i - 1) % length, i):
            edge = step_edge(walk[position])
            if edge not in node_of:
                raise MalformedComplexError(
                    f"/tubes/{a}/end{side}/walk/{position}",
                    f"edge {edge} does not meet vertex {u} of graph {s}",
                )
            edges.append((node_of[edge], node))
            corners.append((a, position))

    return LinkGraph(
        graph_index=s,
        vertex=u,
        vertical=vertical,
        horizontal=horizontal,
        graph=MultiGraph(len(vertical) + len(horizontal), edges),
        corners=tuple(corners),
    )


def vertex_link(c: TubularComplex, s: int, u: int) -> LinkGraph:
    """Link of vertex u of the vertex graph X_s."""
    if not 0 <= s < len(c.vertex_graphs):
        raise GraphError(f"unknown vertex graph {s}")
    if not 0 <= u < c.graph(s).n_vertices:
        raise GraphError(f"unknown vertex {u} of graph {s}")
    horizontal = _horizontal_vertices(c).get((s, u), [])
    return _assemble(c, s, u, horizontal)


def vertex_links(c: TubularComplex) -> Dict[Tuple[int, int], LinkGraph]:
    """Links of every vertex, keyed by (graph, vertex) in ascending order."""
    buckets = _horizontal_vertices(c)
    links = {}
    for s, vertex_graph in enumerate(c.vertex_graphs):
        for u in vertex_graph.graph.vertices:
            links[(s, u)] = _assemble(c, s, u, buckets.get((s, u), []))
    return links
