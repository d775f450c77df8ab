"""
Whitehead graphs of word sets.

Vertex 2(i-1) is b_i^+ and 2(i-1)+1 is b_i^-. A letter enters through its
initial vertex and leaves through its terminal vertex: b_i enters at b_i^+
and leaves at b_i^-, its inverse the other way round. Each cyclically
consecutive pair (x, y) gives an edge from terminal(x) to initial(y).
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import networkx as nx

from freewords.words import Word
from utils.errors import WordError
from utils.graph_core import MultiGraph, articulation_points, connected_components


def initial_vertex(letter: int) -> int:
    base = 2 * (abs(letter) - 1)
    return base if letter > 0 else base + 1


def terminal_vertex(letter: int) -> int:
    base = 2 * (abs(letter) - 1)
    return base + 1 if letter > 0 else base


def vertex_label(vertex: int) -> str:
    return f"b{vertex // 2 + 1}{'+' if vertex % 2 == 0 else '-'}"


@dataclass(frozen=True)
class WhiteheadGraph:
    rank: int
    edges: Tuple[Tuple[int, int], ...]

    @property
    def graph(self) -> MultiGraph:
        return MultiGraph(2 * self.rank, self.edges)

    @property
    def n_vertices(self) -> int:
        return 2 * self.rank

    def components(self) -> List[List[int]]:
        return connected_components(self.graph)

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def cut_vertices(self) -> List[int]:
        return sorted(articulation_points(self.graph))

    def labels(self) -> List[str]:
        return [vertex_label(v) for v in range(self.n_vertices)]

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        for v in range(self.n_vertices):
            g.add_node(v, label=vertex_label(v))
        g.add_edges_from(self.edges)
        return g

    def subdivision(self) -> nx.Graph:
        """First subdivision, original vertices marked vertical and midpoints horizontal."""
        g = nx.Graph()
        for v in range(self.n_vertices):
            g.add_node(('vertex', v), kind='vertical')
        for k, (u, v) in enumerate(self.edges):
            midpoint = ('edge', k)
            g.add_node(midpoint, kind='horizontal')
            g.add_edge(('vertex', u), midpoint)
            g.add_edge(midpoint, ('vertex', v))
        return g


def whitehead_graph(rank: int, words: Sequence[Word]) -> WhiteheadGraph:
    edges = []
    for word in words:
        if word.rank != rank:
            raise WordError(f"word {word} has rank {word.rank}, expected {rank}")
        letters = word.letters
        for k, letter in enumerate(letters):
            following = letters[(k + 1) % len(letters)]
            edges.append((terminal_vertex(letter), initial_vertex(following)))
    return WhiteheadGraph(rank, tuple(edges))
