"""
Numerical invariants of tubular complexes: thickness, cell counts, Euler
characteristic and rational Betti numbers.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from scipy.sparse import lil_matrix

from complexes.tubular import TubularComplex, step_edge, step_tail
from utils.errors import GraphError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CellCounts:
    vertices: int
    edges: int
    squares: int

    @classmethod
    def of(cls, c: TubularComplex) -> 'CellCounts':
        return cls(c.n_vertices, c.n_vertical_edges, c.n_squares)

    def to_dict(self) -> dict:
        return {'vertices': self.vertices, 'edges': self.edges, 'squares': self.squares}


def thickness_table(c: TubularComplex) -> List[List[int]]:
    """Thickness of every vertical edge, indexed [graph][edge]."""
    table = [[0] * vg.graph.n_edges for vg in c.vertex_graphs]
    for tube in c.tubes:
        for end in tube.ends:
            row = table[end.graph]
            for step in end.walk:
                row[step_edge(step)] += 1
    return table


def thickness(c: TubularComplex, s: int, edge: int) -> int:
    """Number of squares containing edge `edge` of X_s."""
    if not 0 <= s < len(c.vertex_graphs):
        raise GraphError(f"unknown vertex graph {s}")
    if not 0 <= edge < c.graph(s).n_edges:
        raise GraphError(f"unknown edge {edge} of graph {s}")
    count = 0
    for tube in c.tubes:
        for end in tube.ends:
            if end.graph == s:
                count += sum(1 for step in end.walk if step_edge(step) == edge)
    return count


def euler_characteristic(c: TubularComplex) -> int:
    """V - E + F of the square complex, counting horizontal edges separately."""
    vertices = c.n_vertices
    edges = c.n_vertical_edges + c.n_squares
    faces = c.n_squares
    return vertices - edges + faces


def euler_characteristic_of_graphs(c: TubularComplex) -> int:
    """Sum of the vertex graph characteristics, an independent count of the same number."""
    return sum(vg.graph.euler_characteristic() for vg in c.vertex_graphs)


def _rank(matrix) -> int:
    if min(matrix.shape) == 0:
        return 0
    return int(np.linalg.matrix_rank(matrix.toarray()))


def boundary_matrices(c: TubularComplex):
    """Cellular boundary maps d1 (edges -> vertices) and d2 (squares -> edges).

    Edges are the vertical edges graph by graph, followed by the horizontal
    edges tube by tube. The horizontal edge at circle vertex i runs from its
    end0 corner to its end1 corner.
    """
    vertex_offset = []
    edge_offset = []
    n_vertices = n_vertical = 0
    for vg in c.vertex_graphs:
        vertex_offset.append(n_vertices)
        edge_offset.append(n_vertical)
        n_vertices += vg.graph.n_vertices
        n_vertical += vg.graph.n_edges

    horizontal_offset = []
    n_edges = n_vertical
    for tube in c.tubes:
        horizontal_offset.append(n_edges)
        n_edges += tube.length
    n_squares = c.n_squares

    d1 = lil_matrix((n_vertices, n_edges), dtype=np.int64)
    for s, vg in enumerate(c.vertex_graphs):
        for index, (u, v) in enumerate(vg.graph.edges):
            column = edge_offset[s] + index
            d1[vertex_offset[s] + u, column] -= 1
            d1[vertex_offset[s] + v, column] += 1

    d2 = lil_matrix((n_edges, n_squares), dtype=np.int64)
    face = 0
    for a, tube in enumerate(c.tubes):
        (g0, w0), (g1, w1) = ((end.graph, end.walk) for end in tube.ends)
        graph0, graph1 = c.graph(g0), c.graph(g1)
        for i in range(tube.length):
            h = horizontal_offset[a] + i
            d1[vertex_offset[g0] + step_tail(graph0, w0[i]), h] -= 1
            d1[vertex_offset[g1] + step_tail(graph1, w1[i]), h] += 1

            following = horizontal_offset[a] + (i + 1) % tube.length
            d2[edge_offset[g0] + step_edge(w0[i]), face] += 1 if w0[i] > 0 else -1
            d2[following, face] += 1
            d2[edge_offset[g1] + step_edge(w1[i]), face] -= 1 if w1[i] > 0 else -1
            d2[h, face] -= 1
            face += 1

    return d1, d2


def betti_numbers(c: TubularComplex) -> Tuple[int, int, int]:
    """Ranks of the rational homology in degrees 0, 1 and 2."""
    d1, d2 = boundary_matrices(c)
    r1, r2 = _rank(d1), _rank(d2)
    return d1.shape[0] - r1, d1.shape[1] - r1 - r2, d2.shape[1] - r2


def betti1(c: TubularComplex) -> int:
    """Rank of the first rational homology."""
    return betti_numbers(c)[1]


def euler_characteristic_from_homology(c: TubularComplex) -> int:
    b0, b1, b2 = betti_numbers(c)
    return b0 - b1 + b2

