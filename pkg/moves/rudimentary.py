"""
Rudimentary edges: a vertex graph that is a circle with an edge of thickness
one. Such a graph carries exactly one tube side, attached by an isomorphism,
so the tube and the circle deformation retract onto the far end.
"""

import logging
from typing import List, Tuple

from complexes.builder import ComplexBuilder
from complexes.invariants import thickness_table
from complexes.tubular import TubularComplex

logger = logging.getLogger(__name__)


def _is_circle(c: TubularComplex, s: int) -> bool:
    graph = c.graph(s)
    return graph.n_vertices == graph.n_edges and all(graph.degree(v) == 2 for v in graph.vertices)


def rudimentary_edges(c: TubularComplex) -> List[Tuple[int, int]]:
    """(graph, edge) pairs of thickness one on circle vertex graphs, ascending."""
    table = thickness_table(c)
    found = []
    for s in range(len(c.vertex_graphs)):
        if _is_circle(c, s):
            found.extend((s, e) for e, count in enumerate(table[s]) if count == 1)
    return found


def _remove_one(c: TubularComplex, s: int) -> TubularComplex:
    attached = [a for a, tube in enumerate(c.tubes) for end in tube.ends if end.graph == s]
    if len(attached) != 1 or c.tubes[attached[0]].is_loop:
        return c
    builder = ComplexBuilder.flatten(c)
    builder.remove_tube(attached[0])
    for e in range(c.graph(s).n_edges):
        builder.remove_edge(builder.edge(s, e))
    for v in c.graph(s).vertices:
        builder.remove_vertex(builder.vertex(s, v))
    (result,) = builder.build()
    logger.debug("removed rudimentary graph %r with tube %d", c.vertex_graphs[s].name, attached[0])
    return result


def remove_rudimentary_edges(c: TubularComplex) -> TubularComplex:
    """Drop rudimentary circles and their tubes until none remain."""
    while True:
        found = rudimentary_edges(c)
        if not found:
            return c
        s, _ = found[0]
        reduced = _remove_one(c, s)
        if reduced is c:
            return c
        c = reduced
