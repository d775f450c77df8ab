"""
Collapsing hanging trees.

A hanging tree is a subtree of a vertex graph that meets the rest of the
complex in a single vertex and carries no walk. Collapsing it is a homotopy
equivalence.
"""

import logging

from complexes.tubular import Tube, TubeEnd, TubularComplex, VertexGraph, step_edge
from utils.graph_core import prune_hanging_trees

logger = logging.getLogger(__name__)


def _protected(c: TubularComplex, s: int):
    return c.walk_image(s)


def has_hanging_trees(c: TubularComplex) -> bool:
    for s in range(len(c.vertex_graphs)):
        if prune_hanging_trees(c.graph(s), _protected(c, s)).changed:
            return True
    return False


def collapse_hanging_trees(c: TubularComplex) -> TubularComplex:
    """Prune every vertex graph down to its core, keeping walk images intact."""
    results = [prune_hanging_trees(c.graph(s), _protected(c, s)) for s in range(len(c.vertex_graphs))]
    if not any(result.changed for result in results):
        return c

    vertex_graphs = [VertexGraph(vg.name, result.graph) for vg, result in zip(c.vertex_graphs, results)]
    tubes = []
    for tube in c.tubes:
        ends = []
        for end in tube.ends:
            edge_map = results[end.graph].edge_map
            walk = tuple((edge_map[step_edge(step)] + 1) * (1 if step > 0 else -1) for step in end.walk)
            ends.append(TubeEnd(end.graph, walk))
        tubes.append(Tube(tube.length, (ends[0], ends[1])))

    removed = sum(len(result.removed_edges) for result in results)
    logger.debug("collapsed hanging trees: %d edges removed", removed)
    return TubularComplex(vertex_graphs, tubes)
