"""
Removing the squares of a tube that has a free vertical edge.

If a vertical edge e lies in a single square, collapsing that square from e
leaves its horizontal edges free, and the collapse runs once around the tube.
What survives of the tube is one horizontal edge f', joining the two corners
of the circle vertex at the tail of the step through e. f' is absorbed into
the vertical graph: directly if that keeps it simplicial, through one new
vertex if it would double an existing edge, and as a triangle if it is a loop.
"""

import logging
from typing import Optional, Tuple

from complexes.builder import ComplexBuilder
from complexes.invariants import thickness_table
from complexes.tubular import TubularComplex, step_edge

logger = logging.getLogger(__name__)


def first_thickness_one_edge(c: TubularComplex) -> Optional[Tuple[int, int]]:
    for s, row in enumerate(thickness_table(c)):
        for e, count in enumerate(row):
            if count == 1:
                return s, e
    return None


def _traversal(c: TubularComplex, s: int, e: int) -> Tuple[int, int, int]:
    for a, tube in enumerate(c.tubes):
        for side, end in enumerate(tube.ends):
            if end.graph != s:
                continue
            for i, step in enumerate(end.walk):
                if step_edge(step) == e:
                    return a, side, i
    raise LookupError(f"edge {e} of graph {s} is not traversed")


def collapse_free_tube(c: TubularComplex, s: int, e: int) -> TubularComplex:
    """Collapse the tube through the thickness-one edge e of X_s."""
    a, side, i = _traversal(c, s, e)
    tube = c.tubes[a]
    builder = ComplexBuilder.flatten(c)
    p = builder.vertex(tube.ends[0].graph, c.corner(a, 0, i))
    q = builder.vertex(tube.ends[1].graph, c.corner(a, 1, i))

    builder.remove_tube(a)
    builder.remove_edge(builder.edge(s, e))
    if p == q:
        added = builder.add_path(p, p, 2)
    elif builder.adjacent(p, q):
        added = builder.add_path(p, q, 1)
    else:
        added = [builder.add_edge(p, q)]

    (result,) = builder.build()
    logger.debug(
        "collapsed tube %d from edge %d of %r (end%d, step %d); f' became %d edges",
        a, e, c.vertex_graphs[s].name, side, i, len(added),
    )
    return result


def remove_thickness_one_cascade(c: TubularComplex) -> TubularComplex:
    """Collapse tubes from their free edges, lowest (graph, edge) first, until none is free."""
    while True:
        found = first_thickness_one_edge(c)
        if found is None:
            return c
        c = collapse_free_tube(c, *found)
