"""
Opening a vertex whose link has a vertical cut vertex.

When every vertical edge has thickness at least two and the link of u is
connected, the link fails the second Brady-Meier condition exactly when a
vertical link vertex e disconnects it. Opening u along e splits u into one
copy u_i per component C_i of link(u) minus e. Copy u_i keeps the edges f_ij
of C_i and receives its own copy e_i of e, all copies ending at the far end
v of e. Walk steps through e are re-labelled by the copy of the component
containing the step they meet at u, so walk lengths and square counts are
unchanged while the vertex graph gains n - 1 edges.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from complexes.builder import ComplexBuilder
from complexes.links import LinkGraph, vertex_link
from complexes.tubular import TubularComplex, step_edge
from utils.errors import MoveError
from utils.graph_core import MultiGraph, connected_components

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OpeningPlan:
    graph: int
    vertex: int
    cut_edge: int
    far_end: int
    components: Tuple[Tuple[int, ...], ...]
    branches: Tuple[Tuple[int, ...], ...]
    branch_ends: Tuple[Tuple[int, ...], ...]

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def tree_size(self) -> int:
        """Vertex count of the tree replacing the star of u."""
        return 1 + self.n_components + sum(len(branch) for branch in self.branches)

    def component_of_edge(self) -> Dict[int, int]:
        return {f: i for i, branch in enumerate(self.branches) for f in branch}

    def summary(self) -> dict:
        return {
            'graph': self.graph,
            'vertex': self.vertex,
            'edge': self.cut_edge,
            'components': self.n_components,
        }


def bm2_cut_vertex(link: LinkGraph) -> Optional[int]:
    """Least vertical link vertex that disconnects the link, if any."""
    if not link.is_connected():
        raise MoveError(
            f"link of vertex {link.vertex} in graph {link.graph_index} is disconnected; "
            "check connectivity before looking for cut vertices"
        )
    for node in link.cut_vertices():
        if link.is_vertical(node):
            return node
    return None


def plan_opening(c: TubularComplex, s: int, u: int, cut_edge: Optional[int] = None) -> OpeningPlan:
    link = vertex_link(c, s, u)
    if cut_edge is None:
        node = bm2_cut_vertex(link)
        if node is None:
            raise MoveError(f"vertex {u} of graph {s} satisfies the cut vertex condition; nothing to open")
    else:
        if cut_edge not in link.vertical:
            raise MoveError(f"edge {cut_edge} does not meet vertex {u} of graph {s}")
        node = link.node_of_edge(cut_edge)

    keep = [x for x in link.graph.vertices if x != node]
    renumber = {x: i for i, x in enumerate(keep)}
    remainder = MultiGraph(
        len(keep),
        [(renumber[x], renumber[y]) for x, y in link.graph.edges if node not in (x, y)],
    )
    components = tuple(tuple(keep[i] for i in component) for component in connected_components(remainder))
    if len(components) < 2:
        raise MoveError(f"edge {link.vertical[node]} does not disconnect the link of vertex {u} in graph {s}")

    graph = c.graph(s)
    branches = tuple(tuple(link.vertical[x] for x in component if link.is_vertical(x)) for component in components)
    branch_ends = tuple(tuple(graph.other_end(f, u) for f in branch) for branch in branches)
    cut = link.vertical[node]
    return OpeningPlan(
        graph=s,
        vertex=u,
        cut_edge=cut,
        far_end=graph.other_end(cut, u),
        components=components,
        branches=branches,
        branch_ends=branch_ends,
    )


def open_at(c: TubularComplex, plan: OpeningPlan) -> TubularComplex:
    """The SL-complex obtained by opening plan.vertex along plan.cut_edge."""
    if plan != plan_opening(c, plan.graph, plan.vertex, plan.cut_edge):
        raise MoveError(f"plan for vertex {plan.vertex} of graph {plan.graph} does not match the complex")

    builder = ComplexBuilder.flatten(c)
    u = builder.vertex(plan.graph, plan.vertex)
    e = builder.edge(plan.graph, plan.cut_edge)
    v = builder.vertex(plan.graph, plan.far_end)
    e_forward = builder.edges[e][0] == u

    copies = [u]
    cut_copies = [e]
    for i in range(1, plan.n_components):
        u_i = builder.add_vertex(builder.origin[u])
        copies.append(u_i)
        cut_copies.append(builder.add_edge(u_i, v) if e_forward else builder.add_edge(v, u_i))
        for f in plan.branches[i]:
            builder.reattach(builder.edge(plan.graph, f), u, u_i)

    component = plan.component_of_edge()
    graph = c.graph(plan.graph)
    for a, tube in enumerate(c.tubes):
        for side, end in enumerate(tube.ends):
            if end.graph != plan.graph:
                continue
            walk = end.walk
            length = len(walk)
            for i, step in enumerate(walk):
                if step_edge(step) != plan.cut_edge:
                    continue
                leaves_u = (graph.edges[plan.cut_edge][0] == plan.vertex) == (step > 0)
                neighbour = walk[(i - 1) % length] if leaves_u else walk[(i + 1) % length]
                f = step_edge(neighbour)
                if f not in component:
                    raise MoveError(f"walk of tube {a} turns at vertex {plan.vertex} without leaving the cut edge")
                j = component[f]
                if j:
                    builder.replace_step_edge(a, side, i, cut_copies[j])

            for i, step in enumerate(walk):
                following = walk[(i + 1) % length]
                at_u = graph.edges[step_edge(step)][1 if step > 0 else 0] == plan.vertex
                if not at_u or plan.cut_edge in (step_edge(step), step_edge(following)):
                    continue
                if component[step_edge(step)] != component[step_edge(following)]:
                    raise MoveError(
                        f"walk of tube {a} turns at vertex {plan.vertex} between link components"
                    )

    results = builder.build()
    if len(results) != 1:
        raise MoveError(f"opening split the complex into {len(results)} pieces")
    logger.debug(
        "opened vertex %d of graph %d along edge %d into %d copies",
        plan.vertex, plan.graph, plan.cut_edge, plan.n_components,
    )
    return results[0]
