"""
Mutable workspace used by the simplification moves.

A complex is flattened into a single vertical graph (the disjoint union of
its vertex graphs) plus tubes whose walks refer to global edge ids. Moves
edit that flat picture freely; build() then reads the vertex graphs back off
as the connected components of the vertical graph and groups them into
complexes along the tubes.
"""

import logging
from typing import Dict, List, Optional, Tuple

from complexes.tubular import TubularComplex, Tube, TubeEnd, VertexGraph, step_edge
from utils.errors import GraphError, MoveError
from utils.graph_core import MultiGraph, SimplicialGraph, connected_components

logger = logging.getLogger(__name__)


class ComplexBuilder:
    def __init__(self):
        self.origin: List[Optional[str]] = []
        self.edges: List[Optional[Tuple[int, int]]] = []
        self.tubes: List[Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]] = []
        self.vertex_offset: List[int] = []
        self.edge_offset: List[int] = []

    @classmethod
    def flatten(cls, c: TubularComplex) -> 'ComplexBuilder':
        builder = cls()
        for vg in c.vertex_graphs:
            builder.vertex_offset.append(len(builder.origin))
            builder.edge_offset.append(len(builder.edges))
            first = len(builder.origin)
            builder.origin.extend([vg.name] * vg.graph.n_vertices)
            builder.edges.extend((first + u, first + v) for u, v in vg.graph.edges)
        for tube in c.tubes:
            walks = []
            for end in tube.ends:
                shift = builder.edge_offset[end.graph]
                walks.append(tuple(step + shift if step > 0 else step - shift for step in end.walk))
            builder.tubes.append((walks[0], walks[1]))
        return builder

    # -- addressing ------------------------------------------------------

    def vertex(self, s: int, v: int) -> int:
        return self.vertex_offset[s] + v

    def edge(self, s: int, e: int) -> int:
        return self.edge_offset[s] + e

    def live_edges(self) -> List[int]:
        return [e for e, ends in enumerate(self.edges) if ends is not None]

    def live_tubes(self) -> List[int]:
        return [t for t, walks in enumerate(self.tubes) if walks is not None]

    def incident_edges(self, v: int) -> List[int]:
        return [e for e in self.live_edges() if v in self.edges[e]]

    def adjacent(self, u: int, v: int) -> bool:
        return any(set(self.edges[e]) == {u, v} for e in self.live_edges())

    # -- editing ---------------------------------------------------------

    def add_vertex(self, origin: str) -> int:
        self.origin.append(origin)
        return len(self.origin) - 1

    def remove_vertex(self, v: int):
        if self.incident_edges(v):
            raise MoveError(f"vertex {v} still has edges")
        self.origin[v] = None

    def add_edge(self, u: int, v: int) -> int:
        if u == v:
            raise MoveError(f"refusing to add a loop at {u}")
        self.edges.append((u, v))
        return len(self.edges) - 1

    def remove_edge(self, e: int):
        for walks in self.tubes:
            if walks is not None and any(step_edge(step) == e for walk in walks for step in walk):
                raise MoveError(f"edge {e} is still traversed by a tube")
        self.edges[e] = None

    def reattach(self, e: int, old: int, new: int):
        """Move the `old` endpoint of edge e to vertex `new`."""
        u, v = self.edges[e]
        if old == u:
            self.edges[e] = (new, v)
        elif old == v:
            self.edges[e] = (u, new)
        else:
            raise MoveError(f"vertex {old} is not an endpoint of edge {e}")

    def remove_tube(self, t: int):
        self.tubes[t] = None

    def replace_step_edge(self, t: int, side: int, position: int, edge: int):
        walks = list(self.tubes[t])
        walk = list(walks[side])
        step = walk[position]
        walk[position] = edge + 1 if step > 0 else -(edge + 1)
        walks[side] = tuple(walk)
        self.tubes[t] = (walks[0], walks[1])

    def add_path(self, u: int, v: int, inner: int) -> List[int]:
        """Join u to v by a path through `inner` new vertices; returns the new edges."""
        origin = self.origin[u]
        chain = [u] + [self.add_vertex(origin) for _ in range(inner)] + [v]
        return [self.add_edge(a, b) for a, b in zip(chain, chain[1:])]

    def tail(self, step: int) -> int:
        u, v = self.edges[step_edge(step)]
        return u if step > 0 else v

    # -- reading back ----------------------------------------------------

    def build(self) -> List[TubularComplex]:
        """Connected complexes of the current picture, ordered by least vertex id."""
        live_vertices = [v for v, origin in enumerate(self.origin) if origin is not None]
        index_of = {v: i for i, v in enumerate(live_vertices)}
        live_edges = self.live_edges()
        flat = MultiGraph(
            len(live_vertices),
            [(index_of[self.edges[e][0]], index_of[self.edges[e][1]]) for e in live_edges],
        )
        components = [[live_vertices[i] for i in component] for component in connected_components(flat)]
        component_of: Dict[int, int] = {}
        for k, component in enumerate(components):
            for v in component:
                component_of[v] = k

        # union-find over components joined by tubes
        parent = list(range(len(components)))

        def find(k):
            while parent[k] != k:
                parent[k] = parent[parent[k]]
                k = parent[k]
            return k

        tube_ends = {}
        for t in self.live_tubes():
            ends = tuple(component_of[self.tail(walk[0])] for walk in self.tubes[t])
            tube_ends[t] = ends
            a, b = find(ends[0]), find(ends[1])
            if a != b:
                parent[max(a, b)] = min(a, b)

        groups: Dict[int, List[int]] = {}
        for k in range(len(components)):
            groups.setdefault(find(k), []).append(k)

        complexes = []
        for root in sorted(groups):
            members = groups[root]
            complexes.append(self._assemble(components, members, component_of, tube_ends))
        if len(complexes) > 1:
            logger.debug("workspace fell apart into %d complexes", len(complexes))
        return complexes

    def _assemble(self, components, members, component_of, tube_ends) -> TubularComplex:
        local_vertex = {}
        local_edge = {}
        graph_of = {}
        vertex_graphs = []
        used_names = set()
        for position, k in enumerate(members):
            component = components[k]
            graph_of[k] = position
            for i, v in enumerate(component):
                local_vertex[v] = i
            edges = sorted(e for e in self.live_edges() if component_of[self.edges[e][0]] == k)
            for i, e in enumerate(edges):
                local_edge[e] = i
            name = self._fresh_name(self.origin[component[0]], used_names)
            used_names.add(name)
            try:
                graph = SimplicialGraph(
                    len(component), [(local_vertex[self.edges[e][0]], local_vertex[self.edges[e][1]]) for e in edges]
                )
            except GraphError as exc:
                raise MoveError(f"move produced a non-simplicial vertex graph: {exc}") from exc
            vertex_graphs.append(VertexGraph(name, graph))

        tubes = []
        for t in sorted(tube_ends):
            if tube_ends[t][0] not in graph_of:
                continue
            ends = []
            for walk, k in zip(self.tubes[t], tube_ends[t]):
                local = tuple(
                    (local_edge[step_edge(step)] + 1) * (1 if step > 0 else -1) for step in walk
                )
                ends.append(TubeEnd(graph_of[k], local))
            tubes.append(Tube(len(ends[0].walk), (ends[0], ends[1])))
        return TubularComplex(vertex_graphs, tubes)

    @staticmethod
    def _fresh_name(origin: str, used: set) -> str:
        if origin not in used:
            return origin
        k = 1
        while f"{origin}.{k}" in used:
            k += 1
        return f"{origin}.{k}"
