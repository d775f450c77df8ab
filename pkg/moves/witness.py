"""
Witnesses that a complex is wedge-like, and the Brady-Meier certificate.
"""

import logging
from dataclasses import dataclass
from enum import IntEnum
from typing import Optional

from complexes.invariants import thickness_table
from complexes.links import vertex_link, vertex_links
from complexes.tubular import TubularComplex
from moves.sl_move import bm2_cut_vertex

logger = logging.getLogger(__name__)


class WitnessKind(IntEnum):
    THICKNESS_ZERO_EDGE = 0
    THICKNESS_ONE_EDGE = 1
    DISCONNECTED_LINK = 2

    @property
    def label(self) -> str:
        return {
            WitnessKind.THICKNESS_ZERO_EDGE: 'ThicknessZeroEdge',
            WitnessKind.THICKNESS_ONE_EDGE: 'ThicknessOneEdge',
            WitnessKind.DISCONNECTED_LINK: 'DisconnectedLink',
        }[self]


@dataclass(frozen=True, order=True)
class Witness:
    kind: WitnessKind
    graph: int
    location: int

    def to_dict(self, c: Optional[TubularComplex] = None) -> dict:
        record = {'kind': self.kind.label, 'graph': self.graph}
        if c is not None:
            record['graph_name'] = c.vertex_graphs[self.graph].name
        key = 'vertex' if self.kind == WitnessKind.DISCONNECTED_LINK else 'edge'
        record[key] = self.location
        return record

    def __str__(self):
        noun = 'vertex' if self.kind == WitnessKind.DISCONNECTED_LINK else 'edge'
        return f"{self.kind.label} at {noun} {self.location} of graph {self.graph}"


def find_witness(c: TubularComplex) -> Optional[Witness]:
    """Least witness by (kind, graph, location), or None."""
    table = thickness_table(c)
    for kind, wanted in ((WitnessKind.THICKNESS_ZERO_EDGE, 0), (WitnessKind.THICKNESS_ONE_EDGE, 1)):
        for s, row in enumerate(table):
            for e, count in enumerate(row):
                if count == wanted:
                    return Witness(kind, s, e)
    for (s, u), link in vertex_links(c).items():
        if not link.is_connected():
            return Witness(WitnessKind.DISCONNECTED_LINK, s, u)
    return None


def verify_witness(c: TubularComplex, w: Witness) -> bool:
    if not 0 <= w.graph < len(c.vertex_graphs):
        return False
    graph = c.graph(w.graph)
    if w.kind == WitnessKind.DISCONNECTED_LINK:
        return 0 <= w.location < graph.n_vertices and not vertex_link(c, w.graph, w.location).is_connected()
    if not 0 <= w.location < graph.n_edges:
        return False
    return thickness_table(c)[w.graph][w.location] == int(w.kind)


def is_brady_meier(c: TubularComplex) -> bool:
    """Valid, has squares, every edge in two squares or more, every link connected without vertical cut vertices."""
    if not c.validate().is_valid or c.n_squares == 0:
        return False
    if find_witness(c) is not None:
        return False
    return all(bm2_cut_vertex(link) is None for link in vertex_links(c).values())
