"""
Normalization loop and Grushko decomposition by cutting.
"""

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from complexes.builder import ComplexBuilder
from complexes.invariants import CellCounts, betti1
from complexes.links import vertex_link, vertex_links
from complexes.tubular import TubularComplex
from data.document import dumps_complex
from moves.hanging_trees import collapse_hanging_trees
from moves.rudimentary import remove_rudimentary_edges
from moves.sl_move import bm2_cut_vertex, open_at, plan_opening
from moves.thickness_one import remove_thickness_one_cascade
from moves.witness import Witness, WitnessKind, find_witness, verify_witness
from utils.errors import DecompositionError, MoveError, ValidationError

logger = logging.getLogger(__name__)


class Outcome(Enum):
    POINT = 'point'
    BRADY_MEIER = 'brady-meier'
    WEDGE_LIKE = 'wedge-like'
    FREE_GRAPH = 'free-graph'


COLLAPSE = 'collapse'
RUDIMENTARY = 'rudimentary'
SL_MOVE = 'sl-move'
CASCADE = 'thickness-one'


@dataclass(frozen=True)
class TraceEvent:
    step: int
    kind: str
    location: Optional[dict]
    before: CellCounts
    after: CellCounts

    def to_dict(self) -> dict:
        return {
            'step': self.step,
            'kind': self.kind,
            'location': self.location,
            'before': self.before.to_dict(),
            'after': self.after.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


@dataclass
class NormalForm:
    outcome: Outcome
    complex: TubularComplex
    witness: Optional[Witness] = None
    trace: List[TraceEvent] = field(default_factory=list)

    @property
    def move_count(self) -> int:
        return sum(1 for event in self.trace if event.kind == SL_MOVE)


@dataclass(frozen=True)
class CutRecord:
    depth: int
    witness: dict
    pieces: int
    delta: int
    collapsed_tubes: int = 0

    def to_dict(self) -> dict:
        return {
            'depth': self.depth,
            'witness': self.witness,
            'pieces': self.pieces,
            'delta': self.delta,
            'collapsed_tubes': self.collapsed_tubes,
        }


@dataclass
class GrushkoDecomposition:
    pieces: List[TubularComplex]
    free_rank: int
    cut_log: List[CutRecord] = field(default_factory=list)
    trace: List[TraceEvent] = field(default_factory=list)

    @property
    def n_factors(self) -> int:
        return len(self.pieces) + self.free_rank


def canonical_order(pieces: Sequence[TubularComplex]) -> List[TubularComplex]:
    return sorted(pieces, key=lambda piece: (piece.n_squares, dumps_complex(piece)))


class DecompositionEngine:
    def __init__(self, max_sl_moves=None, max_cuts=10_000):
        self.max_sl_moves = max_sl_moves
        self.max_cuts = max_cuts

    # -- classification --------------------------------------------------

    def _classify(self, c: TubularComplex):
        """Steps 3 to 6; returns (outcome, witness) or (None, plan) when an opening is due."""
        if c.n_squares == 0:
            return (Outcome.POINT if c.is_point() else Outcome.FREE_GRAPH), None
        witness = find_witness(c)
        if witness is not None:
            return Outcome.WEDGE_LIKE, witness
        for (s, u), link in vertex_links(c).items():
            node = bm2_cut_vertex(link)
            if node is not None:
                return None, plan_opening(c, s, u, link.vertical[node])
        return Outcome.BRADY_MEIER, None

    def normalize(self, c: TubularComplex) -> NormalForm:
        """Collapse, trim, and open vertices until the complex is a point, wedge-like, a graph, or Brady-Meier."""
        report = c.validate()
        if not report.is_valid:
            raise ValidationError(report)

        trace: List[TraceEvent] = []
        for step, kind, move in ((1, COLLAPSE, collapse_hanging_trees), (2, RUDIMENTARY, remove_rudimentary_edges)):
            before = CellCounts.of(c)
            reduced = move(c)
            if reduced != c:
                trace.append(TraceEvent(step, kind, None, before, CellCounts.of(reduced)))
                c = reduced

        bound = self.max_sl_moves if self.max_sl_moves is not None else c.n_squares
        moves = 0
        while True:
            outcome, detail = self._classify(c)
            if outcome is not None:
                logger.debug("normal form %s after %d openings", outcome.value, moves)
                witness = detail if outcome == Outcome.WEDGE_LIKE else None
                return NormalForm(outcome, c, witness, trace)
            if moves >= bound:
                raise DecompositionError(f"more than {bound} openings without reaching a normal form")
            before = CellCounts.of(c)
            c = open_at(c, detail)
            moves += 1
            trace.append(TraceEvent(7, SL_MOVE, detail.summary(), before, CellCounts.of(c)))

    def replay(self, c: TubularComplex, trace: Sequence[TraceEvent]) -> NormalForm:
        """Re-apply a recorded trace to c and classify what comes out."""
        for event in trace:
            if event.kind == COLLAPSE:
                c = collapse_hanging_trees(c)
            elif event.kind == RUDIMENTARY:
                c = remove_rudimentary_edges(c)
            elif event.kind == CASCADE:
                c = remove_thickness_one_cascade(c)
            elif event.kind == SL_MOVE:
                location = event.location
                c = open_at(c, plan_opening(c, location['graph'], location['vertex'], location['edge']))
            else:
                raise MoveError(f"unknown trace event {event.kind!r}")
            if CellCounts.of(c) != event.after:
                raise MoveError(f"replay of {event.kind} diverged from the recorded cell counts")
        outcome, detail = self._classify(c)
        if outcome is None:
            raise MoveError("trace stops before a normal form is reached")
        witness = detail if outcome == Outcome.WEDGE_LIKE else None
        return NormalForm(outcome, c, witness, list(trace))

    # -- cutting ---------------------------------------------------------

    def cut(self, c: TubularComplex, w: Witness) -> Tuple[List[TubularComplex], int]:
        """Cut along a thickness-zero edge or at a vertex with disconnected link.

        Returns the connected pieces and the change in free rank, which is the
        number of copies the cut makes minus the number of pieces.
        """
        if w.kind == WitnessKind.THICKNESS_ONE_EDGE:
            raise MoveError("thickness-one edges must be collapsed before cutting")
        if not verify_witness(c, w):
            raise MoveError(f"witness does not hold: {w}")

        builder = ComplexBuilder.flatten(c)
        if w.kind == WitnessKind.THICKNESS_ZERO_EDGE:
            builder.remove_edge(builder.edge(w.graph, w.location))
            copies = 2
        else:
            link = vertex_link(c, w.graph, w.location)
            components = link.components()
            copies = len(components)
            if copies < 2:
                raise MoveError(f"link at {w} has no edges to distribute")
            v = builder.vertex(w.graph, w.location)
            for component in components[1:]:
                fresh = builder.add_vertex(builder.origin[v])
                for node in component:
                    if link.is_vertical(node):
                        builder.reattach(builder.edge(w.graph, link.vertical[node]), v, fresh)

        pieces = builder.build()
        delta = copies - len(pieces)
        logger.debug("cut at %s: %d pieces, free rank %+d", w, len(pieces), delta)
        return pieces, delta

    def grushko(self, c: TubularComplex) -> GrushkoDecomposition:
        """Brady-Meier pieces and free rank of the free product decomposition."""
        report = c.validate()
        if not report.is_valid:
            raise ValidationError(report)

        pieces: List[TubularComplex] = []
        free_rank = 0
        cut_log: List[CutRecord] = []
        trace: List[TraceEvent] = []
        stack = [(c, 0)]
        while stack:
            current, depth = stack.pop()
            form = self.normalize(current)
            if form.outcome == Outcome.POINT:
                continue
            if form.outcome == Outcome.BRADY_MEIER:
                pieces.append(form.complex)
                continue
            if form.outcome == Outcome.FREE_GRAPH:
                free_rank += betti1(form.complex)
                continue

            collapsed = remove_thickness_one_cascade(form.complex)
            collapsed_tubes = len(form.complex.tubes) - len(collapsed.tubes)
            if collapsed_tubes:
                location = {'depth': depth, 'tubes': collapsed_tubes}
                trace.append(TraceEvent(4, CASCADE, location, CellCounts.of(form.complex), CellCounts.of(collapsed)))
            witness = find_witness(collapsed) if collapsed.n_squares else None
            if witness is None:
                stack.append((collapsed, depth))
                continue
            parts, delta = self.cut(collapsed, witness)
            free_rank += delta
            cut_log.append(CutRecord(depth, witness.to_dict(collapsed), len(parts), delta, collapsed_tubes))
            if len(cut_log) > self.max_cuts:
                raise DecompositionError(f"more than {self.max_cuts} cuts")
            stack.extend((part, depth + 1) for part in reversed(parts))

        return GrushkoDecomposition(canonical_order(pieces), free_rank, cut_log, trace)
