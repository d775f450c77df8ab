import pytest

from complexes.generators import (
    annulus_with_rudimentary_end,
    random_corpus,
    torus,
    torus_with_chord,
    torus_with_pendant,
    triangle,
    wedge_of_tori,
)
from complexes.invariants import CellCounts, betti1
from complexes.tubular import Tube, TubeEnd, TubularComplex, VertexGraph
from data.document import check_schema, dumps_complex, loads_complex
from data.export import decomposition_to_dict
from decomposition.engine import (
    CASCADE,
    COLLAPSE,
    RUDIMENTARY,
    SL_MOVE,
    CutRecord,
    DecompositionEngine,
    Outcome,
    TraceEvent,
    canonical_order,
)
from moves.witness import Witness, WitnessKind, is_brady_meier
from utils.errors import DecompositionError, MoveError, ValidationError
from utils.graph_core import SimplicialGraph

from tests.helpers import chorded_square_tube, double_of

POINT = TubularComplex([VertexGraph('p', SimplicialGraph(1))])


def test_torus_is_brady_meier(engine):
    form = engine.normalize(torus())
    assert form.outcome == Outcome.BRADY_MEIER
    assert form.move_count == 0
    assert form.trace == []
    assert form.complex == torus()
    assert form.witness is None


def test_wedge_is_wedge_like(engine):
    form = engine.normalize(wedge_of_tori())
    assert form.outcome == Outcome.WEDGE_LIKE
    assert form.witness == Witness(WitnessKind.DISCONNECTED_LINK, 0, 0)


def test_graphs_and_points(engine):
    assert engine.normalize(triangle()).outcome == Outcome.FREE_GRAPH
    assert engine.normalize(POINT).outcome == Outcome.POINT

    tree = TubularComplex([VertexGraph('t', SimplicialGraph(3, [(0, 1), (1, 2)]))])
    form = engine.normalize(tree)
    assert form.outcome == Outcome.POINT
    assert [event.kind for event in form.trace] == [COLLAPSE]


def test_cleanup_steps_are_traced(engine):
    form = engine.normalize(torus_with_pendant())
    assert form.outcome == Outcome.BRADY_MEIER
    (event,) = form.trace
    assert (event.step, event.kind, event.location) == (1, COLLAPSE, None)
    assert event.before == CellCounts(4, 4, 3)
    assert event.after == CellCounts(3, 3, 3)

    form = engine.normalize(annulus_with_rudimentary_end())
    (event,) = form.trace
    assert (event.step, event.kind) == (2, RUDIMENTARY)
    assert event.before == CellCounts(6, 6, 6)
    assert event.after == CellCounts(3, 3, 3)
    assert form.complex == torus()


def test_invalid_input_is_rejected(engine):
    graph = SimplicialGraph(3, [(0, 1), (1, 2), (2, 0)])
    tube = Tube(3, (TubeEnd(0, (1, 2, 3)), TubeEnd(0, (1, 2, 3))))
    doubled = TubularComplex([VertexGraph('s', graph)], [tube, tube])
    with pytest.raises(ValidationError) as info:
        engine.normalize(doubled)
    assert info.value.report.kinds() == ['bigon']
    with pytest.raises(ValidationError):
        engine.grushko(doubled)


def test_one_opening_then_free_edge(engine):
    c = double_of(2, 'aabab')
    form = engine.normalize(c)
    assert form.outcome == Outcome.WEDGE_LIKE
    assert form.move_count == 1
    assert form.witness == Witness(WitnessKind.THICKNESS_ONE_EDGE, 0, 0)
    assert form.trace[0].to_dict() == {
        'step': 7,
        'kind': SL_MOVE,
        'location': {'graph': 0, 'vertex': 0, 'edge': 0, 'components': 2},
        'before': {'vertices': 10, 'edges': 12, 'squares': 15},
        'after': {'vertices': 11, 'edges': 13, 'squares': 15},
    }
    assert form.move_count <= c.n_squares


def test_opening_limit(engine):
    with pytest.raises(DecompositionError):
        DecompositionEngine(max_sl_moves=0).normalize(double_of(2, 'aabab'))


def test_replay_reproduces_normal_form(engine):
    for c in [double_of(2, 'aabab'), torus_with_pendant(), annulus_with_rudimentary_end(), wedge_of_tori()]:
        form = engine.normalize(c)
        replayed = engine.replay(c, form.trace)
        assert replayed.outcome == form.outcome
        assert replayed.witness == form.witness
        assert dumps_complex(replayed.complex) == dumps_complex(form.complex)


def test_replay_detects_a_broken_trace(engine):
    form = engine.normalize(double_of(2, 'aabab'))
    with pytest.raises(MoveError):
        engine.replay(double_of(2, 'abAB'), form.trace)


def test_cut_wedge_at_vertex(engine):
    pieces, delta = engine.cut(wedge_of_tori(), Witness(WitnessKind.DISCONNECTED_LINK, 0, 0))
    assert delta == 0
    assert len(pieces) == 2
    assert pieces[0] == torus()
    assert pieces[1].graph(0).edges == ((2, 0), (0, 1), (1, 2))
    assert pieces[1].tubes[0].walk(0) == (1, 2, 3)
    assert all(is_brady_meier(piece) for piece in pieces)


def test_cut_non_separating_edge(engine):
    pieces, delta = engine.cut(torus_with_chord(), Witness(WitnessKind.THICKNESS_ZERO_EDGE, 0, 4))
    assert delta == 1
    (piece,) = pieces
    assert piece.graph(0).edges == ((0, 1), (1, 2), (2, 3), (3, 0))
    assert betti1(piece) + delta == betti1(torus_with_chord()) == 3


def test_cut_separating_edge(engine):
    graph = SimplicialGraph(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 3)])
    tubes = [
        Tube(3, (TubeEnd(0, (1, 2, 3)), TubeEnd(0, (1, 2, 3)))),
        Tube(3, (TubeEnd(0, (5, 6, 7)), TubeEnd(0, (5, 6, 7)))),
    ]
    dumbbell = TubularComplex([VertexGraph('s', graph)], tubes)
    pieces, delta = engine.cut(dumbbell, Witness(WitnessKind.THICKNESS_ZERO_EDGE, 0, 3))
    assert (len(pieces), delta) == (2, 0)
    decomposition = engine.grushko(dumbbell)
    assert len(decomposition.pieces) == 2
    assert decomposition.free_rank == 0


def test_cut_rejects_bad_witnesses(engine):
    with pytest.raises(MoveError):
        engine.cut(torus(), Witness(WitnessKind.THICKNESS_ONE_EDGE, 0, 0))
    with pytest.raises(MoveError):
        engine.cut(torus(), Witness(WitnessKind.DISCONNECTED_LINK, 0, 0))


def test_grushko_fixtures(engine):
    decomposition = engine.grushko(torus())
    assert decomposition.pieces == [torus()]
    assert decomposition.free_rank == 0
    assert decomposition.cut_log == []

    decomposition = engine.grushko(wedge_of_tori())
    assert len(decomposition.pieces) == 2
    assert decomposition.pieces[0] == torus()
    assert decomposition.free_rank == 0
    assert decomposition.cut_log == [
        CutRecord(0, {'kind': 'DisconnectedLink', 'graph': 0, 'graph_name': 's', 'vertex': 0}, 2, 0, 0)
    ]
    assert sum(betti1(piece) for piece in decomposition.pieces) == betti1(wedge_of_tori()) == 4

    decomposition = engine.grushko(triangle())
    assert decomposition.pieces == []
    assert decomposition.free_rank == 1

    decomposition = engine.grushko(torus_with_chord())
    assert len(decomposition.pieces) == 1
    assert decomposition.free_rank == 1
    assert decomposition.n_factors == 2

    assert engine.grushko(POINT).n_factors == 0


def test_grushko_after_cascade(engine):
    c = chorded_square_tube((1, 2, -5), (5, 3, 4))
    decomposition = engine.grushko(c)
    assert decomposition.pieces == []
    assert decomposition.free_rank == 2
    assert decomposition.trace == [
        TraceEvent(4, CASCADE, {'depth': 0, 'tubes': 1}, CellCounts(4, 5, 3), CellCounts(6, 7, 0))
    ]
    record = decomposition_to_dict(decomposition, betti1(c))
    check_schema(record, 'decomposition')
    assert record['trace'][0]['kind'] == 'thickness-one'

    replayed = engine.replay(c, decomposition.trace)
    assert replayed.outcome == Outcome.FREE_GRAPH
    assert replayed.complex.graph(0).n_edges == 7


def test_grushko_without_free_tubes_has_no_cascade_events(engine):
    assert engine.grushko(wedge_of_tori()).trace == []
    assert engine.grushko(torus_with_chord()).trace == []


def test_grushko_of_free_double(engine):
    decomposition = engine.grushko(double_of(2, 'aabab'))
    assert decomposition.pieces == []
    assert decomposition.free_rank == 3


def test_cut_limit():
    with pytest.raises(DecompositionError):
        DecompositionEngine(max_cuts=0).grushko(wedge_of_tori())


def test_canonical_order_is_independent_of_input_order():
    pieces = [wedge_of_tori(), torus(), torus_with_chord()]
    assert canonical_order(pieces) == canonical_order(list(reversed(pieces)))
    assert canonical_order(pieces)[0] == torus()


def _check_decomposition(engine, c):
    decomposition = engine.grushko(c)
    assert betti1(c) == sum(betti1(piece) for piece in decomposition.pieces) + decomposition.free_rank
    assert sum(piece.n_squares for piece in decomposition.pieces) <= c.n_squares
    for piece in decomposition.pieces:
        reloaded = loads_complex(dumps_complex(piece))
        assert is_brady_meier(reloaded)
        again = engine.grushko(reloaded)
        assert again.pieces == [reloaded]
        assert again.free_rank == 0
    return decomposition


def test_grushko_identities_on_fixtures(engine, all_fixtures):
    for c in all_fixtures.values():
        _check_decomposition(engine, c)


@pytest.mark.slow
def test_grushko_identities_on_random_doubles(engine):
    for c in random_corpus(seed=3, size=120, rank=2, max_squares=40):
        form = engine.normalize(c)
        assert form.move_count <= c.n_squares
        _check_decomposition(engine, c)
    for c in random_corpus(seed=5, size=40, rank=3, max_squares=30):
        _check_decomposition(engine, c)


def test_runs_are_deterministic(engine):
    c = double_of(2, 'aabab')
    first = [event.to_json() for event in engine.normalize(c).trace]
    second = [event.to_json() for event in DecompositionEngine().normalize(c).trace]
    assert first == second
