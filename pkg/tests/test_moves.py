import pytest

from complexes.generators import (
    annulus_with_rudimentary_end,
    random_opening_corpus,
    torus,
    torus_with_chord,
    torus_with_pendant,
    triangle,
    wedge_of_tori,
)
from complexes.invariants import betti1, euler_characteristic, thickness_table
from complexes.links import HORIZONTAL, LinkGraph, vertex_link
from complexes.tubular import Tube, TubeEnd, TubularComplex, VertexGraph
from decomposition.engine import SL_MOVE
from moves.hanging_trees import collapse_hanging_trees, has_hanging_trees
from moves.rudimentary import remove_rudimentary_edges, rudimentary_edges
from moves.sl_move import bm2_cut_vertex, open_at, plan_opening
from moves.thickness_one import collapse_free_tube, first_thickness_one_edge, remove_thickness_one_cascade
from moves.witness import Witness, WitnessKind, find_witness, is_brady_meier, verify_witness
from utils.errors import MoveError
from utils.graph_core import MultiGraph, SimplicialGraph

from tests.helpers import chorded_square_tube, double_of


# -- hanging trees ---------------------------------------------------------

def test_pendant_edge_collapses_to_torus():
    c = torus_with_pendant()
    assert has_hanging_trees(c)
    assert collapse_hanging_trees(c) == torus()


def test_collapse_without_trees_returns_input():
    c = torus()
    assert not has_hanging_trees(c)
    assert collapse_hanging_trees(c) is c


def test_tree_without_tubes_collapses_to_point():
    c = TubularComplex([VertexGraph('t', SimplicialGraph(3, [(0, 1), (1, 2)]))])
    assert collapse_hanging_trees(c).is_point()


# -- rudimentary edges -----------------------------------------------------

def test_rudimentary_circle_is_removed():
    c = annulus_with_rudimentary_end()
    assert rudimentary_edges(c) == [(1, 0), (1, 1), (1, 2)]
    reduced = remove_rudimentary_edges(c)
    assert reduced == torus()
    assert betti1(reduced) == betti1(c)
    assert euler_characteristic(reduced) == euler_characteristic(c)
    assert remove_rudimentary_edges(reduced) == reduced


def test_no_rudimentary_edges():
    assert rudimentary_edges(torus()) == []
    assert rudimentary_edges(wedge_of_tori()) == []
    assert remove_rudimentary_edges(wedge_of_tori()) == wedge_of_tori()


# -- thickness-one cascade -------------------------------------------------

@pytest.mark.parametrize('end0, end1, edges', [
    # both corners land on vertex 0: f' becomes a triangle
    ((1, 2, -5), (5, 3, 4), [(1, 2), (2, 3), (3, 0), (0, 2), (0, 4), (4, 5), (5, 0)]),
    # corners 0 and 2 are already joined by the diagonal: f' is subdivided once
    ((1, 2, -5), (3, 4, 5), [(1, 2), (2, 3), (3, 0), (0, 2), (0, 4), (4, 2)]),
    # corners 1 and 3 are not adjacent: f' is added as it is
    ((-1, 5, -2), (4, 5, 3), [(1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]),
])
def test_collapse_free_tube(end0, end1, edges):
    c = chorded_square_tube(end0, end1)
    assert c.validate().is_valid
    assert first_thickness_one_edge(c) == (0, 0)
    result = collapse_free_tube(c, 0, 0)
    assert result.n_squares == 0
    assert result.graph(0).edges == tuple(edges)
    assert result.graph(0).n_vertices == 1 + max(max(edge) for edge in edges)
    assert euler_characteristic(result) == euler_characteristic(c)
    assert betti1(result) == betti1(c) == 2


def test_cascade_leaves_thick_complexes_alone():
    assert remove_thickness_one_cascade(torus()) == torus()


def test_cascade_removes_every_free_tube():
    c = chorded_square_tube((1, 2, -5), (5, 3, 4))
    result = remove_thickness_one_cascade(c)
    assert result.tubes == ()
    assert first_thickness_one_edge(result) is None


def two_free_tubes():
    """Two chorded squares sharing vertex 0, each carrying its own free tube."""
    graph = SimplicialGraph(7, [
        (0, 1), (1, 2), (2, 3), (3, 0), (0, 2),
        (0, 4), (4, 5), (5, 6), (6, 0), (0, 5),
    ])
    tubes = [
        Tube(3, (TubeEnd(0, (-1, 5, -2)), TubeEnd(0, (4, 5, 3)))),
        Tube(3, (TubeEnd(0, (-6, 10, -7)), TubeEnd(0, (9, 10, 8)))),
    ]
    return TubularComplex([VertexGraph('s', graph)], tubes)


def _edge_set(c):
    return sorted(tuple(sorted(edge)) for edge in c.graph(0).edges)


def test_cascade_does_not_depend_on_order():
    c = two_free_tubes()
    assert c.validate().is_valid
    assert first_thickness_one_edge(c) == (0, 0)

    first_tube_first = collapse_free_tube(c, 0, 0)
    first_tube_first = collapse_free_tube(first_tube_first, *first_thickness_one_edge(first_tube_first))
    second_tube_first = collapse_free_tube(c, 0, 5)
    assert second_tube_first.n_squares == 3
    second_tube_first = collapse_free_tube(second_tube_first, *first_thickness_one_edge(second_tube_first))

    cascaded = remove_thickness_one_cascade(c)
    assert cascaded == first_tube_first
    assert cascaded.graph(0).edges == (
        (1, 2), (2, 3), (3, 0), (0, 2), (4, 5), (5, 6), (6, 0), (0, 5), (1, 3), (4, 6),
    )
    assert second_tube_first.graph(0).edges[-2:] == ((4, 6), (1, 3))
    assert _edge_set(second_tube_first) == _edge_set(cascaded)
    assert second_tube_first.graph(0).n_vertices == cascaded.graph(0).n_vertices == 7
    assert second_tube_first.tubes == cascaded.tubes == ()
    assert betti1(cascaded) == betti1(second_tube_first) == betti1(c) == 4


# -- witnesses -------------------------------------------------------------

def test_find_witness():
    assert find_witness(torus()) is None
    assert find_witness(wedge_of_tori()) == Witness(WitnessKind.DISCONNECTED_LINK, 0, 0)
    assert find_witness(torus_with_chord()) == Witness(WitnessKind.THICKNESS_ZERO_EDGE, 0, 4)
    assert find_witness(triangle()) == Witness(WitnessKind.THICKNESS_ZERO_EDGE, 0, 0)
    free_tube = chorded_square_tube((1, 2, -5), (5, 3, 4))
    assert find_witness(free_tube) == Witness(WitnessKind.THICKNESS_ONE_EDGE, 0, 0)


def test_witness_order_and_rendering():
    witnesses = [
        Witness(WitnessKind.DISCONNECTED_LINK, 0, 0),
        Witness(WitnessKind.THICKNESS_ONE_EDGE, 1, 0),
        Witness(WitnessKind.THICKNESS_ZERO_EDGE, 2, 5),
    ]
    assert sorted(witnesses)[0].kind == WitnessKind.THICKNESS_ZERO_EDGE
    assert witnesses[0].to_dict(wedge_of_tori()) == {
        'kind': 'DisconnectedLink', 'graph': 0, 'graph_name': 's', 'vertex': 0,
    }
    assert str(witnesses[2]) == 'ThicknessZeroEdge at edge 5 of graph 2'


def test_verify_witness():
    assert verify_witness(wedge_of_tori(), Witness(WitnessKind.DISCONNECTED_LINK, 0, 0))
    assert not verify_witness(wedge_of_tori(), Witness(WitnessKind.DISCONNECTED_LINK, 0, 1))
    assert verify_witness(torus_with_chord(), Witness(WitnessKind.THICKNESS_ZERO_EDGE, 0, 4))
    assert not verify_witness(torus(), Witness(WitnessKind.THICKNESS_ONE_EDGE, 0, 0))
    assert not verify_witness(torus(), Witness(WitnessKind.THICKNESS_ZERO_EDGE, 0, 9))
    assert not verify_witness(torus(), Witness(WitnessKind.THICKNESS_ZERO_EDGE, 3, 0))


def test_is_brady_meier():
    assert is_brady_meier(torus())
    assert not is_brady_meier(wedge_of_tori())
    assert not is_brady_meier(triangle())
    assert not is_brady_meier(torus_with_chord())
    assert is_brady_meier(double_of(2, 'abAB'))


# -- cut vertices in links -------------------------------------------------

def test_bm2_cut_vertex_examples():
    assert bm2_cut_vertex(vertex_link(torus(), 0, 0)) is None

    # two 4-cycles sharing the vertical vertex 0
    shared = LinkGraph(
        graph_index=0, vertex=0, vertical=(0, 1, 2),
        horizontal=((0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 0)),
        graph=MultiGraph(7, [(0, 3), (1, 3), (0, 4), (1, 4), (0, 5), (2, 5), (0, 6), (2, 6)]),
        corners=((0, 0),) * 8,
    )
    assert bm2_cut_vertex(shared) == 0

    # only the horizontal middle of a path disconnects it
    path = LinkGraph(
        graph_index=0, vertex=0, vertical=(0, 1), horizontal=((0, 0, 0),),
        graph=MultiGraph(3, [(0, 2), (1, 2)]), corners=((0, 0), (0, 1)),
    )
    assert path.to_networkx().nodes[2]['kind'] == HORIZONTAL
    assert bm2_cut_vertex(path) is None


def test_bm2_cut_vertex_needs_connected_link():
    with pytest.raises(MoveError):
        bm2_cut_vertex(vertex_link(wedge_of_tori(), 0, 0))


def test_plan_opening_at_special_vertex():
    c = double_of(2, 'aabab')
    plan = plan_opening(c, 0, 0)
    assert plan.cut_edge == 0
    assert plan.far_end == 1
    assert plan.components == ((1, 2, 5, 6, 8), (3, 4, 7))
    assert plan.branches == ((2, 3), (5,))
    assert plan.branch_ends == ((2, 3), (4,))
    assert plan.n_components == 2
    assert plan.tree_size == 6
    assert plan.summary() == {'graph': 0, 'vertex': 0, 'edge': 0, 'components': 2}


def test_open_at_special_vertex():
    c = double_of(2, 'aabab')
    opened = open_at(c, plan_opening(c, 0, 0))
    assert opened.n_squares == c.n_squares == 15
    assert opened.graph(0).n_vertices == 6
    assert opened.graph(0).edges == ((0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 1))
    assert opened.graph(1) == c.graph(1)
    assert [vg.name for vg in opened.vertex_graphs] == ['rose0', 'rose1']
    assert opened.tubes[0].walk(0) == (7, 2, 3, 1, 2, 3, 4, 5, 6, 7, 2, 3, 4, 5, 6)
    assert opened.tubes[0].walk(1) == c.tubes[0].walk(1)
    assert opened.validate().is_valid
    assert euler_characteristic(opened) == euler_characteristic(c)
    assert betti1(opened) == betti1(c)
    # each copy of the cut edge now carries part of its old traffic
    assert thickness_table(opened)[0][0] == 1
    assert thickness_table(opened)[0][6] == 2


def valence_three_opening():
    """Vertex 0 meets edges 0, 1 and 2; every walk through 0 turns onto edge 0."""
    graph = SimplicialGraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    tubes = [
        Tube(3, (TubeEnd(0, (1, 4, -2)), TubeEnd(0, (1, 4, -2)))),
        Tube(3, (TubeEnd(0, (1, 5, -3)), TubeEnd(0, (1, 5, -3)))),
    ]
    return TubularComplex([VertexGraph('s', graph)], tubes)


def test_smallest_opening():
    c = valence_three_opening()
    assert c.validate().is_valid
    plan = plan_opening(c, 0, 0)
    assert plan.cut_edge == 0
    assert plan.far_end == 1
    assert plan.components == ((1, 3, 4), (2, 5, 6))
    assert plan.branches == ((1,), (2,))
    assert plan.branch_ends == ((2,), (3,))
    assert plan.tree_size == 5

    opened = open_at(c, plan)
    graph = opened.graph(0)
    assert graph.n_vertices == 5
    assert graph.edges == ((0, 1), (0, 2), (4, 3), (1, 2), (1, 3), (4, 1))
    # the opened tree: both copies of vertex 0 with their branch and cut edges
    tree = [edge for edge in graph.edges if {0, 4} & set(edge)]
    assert len(tree) == plan.tree_size - 1 == 4
    assert graph.degree(0) == graph.degree(4) == 2
    assert opened.tubes[0] == c.tubes[0]
    assert opened.tubes[1].walk(0) == opened.tubes[1].walk(1) == (6, 5, -3)
    assert opened.validate().is_valid
    assert euler_characteristic(opened) == euler_characteristic(c)
    assert betti1(opened) == betti1(c)


def test_plan_opening_errors():
    with pytest.raises(MoveError):
        plan_opening(torus(), 0, 0)
    with pytest.raises(MoveError):
        plan_opening(double_of(2, 'aabab'), 0, 0, cut_edge=1)
    with pytest.raises(MoveError):
        plan_opening(torus(), 0, 0, cut_edge=0)


def test_open_at_rejects_foreign_plan():
    plan = plan_opening(double_of(2, 'aabab'), 0, 0)
    with pytest.raises(MoveError):
        open_at(torus(), plan)


def _checked_openings(c, engine):
    form = engine.normalize(c)
    current = remove_rudimentary_edges(collapse_hanging_trees(c))
    for event in form.trace:
        if event.kind != SL_MOVE:
            continue
        location = event.location
        opened = open_at(current, plan_opening(current, location['graph'], location['vertex'], location['edge']))
        assert opened.n_squares == current.n_squares
        assert opened.n_vertical_edges > current.n_vertical_edges
        assert euler_characteristic(opened) == euler_characteristic(current)
        assert betti1(opened) == betti1(current)
        assert all(count >= 1 for row in thickness_table(opened) for count in row)
        current = opened
    return form.move_count


@pytest.mark.slow
def test_openings_preserve_invariants_on_random_doubles(engine):
    assert _checked_openings(double_of(2, 'aabab'), engine) == 1
    corpus = random_opening_corpus(seed=11, size=200, rank=2, max_squares=40)
    assert len(corpus) == 200
    assert all(c.n_squares <= 40 for c in corpus)
    moves = [_checked_openings(c, engine) for c in corpus]
    assert min(moves) >= 1
