"""Shared builders for the test suite."""

from pathlib import Path

from complexes.tubular import Tube, TubeEnd, TubularComplex, VertexGraph
from freewords.double import build_double
from freewords.words import parse_words
from utils.graph_core import SimplicialGraph

FIXTURE_DIR = Path(__file__).resolve().parent.parent / 'fixtures'

CHORDED_SQUARE = SimplicialGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])


def chorded_square_tube(end0, end1) -> TubularComplex:
    """One loop tube on a 4-cycle with the diagonal 0-2."""
    tube = Tube(len(end0), (TubeEnd(0, tuple(end0)), TubeEnd(0, tuple(end1))))
    return TubularComplex([VertexGraph('s', CHORDED_SQUARE)], [tube])


def double_of(rank, text) -> TubularComplex:
    return build_double(rank, parse_words(rank, text))
