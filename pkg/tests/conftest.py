import pytest

from complexes.generators import (
    annulus_with_rudimentary_end,
    torus,
    torus_with_chord,
    torus_with_pendant,
    triangle,
    wedge_of_tori,
)
from decomposition.engine import DecompositionEngine
from tests.helpers import FIXTURE_DIR


@pytest.fixture
def fixture_dir():
    return FIXTURE_DIR


@pytest.fixture
def engine():
    return DecompositionEngine()


@pytest.fixture
def all_fixtures():
    return {
        'torus': torus(),
        'triangle': triangle(),
        'wedge_of_tori': wedge_of_tori(),
        'torus_with_chord': torus_with_chord(),
        'torus_with_pendant': torus_with_pendant(),
        'annulus_with_rudimentary_end': annulus_with_rudimentary_end(),
    }
