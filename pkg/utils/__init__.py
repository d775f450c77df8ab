"""
Utilities module for the splitting toolkit.
Contains the graph substrate and the shared exception hierarchy.
"""

from .errors import (
    DecompositionError,
    DocumentError,
    GraphError,
    MalformedComplexError,
    MoveError,
    OracleInconclusiveError,
    TubularError,
    ValidationError,
    WordError,
)
from .graph_core import (
    MultiGraph,
    PruneResult,
    SimplicialGraph,
    articulation_points,
    connected_components,
    is_connected,
    prune_hanging_trees,
)

__all__ = [
    'DecompositionError',
    'DocumentError',
    'GraphError',
    'MalformedComplexError',
    'MoveError',
    'MultiGraph',
    'OracleInconclusiveError',
    'PruneResult',
    'SimplicialGraph',
    'TubularError',
    'ValidationError',
    'WordError',
    'articulation_points',
    'connected_components',
    'is_connected',
    'prune_hanging_trees',
]
