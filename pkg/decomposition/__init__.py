"""
Decomposition module for the splitting toolkit.
Normal forms of tubular complexes and the Grushko decomposition.
"""

from .engine import (
    CutRecord,
    DecompositionEngine,
    GrushkoDecomposition,
    NormalForm,
    Outcome,
    TraceEvent,
)

__all__ = [
    'CutRecord',
    'DecompositionEngine',
    'GrushkoDecomposition',
    'NormalForm',
    'Outcome',
    'TraceEvent',
]
