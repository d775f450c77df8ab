"""
Complexes module for the splitting toolkit.
Tubular graphs of graphs, their vertex links and invariants, a mutable
workspace for moves, and generators for fixtures and random corpora.
"""

from .builder import ComplexBuilder
from .invariants import (
    CellCounts,
    betti1,
    betti_numbers,
    euler_characteristic,
    euler_characteristic_from_homology,
    euler_characteristic_of_graphs,
    thickness,
    thickness_table,
)
from .links import LinkGraph, vertex_link, vertex_links
from .tubular import Square, Tube, TubeEnd, TubularComplex, ValidationReport, VertexGraph

__all__ = [
    'CellCounts',
    'ComplexBuilder',
    'LinkGraph',
    'Square',
    'Tube',
    'TubeEnd',
    'TubularComplex',
    'ValidationReport',
    'VertexGraph',
    'betti1',
    'betti_numbers',
    'euler_characteristic',
    'euler_characteristic_from_homology',
    'euler_characteristic_of_graphs',
    'thickness',
    'thickness_table',
    'vertex_link',
    'vertex_links',
]
