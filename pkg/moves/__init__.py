"""
Moves module for the splitting toolkit.
Homotopy-preserving simplifications, witnesses of free splittings and the
vertex opening that repairs cut vertices in links.
"""

from .hanging_trees import collapse_hanging_trees, has_hanging_trees
from .rudimentary import remove_rudimentary_edges, rudimentary_edges
from .sl_move import OpeningPlan, bm2_cut_vertex, open_at, plan_opening
from .thickness_one import collapse_free_tube, remove_thickness_one_cascade
from .witness import Witness, WitnessKind, find_witness, is_brady_meier, verify_witness

__all__ = [
    'OpeningPlan',
    'Witness',
    'WitnessKind',
    'bm2_cut_vertex',
    'collapse_free_tube',
    'collapse_hanging_trees',
    'find_witness',
    'has_hanging_trees',
    'is_brady_meier',
    'open_at',
    'plan_opening',
    'remove_rudimentary_edges',
    'remove_thickness_one_cascade',
    'rudimentary_edges',
    'verify_witness',
]
