"""
Free words module for the splitting toolkit.
Words, Whitehead graphs, the rose double and separability tests.
"""

from .double import build_double, link_matches_whitehead, special_vertex_links_agree, subdivided_rose
from .oracle import WhiteheadOracle, whitehead_oracle
from .separability import SeparabilityChecker, SeparabilityResult, is_separable
from .whitehead import WhiteheadGraph, whitehead_graph
from .words import Word, cyclic_reduce, dedupe_words, parse_word, parse_words

__all__ = [
    'SeparabilityChecker',
    'SeparabilityResult',
    'WhiteheadGraph',
    'WhiteheadOracle',
    'Word',
    'build_double',
    'cyclic_reduce',
    'dedupe_words',
    'is_separable',
    'link_matches_whitehead',
    'parse_word',
    'parse_words',
    'special_vertex_links_agree',
    'subdivided_rose',
    'whitehead_graph',
    'whitehead_oracle',
]
