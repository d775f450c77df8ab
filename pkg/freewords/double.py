"""
The double of a rose along a word set.

The rose with n petals is subdivided so each petal is a triangle through the
special vertex 0: petal k (0-based) has edges 3k = (0, 2k+1), 3k+1 =
(2k+1, 2k+2) and 3k+2 = (2k+2, 0). The double has two copies of this graph
and, for each word, a tube of circle length 3|w| attached to both copies by
the same walk.
"""

import logging
from typing import List, Sequence, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import categorical_node_match

from complexes.links import vertex_link, vertex_links
from complexes.tubular import Tube, TubeEnd, TubularComplex, VertexGraph
from freewords.whitehead import whitehead_graph
from freewords.words import Word, dedupe_words
from utils.errors import WordError
from utils.graph_core import SimplicialGraph

logger = logging.getLogger(__name__)

SPECIAL_VERTEX = 0
GRAPH_NAMES = ('rose0', 'rose1')


def subdivided_rose(rank: int) -> SimplicialGraph:
    edges = []
    for k in range(rank):
        outer, inner = 2 * k + 1, 2 * k + 2
        edges.extend([(SPECIAL_VERTEX, outer), (outer, inner), (inner, SPECIAL_VERTEX)])
    return SimplicialGraph(1 + 2 * rank, edges)


def letter_walk(letter: int) -> Tuple[int, int, int]:
    k = abs(letter) - 1
    steps = (3 * k + 1, 3 * k + 2, 3 * k + 3)
    if letter > 0:
        return steps
    return tuple(-step for step in reversed(steps))


def word_walk(word: Word) -> Tuple[int, ...]:
    return tuple(step for letter in word.letters for step in letter_walk(letter))


def _checked(rank: int, words: Sequence[Word]) -> List[Word]:
    if rank < 2:
        raise WordError(f"the double needs rank at least 2, got {rank}")
    if not words:
        raise WordError("the double needs at least one word")
    for word in words:
        if word.rank != rank:
            raise WordError(f"word {word} has rank {word.rank}, expected {rank}")
    return dedupe_words(words)


def build_double(rank: int, words: Sequence[Word]) -> TubularComplex:
    words = _checked(rank, words)
    rose = subdivided_rose(rank)
    tubes = []
    for word in words:
        walk = word_walk(word)
        tubes.append(Tube(len(walk), (TubeEnd(0, walk), TubeEnd(1, walk))))
    logger.debug("double of %d words in rank %d: %d squares", len(words), rank, sum(t.length for t in tubes))
    return TubularComplex([VertexGraph(name, rose) for name in GRAPH_NAMES], tubes)


def link_matches_whitehead(rank: int, words: Sequence[Word]) -> bool:
    """Is the special vertex link isomorphic to the subdivided Whitehead graph, respecting vertex kinds?"""
    words = _checked(rank, words)
    double = build_double(rank, words)
    link = vertex_link(double, 0, SPECIAL_VERTEX).to_networkx()
    subdivision = whitehead_graph(rank, words).subdivision()
    return nx.is_isomorphic(nx.Graph(link), subdivision, node_match=categorical_node_match('kind', None)) and (
        link.number_of_edges() == subdivision.number_of_edges()
    )


def _biconnected(link) -> bool:
    return link.graph.n_edges > 0 and link.is_connected() and not link.cut_vertices()


def special_vertex_links_agree(rank: int, words: Sequence[Word]) -> bool:
    """Every link of the first rose is connected without cut vertices exactly when the special one is."""
    double = build_double(rank, words)
    links = {key: link for key, link in vertex_links(double).items() if key[0] == 0}
    special = _biconnected(links[(0, SPECIAL_VERTEX)])
    everywhere = all(_biconnected(link) for link in links.values())
    return special == everywhere
