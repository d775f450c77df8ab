"""
Fixture complexes and seeded random corpora.
"""

from typing import List, Optional

import numpy as np

from complexes.tubular import Tube, TubeEnd, TubularComplex, VertexGraph
from freewords.double import build_double
from freewords.whitehead import whitehead_graph
from freewords.words import Word, cyclic_reduce_letters, dedupe_words
from utils.graph_core import SimplicialGraph

TRIANGLE = SimplicialGraph(3, [(0, 1), (1, 2), (2, 0)])


def _loop_tube(walk) -> Tube:
    return Tube(len(walk), (TubeEnd(0, tuple(walk)), TubeEnd(0, tuple(walk))))


def torus() -> TubularComplex:
    """Triangle times a circle: one loop tube along the identity on both ends."""
    return TubularComplex([VertexGraph('s', TRIANGLE)], [_loop_tube([1, 2, 3])])


def triangle() -> TubularComplex:
    """A bare 3-cycle, no tubes."""
    return TubularComplex([VertexGraph('s', TRIANGLE)])


def wedge_of_tori() -> TubularComplex:
    """Two tori glued at vertex 0."""
    graph = SimplicialGraph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    return TubularComplex([VertexGraph('s', graph)], [_loop_tube([1, 2, 3]), _loop_tube([4, 5, 6])])


def torus_with_chord() -> TubularComplex:
    """A square times a circle plus an unused diagonal 0-2."""
    graph = SimplicialGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    return TubularComplex([VertexGraph('s', graph)], [_loop_tube([1, 2, 3, 4])])


def torus_with_pendant() -> TubularComplex:
    graph = SimplicialGraph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    return TubularComplex([VertexGraph('s', graph)], [_loop_tube([1, 2, 3])])


def annulus_with_rudimentary_end() -> TubularComplex:
    """A torus with an extra circle attached to it by a cylinder."""
    circle = SimplicialGraph(3, [(0, 1), (1, 2), (2, 0)])
    tubes = [
        _loop_tube([1, 2, 3]),
        Tube(3, (TubeEnd(0, (1, 2, 3)), TubeEnd(1, (1, 2, 3)))),
    ]
    return TubularComplex([VertexGraph('s', TRIANGLE), VertexGraph('c', circle)], tubes)


# Generators behind the files in fixtures/.
FIXTURES = {
    'torus': torus,
    'triangle': triangle,
    'wedge_of_tori': wedge_of_tori,
    'torus_with_chord': torus_with_chord,
}


def random_word(rng: np.random.Generator, rank: int, length: int) -> Word:
    """Uniform cyclically reduced word of the given length, by rejection."""
    while True:
        letters = [int(rng.integers(1, rank + 1)) * int(rng.choice([-1, 1]))]
        while len(letters) < length:
            letter = int(rng.integers(1, rank + 1)) * int(rng.choice([-1, 1]))
            if letter != -letters[-1]:
                letters.append(letter)
        if cyclic_reduce_letters(letters) == tuple(letters):
            return Word(rank, tuple(letters))


def random_words(rng: np.random.Generator, rank: int, total: int, max_words: int = 3) -> List[Word]:
    """Distinct words whose lengths add up to at most `total`."""
    n_words = int(rng.integers(1, max_words + 1))
    lengths = []
    remaining = total
    for k in range(n_words):
        if remaining < 1:
            break
        length = remaining if k == n_words - 1 else int(rng.integers(1, remaining + 1))
        lengths.append(length)
        remaining -= length
    return dedupe_words(random_word(rng, rank, length) for length in lengths)


def random_double(rng: np.random.Generator, rank: int = 2, max_squares: int = 40) -> TubularComplex:
    total = int(rng.integers(1, max_squares // 3 + 1))
    return build_double(rank, random_words(rng, rank, total))


def random_corpus(seed: int, size: int, rank: int = 2, max_squares: int = 40,
                  rng: Optional[np.random.Generator] = None) -> List[TubularComplex]:
    rng = rng or np.random.default_rng(seed)
    return [random_double(rng, rank, max_squares) for _ in range(size)]


def forces_opening(rank: int, words: List[Word]) -> bool:
    """True when the double along `words` needs at least one vertex opening.

    Every generator used twice keeps the petal edges free of thickness zero
    and one, a connected Whitehead graph keeps the special link connected,
    and a Whitehead cut vertex is then a vertical cut vertex of that link.
    """
    counts = [0] * rank
    for word in words:
        for letter in word.letters:
            counts[abs(letter) - 1] += 1
    if min(counts) < 2:
        return False
    graph = whitehead_graph(rank, words)
    return graph.is_connected() and bool(graph.cut_vertices())


def random_opening_corpus(seed: int, size: int, rank: int = 2, max_squares: int = 40,
                          max_draws: int = 100_000) -> List[TubularComplex]:
    """Random doubles of at most `max_squares` squares that all need an opening."""
    rng = np.random.default_rng(seed)
    corpus = []
    for _ in range(max_draws):
        if len(corpus) == size:
            break
        total = int(rng.integers(2 * rank, max_squares // 3 + 1))
        words = random_words(rng, rank, total)
        if forces_opening(rank, words):
            corpus.append(build_double(rank, words))
    if len(corpus) < size:
        raise ValueError(f"only {len(corpus)} of {size} doubles needing an opening in {max_draws} draws")
    return corpus
