"""
Classical separability test by Whitehead minimization.

Length-reducing Whitehead automorphisms are applied until none shortens the
word set. At that minimum a disconnected Whitehead graph means separable and
a connected graph without cut vertices means not separable; a cut vertex at
a minimum is reported as inconclusive.
"""

import itertools
import logging
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

from freewords.whitehead import whitehead_graph
from freewords.words import Word, cyclic_reduce, dedupe_words, invert, total_length
from utils.errors import OracleInconclusiveError, WordError

logger = logging.getLogger(__name__)

Automorphism = Dict[int, Tuple[int, ...]]


def whitehead_automorphisms(rank: int) -> Iterator[Automorphism]:
    """Type-2 Whitehead automorphisms: pick a multiplier a, send every other x to x, xa, a^-1 x or a^-1 x a."""
    for generator in range(1, rank + 1):
        for a in (generator, -generator):
            choices: List[Callable[[int], Tuple[int, ...]]] = [
                lambda x: (x,),
                lambda x, a=a: (x, a),
                lambda x, a=a: (-a, x),
                lambda x, a=a: (-a, x, a),
            ]
            others = [x for x in range(1, rank + 1) if x != generator]
            for picks in itertools.product(choices, repeat=len(others)):
                images = {generator: (generator,)}
                images.update({x: pick(x) for pick, x in zip(picks, others)})
                yield images


def apply(automorphism: Automorphism, word: Word) -> Word:
    letters = []
    for letter in word.letters:
        image = automorphism[abs(letter)]
        letters.extend(image if letter > 0 else invert(image))
    return cyclic_reduce(word.rank, letters)


class WhiteheadOracle:
    def __init__(self, max_rounds=256, max_total_length=64):
        self.max_rounds = max_rounds
        self.max_total_length = max_total_length

    def minimize(self, rank: int, words: Sequence[Word]) -> List[Word]:
        """Whitehead-minimal representative of the orbit, by strictly decreasing steps."""
        current = list(words)
        if total_length(current) > self.max_total_length:
            raise OracleInconclusiveError(
                f"total length {total_length(current)} exceeds the budget of {self.max_total_length}"
            )
        automorphisms = list(whitehead_automorphisms(rank))
        for _ in range(self.max_rounds):
            length = total_length(current)
            best = None
            for automorphism in automorphisms:
                image = [apply(automorphism, word) for word in current]
                image_length = total_length(image)
                if image_length >= length:
                    continue
                key = (image_length, sorted(str(word) for word in image))
                if best is None or key < best[0]:
                    best = (key, image)
            if best is None:
                return current
            current = best[1]
            logger.debug("whitehead step: total length %d -> %d", length, total_length(current))
        raise OracleInconclusiveError(f"no minimum within {self.max_rounds} rounds")

    def is_separable(self, rank: int, words: Sequence[Word]) -> bool:
        if not words:
            raise WordError("no words given")
        minimal = self.minimize(rank, dedupe_words(words))
        graph = whitehead_graph(rank, minimal)
        if not graph.is_connected():
            return True
        if not graph.cut_vertices():
            return False
        raise OracleInconclusiveError(
            f"Whitehead graph of minimal set {' '.join(map(str, minimal))} is connected with a cut vertex"
        )


def whitehead_oracle(rank: int, words: Sequence[Word], **kwargs) -> bool:
    return WhiteheadOracle(**kwargs).is_separable(rank, words)
