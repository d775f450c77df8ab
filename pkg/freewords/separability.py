"""
Separability of word sets through the double.

A word set W is separable exactly when the double of the rose along W has a
fundamental group that is not one-ended, i.e. when the normalization of the
double does not end in a Brady-Meier complex.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

from decomposition.engine import DecompositionEngine, GrushkoDecomposition, NormalForm, Outcome
from freewords.double import build_double
from freewords.words import Word, dedupe_words

logger = logging.getLogger(__name__)


@dataclass
class SeparabilityResult:
    rank: int
    words: List[Word]
    separable: bool
    normal_form: NormalForm
    splitting: Optional[GrushkoDecomposition] = None

    def certificate(self) -> dict:
        form = self.normal_form
        record = {
            'outcome': form.outcome.value,
            'sl_moves': form.move_count,
            'trace': [event.to_dict() for event in form.trace],
        }
        if form.witness is not None:
            record['witness'] = form.witness.to_dict(form.complex)
        if self.splitting is not None:
            record['free_rank'] = self.splitting.free_rank
            record['pieces'] = [piece.n_squares for piece in self.splitting.pieces]
        return record

    def to_dict(self) -> dict:
        return {
            'rank': self.rank,
            'words': [str(word) for word in self.words],
            'separable': self.separable,
            'certificate': self.certificate(),
        }


class SeparabilityChecker:
    def __init__(self, engine=None):
        self.engine = engine or DecompositionEngine()

    def check(self, rank: int, words: Sequence[Word]) -> SeparabilityResult:
        words = dedupe_words(words)
        double = build_double(rank, words)
        form = self.engine.normalize(double)
        separable = form.outcome != Outcome.BRADY_MEIER
        splitting = self.engine.grushko(double) if separable else None
        logger.debug(
            "%s: %s after %d openings",
            ' '.join(map(str, words)), 'separable' if separable else 'not separable', form.move_count,
        )
        return SeparabilityResult(rank, list(words), separable, form, splitting)


def is_separable(rank: int, words: Sequence[Word], engine=None):
    """(separable, certificate) for a set of nontrivial cyclically reduced words."""
    result = SeparabilityChecker(engine).check(rank, words)
    return result.separable, result
