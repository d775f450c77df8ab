"""
Words in a free group of rank n.

Letters are nonzero integers: +i is the basis element b_i and -i its inverse.
The text form follows the usual convention of lowercase letters for
generators and uppercase for inverses, so "abAB" is b_1 b_2 b_1^-1 b_2^-1.
"""

import string
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from utils.errors import WordError

MAX_RANK = len(string.ascii_lowercase)


def parse_letter(char: str) -> int:
    if char in string.ascii_lowercase:
        return ord(char) - ord('a') + 1
    if char in string.ascii_uppercase:
        return -(ord(char) - ord('A') + 1)
    raise WordError(f"{char!r} is not a letter")


def format_letter(letter: int) -> str:
    if letter > 0:
        return chr(letter - 1 + ord('a'))
    return chr(-letter - 1 + ord('A'))


def invert(letters: Sequence[int]) -> Tuple[int, ...]:
    return tuple(-letter for letter in reversed(letters))


def free_reduce(letters: Iterable[int]) -> Tuple[int, ...]:
    reduced: List[int] = []
    for letter in letters:
        if reduced and reduced[-1] == -letter:
            reduced.pop()
        else:
            reduced.append(letter)
    return tuple(reduced)


def cyclic_reduce_letters(letters: Iterable[int]) -> Tuple[int, ...]:
    reduced = free_reduce(letters)
    start, stop = 0, len(reduced)
    while stop - start >= 2 and reduced[start] == -reduced[stop - 1]:
        start += 1
        stop -= 1
    return reduced[start:stop]


def rotations(letters: Sequence[int]) -> List[Tuple[int, ...]]:
    letters = tuple(letters)
    return [letters[r:] + letters[:r] for r in range(len(letters))]


@dataclass(frozen=True)
class Word:
    """A nontrivial cyclically reduced word."""

    rank: int
    letters: Tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.rank <= MAX_RANK:
            raise WordError(f"rank {self.rank} is outside 1..{MAX_RANK}")
        if not self.letters:
            raise WordError("the trivial word is not allowed")
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.rank:
                raise WordError(f"letter {letter} does not belong to rank {self.rank}")
        if cyclic_reduce_letters(self.letters) != self.letters:
            raise WordError(f"{self} is not cyclically reduced")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return ''.join(format_letter(letter) for letter in self.letters)

    def inverse(self) -> 'Word':
        return Word(self.rank, invert(self.letters))

    def canonical(self) -> Tuple[int, ...]:
        """Least rotation of the word or its inverse; equal for conjugate or inverse words."""
        return min(rotations(self.letters) + rotations(invert(self.letters)))


def cyclic_reduce(rank: int, letters: Iterable[int]) -> Word:
    """Freely and cyclically reduce; the conjugacy class is unchanged."""
    letters = tuple(letters)
    for letter in letters:
        if letter == 0 or abs(letter) > rank:
            raise WordError(f"letter {letter} does not belong to rank {rank}")
    reduced = cyclic_reduce_letters(letters)
    if not reduced:
        raise WordError("word reduces to the identity")
    return Word(rank, reduced)


def parse_word(rank: int, text: str) -> Word:
    if not text:
        raise WordError("empty word")
    return cyclic_reduce(rank, (parse_letter(char) for char in text))


def parse_words(rank: int, text: str) -> List[Word]:
    """Whitespace separated words, each reduced."""
    tokens = text.split()
    if not tokens:
        raise WordError("no words given")
    return [parse_word(rank, token) for token in tokens]


def dedupe_words(words: Iterable[Word]) -> List[Word]:
    """Keep the first of each class of words equal up to rotation and inversion."""
    seen = set()
    kept = []
    for word in words:
        key = word.canonical()
        if key not in seen:
            seen.add(key)
            kept.append(word)
    return kept


def total_length(words: Iterable[Word]) -> int:
    return sum(len(word) for word in words)
