"""Reduced-word arithmetic in the free group F_n.

A letter is a nonzero integer: ``+i`` is the i-th generator, ``-i`` its
inverse (1-based, rank at most 26).  Words are tuples of letters with no
adjacent cancelling pair.  The text form writes generator i as the i-th
lowercase ASCII letter and its inverse as the corresponding uppercase
letter, so ``"abA"`` is a1*a2*a1^-1.  The empty string is the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_RANK = 26


class WordSyntaxError(ValueError):
    """Text that does not parse as a word over the allowed alphabet."""


class RankError(ValueError):
    """A letter outside the ambient rank, or an operation mixing ranks."""


def reduce_letters(letters: Iterable[int], rank: int) -> tuple[int, ...]:
    """Freely reduce a letter sequence; the result is the unique reduced form."""
    out: list[int] = []
    for x in letters:
        if x == 0 or abs(x) > rank:
            raise RankError(f"letter {x} outside rank {rank}")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _check_reduced(letters: tuple[int, ...], rank: int) -> None:
    for i, x in enumerate(letters):
        if x == 0 or abs(x) > rank:
            raise RankError(f"letter {x} outside rank {rank}")
        if i and letters[i - 1] == -x:
            raise ValueError(f"not freely reduced at position {i}")


def letter_str(x: int) -> str:
    c = chr(ord("a") + abs(x) - 1)
    return c if x > 0 else c.upper()


def letter_key(x: int) -> tuple[int, int]:
    """Sort key realizing the order a < A < b < B < ..."""
    return (abs(x), 0 if x > 0 else 1)


def word_key(letters: tuple[int, ...]) -> tuple:
    return (len(letters), tuple(letter_key(x) for x in letters))


@dataclass(frozen=True)
class ReducedWord:
    """A freely reduced word together with its ambient rank."""

    letters: tuple[int, ...]
    rank: int

    def __post_init__(self):
        if not 1 <= self.rank <= MAX_RANK:
            raise RankError(f"rank must be in 1..{MAX_RANK}, got {self.rank}")
        _check_reduced(self.letters, self.rank)

    @classmethod
    def identity(cls, rank: int) -> "ReducedWord":
        return cls((), rank)

    @classmethod
    def from_letters(cls, letters: Iterable[int], rank: int) -> "ReducedWord":
        return cls(reduce_letters(letters, rank), rank)

    @classmethod
    def parse(cls, text: str, rank: int) -> "ReducedWord":
        letters = []
        for ch in text:
            if "a" <= ch <= "z":
                x = ord(ch) - ord("a") + 1
            elif "A" <= ch <= "Z":
                x = -(ord(ch) - ord("A") + 1)
            else:
                raise WordSyntaxError(f"invalid character {ch!r} in word {text!r}")
            if abs(x) > rank:
                raise WordSyntaxError(f"letter {ch!r} beyond rank {rank}")
            letters.append(x)
        return cls.from_letters(letters, rank)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(letter_str(x) for x in self.letters)

    def display(self) -> str:
        """Text form with the identity rendered as "1"."""
        return str(self) or "1"

    def __mul__(self, other: "ReducedWord") -> "ReducedWord":
        if self.rank != other.rank:
            raise RankError(f"rank mismatch: {self.rank} vs {other.rank}")
        return ReducedWord(
            concat_letters(self.letters, other.letters), self.rank
        )

    def inverse(self) -> "ReducedWord":
        return ReducedWord(invert_letters(self.letters), self.rank)

    def letter_count(self, gen: int) -> int:
        """Occurrences of generator ``gen`` in either sign."""
        if not 1 <= gen <= self.rank:
            raise RankError(f"generator {gen} outside rank {self.rank}")
        return sum(1 for x in self.letters if abs(x) == gen)

    def support(self) -> frozenset[int]:
        """The set of generators that occur (in either sign)."""
        return frozenset(abs(x) for x in self.letters)

    def max_letter_count(self) -> int:
        return max((self.letter_count(i) for i in range(1, self.rank + 1)), default=0)

    def is_cyclically_reduced(self) -> bool:
        return len(self.letters) < 2 or self.letters[0] != -self.letters[-1]

    def cyclic_reduction(self) -> "ReducedWord":
        return ReducedWord(cyclic_reduce_letters(self.letters)[0], self.rank)

    def prefix(self, k: int) -> "ReducedWord":
        return ReducedWord(self.letters[:k], self.rank)

    def sort_key(self) -> tuple:
        return word_key(self.letters)


def concat_letters(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """Reduced product of two already-reduced letter tuples."""
    out = list(u)
    for x in v:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert_letters(u: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(u))


def cyclic_reduce_letters(u: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Cyclic reduction of a reduced tuple.

    Returns ``(core, stripped)`` where ``stripped`` lists the letters removed
    from the front, in removal order, so ``u = stripped * core * stripped^-1``.
    """
    left = 0
    right = len(u)
    while right - left >= 2 and u[left] == -u[right - 1]:
        left += 1
        right -= 1
    return u[left:right], u[:left]


def concat(u: ReducedWord, v: ReducedWord) -> ReducedWord:
    return u * v


def invert(w: ReducedWord) -> ReducedWord:
    return w.inverse()


def letter_count(w: ReducedWord, gen: int) -> int:
    return w.letter_count(gen)


def reduced_words(rank: int, max_len: int) -> Iterator[tuple[int, ...]]:
    """All reduced letter tuples of length <= max_len, lazily, in
    depth-first prefix order over the a < A < b < B alphabet."""
    alphabet = sorted(
        [x for i in range(1, rank + 1) for x in (i, -i)], key=letter_key
    )

    def extend(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        yield prefix
        if len(prefix) == max_len:
            return
        last = prefix[-1] if prefix else 0
        for x in alphabet:
            if x != -last:
                yield from extend(prefix + (x,))

    return extend(())


def count_reduced_words(rank: int, max_len: int) -> int:
    """Number of reduced words of length <= max_len: 1 + sum 2n(2n-1)^(k-1)."""
    total = 1
    for k in range(1, max_len + 1):
        total += 2 * rank * (2 * rank - 1) ** (k - 1)
    return total
