"""Length minimization over the automorphism orbit, with witness chains.

``whitehead_minimize`` runs greedy descent over the elementary automorphism
set, cyclically reducing after every move (conjugation is itself applied as
a chain of recorded moves, so witnesses stay replayable).  Whenever a word
is not of minimal length in its orbit, some multiplier automorphism
strictly shortens its cyclic reduction, so the descent cannot stall early.

``minimal_orbit`` then explores the minimal-length words reachable by
length-preserving moves, breadth-first, recording parent pointers so a
witness chain to any discovered word can be reconstructed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .automorphisms import (
    FGAutomorphism,
    conjugation_by_letter,
    elementary_automorphisms,
)
from .words import ReducedWord, cyclic_reduce_letters, word_key

DEFAULT_ORBIT_CAP = 100_000


class OrbitCapExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"orbit closure exceeded cap of {cap} words")
        self.cap = cap


@lru_cache(maxsize=None)
def _move_tables(rank: int) -> tuple[tuple[FGAutomorphism, tuple[tuple[int, ...], ...]], ...]:
    """Non-identity elementary automorphisms with flat letter-image tables.

    The table is indexed by ``letter + rank`` (letter in -rank..rank).
    """
    out = []
    for phi in elementary_automorphisms(rank):
        if phi.is_identity():
            continue
        table = phi.letter_table()
        flat = tuple(
            table.get(x, ()) for x in range(-rank, rank + 1)
        )
        out.append((phi, flat))
    return tuple(out)


@lru_cache(maxsize=None)
def _conj_auto(letter: int, rank: int) -> FGAutomorphism:
    return conjugation_by_letter(letter, rank)


def _apply_flat(flat: tuple[tuple[int, ...], ...], raw: tuple[int, ...], rank: int) -> tuple[int, ...]:
    out: list[int] = []
    for x in raw:
        for y in flat[x + rank]:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def _step_chain(rank: int, phi: Optional[FGAutomorphism], strip: tuple[int, ...]) -> list[FGAutomorphism]:
    chain = [] if phi is None else [phi]
    chain.extend(_conj_auto(x, rank) for x in strip)
    return chain


def whitehead_minimize(w: ReducedWord) -> tuple[ReducedWord, tuple[FGAutomorphism, ...]]:
    """A word of minimal length in the orbit of ``w``, plus a witness chain.

    Applying the chain elements to ``w`` in order reproduces the result
    exactly.  The result is cyclically reduced.
    """
    rank = w.rank
    moves = _move_tables(rank)
    chain: list[FGAutomorphism] = []

    raw, strip = cyclic_reduce_letters(w.letters)
    chain.extend(_step_chain(rank, None, strip))

    while True:
        best = None
        for idx, (_phi, flat) in enumerate(moves):
            cand_raw, cand_strip = cyclic_reduce_letters(_apply_flat(flat, raw, rank))
            if len(cand_raw) < len(raw):
                key = (len(cand_raw), word_key(cand_raw), idx)
                if best is None or key < best[0]:
                    best = (key, idx, cand_raw, cand_strip)
        if best is None:
            return ReducedWord(raw, rank), tuple(chain)
        _key, idx, raw, strip = best
        chain.extend(_step_chain(rank, moves[idx][0], strip))


@dataclass
class OrbitResult:
    """Closure of the minimal-length orbit words under length-preserving moves."""

    rank: int
    base: ReducedWord
    base_chain: tuple[FGAutomorphism, ...]
    parents: dict  # raw -> None (base) or (prev_raw, move_index, strip)
    hit: Optional[tuple[tuple[int, ...], object]]
    complete: bool

    @property
    def min_length(self) -> int:
        return len(self.base)

    def words(self) -> list[ReducedWord]:
        rank = self.rank
        return sorted(
            (ReducedWord(raw, rank) for raw in self.parents),
            key=lambda v: v.sort_key(),
        )

    def chain_to(self, raw: tuple[int, ...]) -> tuple[FGAutomorphism, ...]:
        """Witness chain from the original input word to ``raw``."""
        moves = _move_tables(self.rank)
        steps = []
        cur = raw
        while True:
            rec = self.parents[cur]
            if rec is None:
                break
            prev, idx, strip = rec
            steps.append(_step_chain(self.rank, moves[idx][0], strip))
            cur = prev
        chain = list(self.base_chain)
        for step in reversed(steps):
            chain.extend(step)
        return tuple(chain)


def minimal_orbit(
    w: ReducedWord,
    cap: int = DEFAULT_ORBIT_CAP,
    stop: Optional[Callable[[tuple[int, ...]], object]] = None,
) -> OrbitResult:
    """Breadth-first closure from ``whitehead_minimize(w)``.

    ``stop(raw)`` may return a truthy tag to halt exploration at that word;
    the result then carries ``hit=(raw, tag)`` and ``complete=False``.
    Raises :class:`OrbitCapExceeded` if the closure grows past ``cap``.
    """
    rank = w.rank
    base, base_chain = whitehead_minimize(w)
    moves = _move_tables(rank)
    target_len = len(base)

    parents: dict = {base.letters: None}
    queue = deque([base.letters])

    if stop is not None:
        tag = stop(base.letters)
        if tag:
            return OrbitResult(rank, base, base_chain, parents, (base.letters, tag), False)

    while queue:
        cur = queue.popleft()
        for idx, (_phi, flat) in enumerate(moves):
            img, strip = cyclic_reduce_letters(_apply_flat(flat, cur, rank))
            if len(img) != target_len or img in parents:
                if len(img) < target_len:
                    raise AssertionError(
                        "length-preserving closure found a shorter word; "
                        "minimization was not minimal"
                    )
                continue
            parents[img] = (cur, idx, strip)
            if len(parents) > cap:
                raise OrbitCapExceeded(cap)
            if stop is not None:
                tag = stop(img)
                if tag:
                    return OrbitResult(rank, base, base_chain, parents, (img, tag), False)
            queue.append(img)
    return OrbitResult(rank, base, base_chain, parents, None, True)


def orbit_minimal_set(w: ReducedWord, cap: int = DEFAULT_ORBIT_CAP) -> tuple[ReducedWord, ...]:
    """All minimal-length orbit words reachable by length-preserving moves.

    Deterministically ordered by (length, letter sequence) with a < A < b < B.
    """
    return tuple(minimal_orbit(w, cap=cap).words())
