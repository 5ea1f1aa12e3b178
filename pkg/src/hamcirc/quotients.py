"""Finite prefix quotients of Cayley graphs of F_n.

Two words are equivalent at level L when they share their initial segment
of length L (words shorter than L are alone in their class).  The quotient
graph collapses each class to a vertex, keeps multiple edges, and drops
loops.  Distinct group edges are the multiplicity currency: a quotient edge
exists once per unordered pair of group elements joined by a generator.

Two independent constructions are provided.  ``build_quotient_enum``
enumerates all words up to level + max generator length and projects every
group edge; it is the definitional oracle.  ``build_quotient_local``
synthesizes the edges class by class (short classes keep their two tree
neighbours per generator; a full-length class with last letter a gets one
edge per occurrence of a^-1 in each generator) and is the fast path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .multigraph import Multigraph
from .words import (
    ReducedWord,
    concat_letters,
    count_reduced_words,
    invert_letters,
    reduced_words,
    word_key,
)

ENUM_BUDGET = 5_000_000


class EnumerationBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ClassId:
    """A class is named by its defining prefix."""

    representative: ReducedWord
    level: int


def class_of(w: ReducedWord, level: int) -> ClassId:
    if level < 1:
        raise ValueError("level must be at least 1")
    return ClassId(w.prefix(min(len(w), level)), level)


@dataclass(frozen=True)
class QuotientGraph:
    graph: Multigraph
    class_index: dict
    level: int
    gens: tuple[ReducedWord, ...]
    edge_pairs: tuple[tuple[ReducedWord, ReducedWord], ...]

    @property
    def rank(self) -> int:
        return self.gens[0].rank

    def vertex_of_word(self, w: ReducedWord) -> int:
        return self.class_index[class_of(w, self.level)]


def symmetric_closure(gens: Iterable[ReducedWord]) -> tuple[ReducedWord, ...]:
    """Close under inversion, deduplicate, reject the identity."""
    ranks = set()
    seen = {}
    for g in gens:
        ranks.add(g.rank)
        if len(g) == 0:
            raise ValueError("generating set must not contain the identity")
        for h in (g, g.inverse()):
            seen.setdefault(h.letters, h)
    if len(ranks) != 1:
        raise ValueError("generators must share one rank")
    return tuple(sorted(seen.values(), key=lambda w: w.sort_key()))


def _order_pair(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return (u, v) if word_key(u) <= word_key(v) else (v, u)


def _class_reps(rank: int, level: int) -> list[tuple[int, ...]]:
    return sorted(reduced_words(rank, level), key=word_key)


def _project(
    rank: int,
    level: int,
    gens: tuple[ReducedWord, ...],
    pairs: dict,
) -> QuotientGraph:
    reps = _class_reps(rank, level)
    index_by_raw = {raw: i for i, raw in enumerate(reps)}
    labels = [ReducedWord(raw, rank).display() for raw in reps]

    def cls(raw: tuple[int, ...]) -> int:
        return index_by_raw[raw[:level]]

    items = []
    for (u, v), tag in pairs.items():
        cu, cv = cls(u), cls(v)
        if cu == cv:
            continue
        if cu > cv:
            cu, cv = cv, cu
        items.append((cu, cv, word_key(u), word_key(v), u, v, tag))
    items.sort()

    edges = [(cu, cv, tag) for cu, cv, _ku, _kv, _u, _v, tag in items]
    edge_pairs = tuple(
        (ReducedWord(u, rank), ReducedWord(v, rank))
        for _cu, _cv, _ku, _kv, u, v, _tag in items
    )
    graph = Multigraph(labels, edges)
    class_index = {
        ClassId(ReducedWord(raw, rank), level): i for i, raw in enumerate(reps)
    }
    return QuotientGraph(graph, class_index, level, gens, edge_pairs)


def build_quotient_enum(
    n: int,
    gens: Iterable[ReducedWord],
    level: int,
    budget: int = ENUM_BUDGET,
) -> QuotientGraph:
    """Quotient by definition: enumerate words, project every group edge.

    Any group edge joining two distinct classes has an endpoint of length
    at most level + max generator length, so enumerating up to that bound
    produces the complete edge multiset.
    """
    if level < 1:
        raise ValueError("level must be at least 1")
    sym = symmetric_closure(gens)
    horizon = level + max(len(g) for g in sym)
    if count_reduced_words(n, horizon) > budget:
        raise EnumerationBudgetExceeded(
            f"{count_reduced_words(n, horizon)} words exceeds budget {budget}"
        )
    pairs: dict = {}
    for w in reduced_words(n, horizon):
        for g in sym:
            v = concat_letters(w, g.letters)
            if v[:level] == w[:level]:
                continue  # same class: loop
            key = _order_pair(w, v)
            if key not in pairs:
                tag = min(g, g.inverse(), key=lambda x: x.sort_key())
                pairs[key] = tag.display()
    return _project(n, level, sym, pairs)


def build_quotient_local(
    n: int,
    gens: Iterable[ReducedWord],
    level: int,
) -> QuotientGraph:
    """Quotient via per-class edge synthesis; same graph as the enumeration.

    For a class with representative shorter than the level, its edges are
    exactly the generator edges at the representative.  For a full-length
    representative v ending in the letter a, each occurrence of a^-1 at
    position j of a generator t contributes the single group edge
    {v (t_1..t_{j-1})^-1, v a^-1 t_{j+1}..t_r}.
    """
    if level < 1:
        raise ValueError("level must be at least 1")
    sym = symmetric_closure(gens)
    pairs: dict = {}

    def add(u: tuple[int, ...], v: tuple[int, ...], g: ReducedWord) -> None:
        key = _order_pair(u, v)
        if key not in pairs:
            tag = min(g, g.inverse(), key=lambda x: x.sort_key())
            pairs[key] = tag.display()

    for v in reduced_words(n, level):
        if len(v) < level:
            for g in sym:
                add(v, concat_letters(v, g.letters), g)
        else:
            a = v[-1]
            for g in sym:
                t = g.letters
                for j, tj in enumerate(t):
                    if tj != -a:
                        continue
                    w = v + invert_letters(t[:j])
                    add(w, concat_letters(w, t), g)
    return _project(n, level, sym, pairs)


def quotient_vertex_count(n: int, level: int) -> int:
    return count_reduced_words(n, level)


def quotients_equal(a: QuotientGraph, b: QuotientGraph) -> bool:
    """Exact equality: same classes and same labeled group-edge multiset."""
    return (
        a.level == b.level
        and a.graph.labels == b.graph.labels
        and [(u.letters, v.letters) for u, v in a.edge_pairs]
        == [(u.letters, v.letters) for u, v in b.edge_pairs]
        and [e.tag for e in a.graph.edges] == [e.tag for e in b.graph.edges]
        and [(e.u, e.v) for e in a.graph.edges] == [(e.u, e.v) for e in b.graph.edges]
    )
