"""The free product Z_m * Z_n and its cycle-tree Cayley graphs.

Elements are alternating products of a-syllables (exponent 1..m-1) and
b-syllables (exponent 1..n-1).  The graph on the generating set
{a^{+-1}, (ab)^{+-1}} is a tree of m-cycles joined by parallel edge pairs;
its unique hamiltonian circle is the subgraph on (ab)^{+-1} alone.  The
circle cannot be built whole, so it is verified on finite truncations:
words are identified when they agree up to and including their r-th
b-syllable, and the circle's truncation must be a single cycle for every
checked depth.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator, Optional

from .multigraph import Multigraph

CLASS_BUDGET = 100_000


class TruncationBudgetExceeded(RuntimeError):
    pass


@total_ordering
@dataclass(frozen=True)
class FPWord:
    """Normal form in Z_m * Z_n: alternating ('a', i) / ('b', j) syllables."""

    syllables: tuple[tuple[str, int], ...]
    m: int
    n: int

    def __post_init__(self):
        if self.m < 2 or self.n < 2:
            raise ValueError("both factor orders must be at least 2")
        prev = None
        for letter, exp in self.syllables:
            if letter not in ("a", "b"):
                raise ValueError(f"bad syllable letter {letter!r}")
            order = self.m if letter == "a" else self.n
            if not 1 <= exp <= order - 1:
                raise ValueError(f"exponent {exp} out of range for {letter}")
            if letter == prev:
                raise ValueError("syllables must alternate")
            prev = letter

    @classmethod
    def identity(cls, m: int, n: int) -> "FPWord":
        return cls((), m, n)

    @classmethod
    def from_syllables(cls, syllables: Iterable[tuple[str, int]], m: int, n: int) -> "FPWord":
        return cls(_normalize(tuple(syllables), m, n), m, n)

    @classmethod
    def parse(cls, text: str, m: int, n: int) -> "FPWord":
        """Parse the compact syntax ``a2b1a1`` (a^2 b a); "1" is the identity."""
        if text in ("", "1"):
            return cls.identity(m, n)
        if not re.fullmatch(r"([ab]\d+)+", text):
            raise ValueError(f"cannot parse free-product word {text!r}")
        sylls = [
            (mch.group(1), int(mch.group(2)))
            for mch in re.finditer(r"([ab])(\d+)", text)
        ]
        return cls.from_syllables(sylls, m, n)

    def __str__(self) -> str:
        return "".join(f"{s}{e}" for s, e in self.syllables)

    def display(self) -> str:
        return str(self) or "1"

    def _key(self):
        return (len(self.syllables), self.syllables)

    def __lt__(self, other: "FPWord") -> bool:
        return self._key() < other._key()

    def __mul__(self, other: "FPWord") -> "FPWord":
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("free-product parameter mismatch")
        return FPWord.from_syllables(self.syllables + other.syllables, self.m, self.n)

    def inverse(self) -> "FPWord":
        out = []
        for letter, exp in reversed(self.syllables):
            order = self.m if letter == "a" else self.n
            out.append((letter, order - exp))
        return FPWord(tuple(out), self.m, self.n)

    def b_count(self) -> int:
        return sum(1 for letter, _ in self.syllables if letter == "b")

    def truncate_after_b(self, r: int) -> "FPWord":
        """The prefix through the r-th b-syllable (the whole word if fewer)."""
        seen = 0
        for i, (letter, _) in enumerate(self.syllables):
            if letter == "b":
                seen += 1
                if seen == r:
                    return FPWord(self.syllables[: i + 1], self.m, self.n)
        return self


def _normalize(sylls: tuple[tuple[str, int], ...], m: int, n: int) -> tuple[tuple[str, int], ...]:
    out: list[tuple[str, int]] = []
    for letter, exp in sylls:
        order = m if letter == "a" else n
        exp %= order
        if exp == 0:
            continue
        if out and out[-1][0] == letter:
            merged = (out[-1][1] + exp) % order
            out.pop()
            if merged:
                out.append((letter, merged))
            # a cancellation exposes the previous syllable, which merges
            # with later input as it arrives
        else:
            out.append((letter, exp))
    return tuple(out)


@dataclass(frozen=True)
class RClass:
    """Truncation class: a word with at most r b-syllables names the class."""

    representative: FPWord
    depth: int


def requiv_class(w: FPWord, r: int) -> RClass:
    if r < 1:
        raise ValueError("depth must be at least 1")
    return RClass(w.truncate_after_b(r), r)


def fp_multiply(u: FPWord, v: FPWord) -> FPWord:
    return u * v


def enumerate_fp_words(m: int, n: int, max_b: int) -> Iterator[FPWord]:
    """All normal forms with at most max_b b-syllables, in a stable order."""

    def extend(sylls: tuple, last: Optional[str], b_used: int) -> Iterator[tuple]:
        yield sylls
        if last != "a":
            for e in range(1, m):
                yield from extend(sylls + (("a", e),), "a", b_used)
        if last != "b" and b_used < max_b:
            for e in range(1, n):
                yield from extend(sylls + (("b", e),), "b", b_used + 1)

    for sylls in extend((), None, 0):
        yield FPWord(sylls, m, n)


@dataclass(frozen=True)
class FPQuotient:
    graph: Multigraph
    class_index: dict
    depth: int
    gens: tuple[FPWord, ...]
    edge_pairs: tuple[tuple[FPWord, FPWord], ...]

    def vertex_of_word(self, w: FPWord) -> int:
        return self.class_index[requiv_class(w, self.depth)]

    def edge_index_of_pair(self, u: FPWord, v: FPWord) -> int:
        want = tuple(sorted((u, v)))
        for i, pair in enumerate(self.edge_pairs):
            if pair == want:
                return i
        raise KeyError(f"no edge for group pair {u.display()},{v.display()}")


def fp_symmetric_closure(gens: Iterable[FPWord]) -> tuple[FPWord, ...]:
    seen = {}
    for g in gens:
        if not g.syllables:
            raise ValueError("generating set must not contain the identity")
        for h in (g, g.inverse()):
            seen.setdefault(h.syllables, h)
    return tuple(sorted(seen.values()))


def build_truncation(
    m: int,
    n: int,
    gens: Iterable[FPWord],
    depth: int,
    budget: int = CLASS_BUDGET,
) -> FPQuotient:
    """The depth-r truncation of Cay(Z_m * Z_n; gens^{+-1}).

    Every generator changes the number of b-syllables by at most one, so
    enumerating words with at most depth+1 b-syllables produces every edge
    between distinct classes; loops are dropped.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    sym = fp_symmetric_closure(gens)
    if any(g.b_count() > 1 for g in sym):
        raise ValueError("generators may use at most one b-syllable")

    words = list(enumerate_fp_words(m, n, depth + 1))
    reps = sorted({w.truncate_after_b(depth) for w in words})
    if len(reps) > budget:
        raise TruncationBudgetExceeded(f"{len(reps)} classes exceeds {budget}")
    index = {rep: i for i, rep in enumerate(reps)}

    pairs: dict = {}
    for w in words:
        cw = w.truncate_after_b(depth)
        for g in sym:
            v = w * g
            if v.truncate_after_b(depth) == cw:
                continue
            key = tuple(sorted((w, v)))
            if key not in pairs:
                pairs[key] = min(g, g.inverse()).display()

    items = sorted(
        (
            tuple(sorted((index[u.truncate_after_b(depth)], index[v.truncate_after_b(depth)]))),
            (u, v),
            tag,
        )
        for (u, v), tag in pairs.items()
    )
    labels = [rep.display() for rep in reps]
    graph = Multigraph(labels, [(cu, cv, tag) for (cu, cv), _pair, tag in items])
    edge_pairs = tuple(pair for _cc, pair, _tag in items)
    class_index = {RClass(rep, depth): i for rep, i in index.items()}
    return FPQuotient(graph, class_index, depth, sym, edge_pairs)


def gen_a(m: int, n: int) -> FPWord:
    return FPWord((("a", 1),), m, n)


def gen_ab(m: int, n: int) -> FPWord:
    return FPWord((("a", 1), ("b", 1)), m, n)


@dataclass(frozen=True)
class TruncationReport:
    m: int
    n: int
    depths: tuple[int, ...]
    class_counts: tuple[int, ...]
    circle_is_cycle: tuple[bool, ...]
    full_connected: tuple[bool, ...]
    circle_spans_full: tuple[bool, ...]

    @property
    def passed(self) -> bool:
        return all(self.circle_is_cycle) and all(self.full_connected) and all(
            self.circle_spans_full
        )

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "depths": [
                {
                    "r": r,
                    "classes": c,
                    "circle_is_cycle": cyc,
                    "full_connected": conn,
                    "circle_spans_full": span,
                }
                for r, c, cyc, conn, span in zip(
                    self.depths,
                    self.class_counts,
                    self.circle_is_cycle,
                    self.full_connected,
                    self.circle_spans_full,
                )
            ],
            "passed": self.passed,
        }


def verify_circle_truncations(m: int, n: int, r_max: int) -> TruncationReport:
    """Check that the circle's truncation is a single cycle for r <= r_max,
    and that it spans the connected full-generating-set truncation."""
    if m < 3 or n < 2:
        raise ValueError("family needs m >= 3 and n >= 2")
    depths, counts, cyc, conn, span = [], [], [], [], []
    for r in range(1, r_max + 1):
        circle = build_truncation(m, n, [gen_ab(m, n)], r)
        full = build_truncation(m, n, [gen_a(m, n), gen_ab(m, n)], r)
        depths.append(r)
        counts.append(circle.graph.n_vertices)
        cyc.append(circle.graph.is_cycle())
        conn.append(full.graph.is_connected())
        circle_pairs = {
            tuple(p.syllables for p in pair) for pair in circle.edge_pairs
        }
        full_pairs = {tuple(p.syllables for p in pair) for pair in full.edge_pairs}
        span.append(circle_pairs <= full_pairs)
    return TruncationReport(
        m, n, tuple(depths), tuple(counts), tuple(cyc), tuple(conn), tuple(span)
    )


def disconnecting_pair_disconnects(m: int, n: int, depth: int) -> bool:
    """Removing the two distinguished circle edges b <- a^-1 and
    b a^-1 -> b^2 from the full truncation must disconnect it."""
    if depth < 2:
        raise ValueError("the distinguished edges need depth at least 2")
    full = build_truncation(m, n, [gen_a(m, n), gen_ab(m, n)], depth)
    ab = gen_ab(m, n)
    a_inv = gen_a(m, n).inverse()
    b = FPWord((("b", 1),), m, n)
    e1 = full.edge_index_of_pair(a_inv, a_inv * ab)
    assert a_inv * ab == b
    u2 = b * a_inv
    e2 = full.edge_index_of_pair(u2, u2 * ab)
    return not full.graph.without_edges([e1, e2]).is_connected()
