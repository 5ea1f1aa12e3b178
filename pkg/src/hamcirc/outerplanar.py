"""Outerplanarity evidence for the full-generating-set quotients.

When the certifier answers Yes for a word s, every truncation
Cay(F_n; A u s^{+-1}) / level-L must be outerplanar (no K4 or K2,3 minor)
and must contain the circle's truncation as a hamiltonian cycle.  Only the
checked levels are attested; nothing is claimed about the infinite graph
beyond them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certifier import VERDICT_YES, certify
from .multigraph import is_outerplanar
from .quotients import build_quotient_local
from .words import ReducedWord


@dataclass(frozen=True)
class LevelReport:
    level: int
    vertices: int
    outerplanar: bool
    circle_is_ham_cycle: bool

    @property
    def passed(self) -> bool:
        return self.outerplanar and self.circle_is_ham_cycle


@dataclass(frozen=True)
class OuterplanarReport:
    word: str
    rank: int
    verdict: str
    levels: tuple[LevelReport, ...]

    @property
    def precondition_ok(self) -> bool:
        return self.verdict == VERDICT_YES

    @property
    def passed(self) -> bool:
        return all(lv.passed for lv in self.levels)

    def to_json_dict(self) -> dict:
        return {
            "word": self.word,
            "levels": [
                {
                    "l": lv.level,
                    "vertices": lv.vertices,
                    "outerplanar": lv.outerplanar,
                    "circle_is_ham_cycle": lv.circle_is_ham_cycle,
                }
                for lv in self.levels
            ],
        }


def tree_generators(n: int) -> list[ReducedWord]:
    return [ReducedWord((i,), n) for i in range(1, n + 1)]


def verify_outerplanar_quotient(n: int, s: ReducedWord, max_level: int) -> OuterplanarReport:
    """Check outerplanarity and the circle-cycle property per level.

    The certifier verdict for s is recorded; when it is not Yes the checks
    still run (callers report the violated precondition rather than skip),
    which is how negative controls are exercised.
    """
    if max_level < 1:
        raise ValueError("max_level must be at least 1")
    cert = certify(n, s, max_level=1)
    levels = []
    for level in range(1, max_level + 1):
        full = build_quotient_local(n, tree_generators(n) + [s], level)
        circle = build_quotient_local(n, [s], level)
        circle_pairs = {
            (u.letters, v.letters) for u, v in circle.edge_pairs
        }
        full_pairs = {(u.letters, v.letters) for u, v in full.edge_pairs}
        contained = circle_pairs <= full_pairs
        levels.append(
            LevelReport(
                level=level,
                vertices=full.graph.n_vertices,
                outerplanar=is_outerplanar(full.graph),
                circle_is_ham_cycle=circle.graph.is_cycle() and contained,
            )
        )
    return OuterplanarReport(str(s), n, cert.verdict, tuple(levels))
