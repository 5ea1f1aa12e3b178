"""Command-line front end.

Exit codes: the certify command maps its verdict to 0 (Yes), 1 (No), or
2 (Unknown); verification commands exit 0 on pass and 1 on fail; usage and
input errors exit 3; internal failures exit 4.  Identical inputs always
produce byte-identical output.

Budgets can be preset via HAMCIRC_ORBIT_CAP and HAMCIRC_ENUM_BUDGET;
explicit flags take precedence.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .certifier import (
    VERDICT_NO,
    VERDICT_UNKNOWN,
    VERDICT_YES,
    CertifierInternalError,
    certify,
    classify,
)
from .finite import build_finite_cayley, parse_spec, verify_unique_finite
from .freeproduct import (
    TruncationBudgetExceeded,
    build_truncation,
    gen_ab,
    verify_circle_truncations,
)
from .minimize import DEFAULT_ORBIT_CAP, OrbitCapExceeded
from .quotients import EnumerationBudgetExceeded
from .outerplanar import tree_generators, verify_outerplanar_quotient
from .quotients import ENUM_BUDGET, build_quotient_enum, build_quotient_local
from .words import ReducedWord
from .automorphisms import chain_moves

EXIT_USAGE = 3
EXIT_INTERNAL = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); keep 2 for Unknown
        raise UsageError(message)


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}")


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc, indent=2, sort_keys=False))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hamcirc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="decide the hamiltonian-circle property")
    p.add_argument("-n", "--rank", type=int, required=True)
    p.add_argument("word")
    p.add_argument("--max-level", type=int, default=None)
    p.add_argument("--orbit-cap", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("quotient", help="build a truncation quotient, export DOT")
    p.add_argument("-n", "--rank", type=int, required=True)
    p.add_argument("-s", "--word", action="append", required=True)
    p.add_argument("-l", "--level", type=int, required=True)
    p.add_argument("--with-tree", action="store_true",
                   help="include the standard generators")
    p.add_argument("--enum", action="store_true",
                   help="use the enumeration construction instead of the local one")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--dot", metavar="PATH")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("cycletree", help="verify the cycle-tree circle truncations")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-r", "--depth", type=int, required=True)
    p.add_argument("--dot", metavar="PATH",
                   help="export the circle truncation at the deepest level")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("classify", help="canonical form under automorphisms")
    p.add_argument("-n", "--rank", type=int, required=True)
    p.add_argument("word")
    p.add_argument("--orbit-cap", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("finite", help="count hamiltonian cycles of a finite Cayley graph")
    p.add_argument("spec", help="cyclic:8:1,2 or dihedral:10:a,b,aba")
    p.add_argument("--dot", metavar="PATH")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("outerplanar", help="check truncations for K4/K2,3 minors")
    p.add_argument("-n", "--rank", type=int, required=True)
    p.add_argument("-s", "--word", required=True)
    p.add_argument("-l", "--level", type=int, required=True)
    p.add_argument("--json", action="store_true")
    return parser


def _cmd_certify(args) -> int:
    cap = args.orbit_cap if args.orbit_cap is not None else _env_int(
        "HAMCIRC_ORBIT_CAP", DEFAULT_ORBIT_CAP
    )
    word = ReducedWord.parse(args.word, args.rank)
    cert = certify(args.rank, word, max_level=args.max_level, orbit_cap=cap)
    if args.json:
        _emit_json(cert.to_json_dict())
    else:
        if cert.verdict == VERDICT_YES:
            tail = "unique" if cert.unique else "uniqueness not established"
            print(f"YES ({tail})")
            print(f"quotient cycles verified at levels {list(cert.checked_levels)}")
        elif cert.verdict == VERDICT_NO:
            print(f"NO ({cert.reason})")
        else:
            print(f"UNKNOWN ({cert.reason})")
        if cert.witness:
            print("witness: " + " ".join(chain_moves(cert.witness)))
        if cert.note:
            print(f"note: {cert.note}", file=sys.stderr)
    return {VERDICT_YES: 0, VERDICT_NO: 1, VERDICT_UNKNOWN: 2}[cert.verdict]


def _cmd_quotient(args) -> int:
    if args.level < 1:
        raise UsageError("level must be at least 1")
    n = args.rank
    gens = [ReducedWord.parse(w, n) for w in args.word]
    if args.with_tree:
        gens = tree_generators(n) + gens
    if args.enum:
        budget = args.budget if args.budget is not None else _env_int(
            "HAMCIRC_ENUM_BUDGET", ENUM_BUDGET
        )
        q = build_quotient_enum(n, gens, args.level, budget=budget)
    else:
        q = build_quotient_local(n, gens, args.level)
    highlight = []
    if args.with_tree:
        marks = set()
        for w in args.word:
            parsed = ReducedWord.parse(w, n)
            canon = min(parsed, parsed.inverse(), key=lambda x: x.sort_key())
            marks.add(canon.display())
        highlight = [
            i for i, e in enumerate(q.graph.edges) if e.tag in marks
        ]
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(q.graph.to_dot(highlight=highlight))
    doc = {
        "rank": n,
        "level": args.level,
        "generators": sorted(str(g) for g in q.gens),
        "vertices": q.graph.n_vertices,
        "edges": q.graph.n_edges,
        "is_cycle": q.graph.is_cycle(),
    }
    if args.json:
        _emit_json(doc)
    else:
        print(
            f"level {args.level}: {doc['vertices']} vertices, "
            f"{doc['edges']} edges, cycle: {'yes' if doc['is_cycle'] else 'no'}"
        )
    return 0


def _cmd_cycletree(args) -> int:
    if args.depth < 1:
        raise UsageError("depth must be at least 1")
    report = verify_circle_truncations(args.m, args.n, args.depth)
    if args.dot:
        circle = build_truncation(
            args.m, args.n, [gen_ab(args.m, args.n)], args.depth
        )
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(circle.graph.to_dot())
    if args.json:
        _emit_json(report.to_json_dict())
    else:
        for r, count, cyc in zip(report.depths, report.class_counts, report.circle_is_cycle):
            print(f"depth {r}: cycle of length {count}: {'PASS' if cyc else 'FAIL'}")
        print("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def _cmd_classify(args) -> int:
    cap = args.orbit_cap if args.orbit_cap is not None else _env_int(
        "HAMCIRC_ORBIT_CAP", DEFAULT_ORBIT_CAP
    )
    word = ReducedWord.parse(args.word, args.rank)
    form = classify(args.rank, word, orbit_cap=cap)
    if args.json:
        _emit_json(form.to_json_dict())
    else:
        print(form.kind or "None")
        if form.witness is not None:
            print("witness: " + " ".join(chain_moves(form.witness)))
    return 0


def _cmd_finite(args) -> int:
    spec = parse_spec(args.spec)
    count, unique = verify_unique_finite(spec)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(build_finite_cayley(spec).to_dot())
    if args.json:
        _emit_json({"spec": str(spec), "hamiltonian_cycles": count, "unique": unique})
    else:
        print(f"hamiltonian cycles: {count}, unique: {'yes' if unique else 'no'}")
    return 0


def _cmd_outerplanar(args) -> int:
    if args.level < 1:
        raise UsageError("level must be at least 1")
    word = ReducedWord.parse(args.word, args.rank)
    report = verify_outerplanar_quotient(args.rank, word, args.level)
    if not report.precondition_ok:
        print(
            f"warning: certifier verdict is {report.verdict}, not Yes; "
            "checks run anyway",
            file=sys.stderr,
        )
    if args.json:
        _emit_json(report.to_json_dict())
    else:
        for lv in report.levels:
            print(
                f"level {lv.level}: {lv.vertices} vertices, "
                f"outerplanar: {'yes' if lv.outerplanar else 'no'}, "
                f"circle is hamiltonian cycle: "
                f"{'yes' if lv.circle_is_ham_cycle else 'no'}"
            )
        print("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


_DISPATCH = {
    "certify": _cmd_certify,
    "quotient": _cmd_quotient,
    "cycletree": _cmd_cycletree,
    "classify": _cmd_classify,
    "finite": _cmd_finite,
    "outerplanar": _cmd_outerplanar,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _DISPATCH[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CertifierInternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (
        ValueError,
        KeyError,
        OSError,
        OrbitCapExceeded,
        EnumerationBudgetExceeded,
        TruncationBudgetExceeded,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
