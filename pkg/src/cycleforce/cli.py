"""Command-line front door.

Exit codes: 0 success, 2 parse error, 3 no witness found (find-cycles),
4 witness refused because the sequence is large, 5 unrealizable degree.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import constructions
from .cycles import find_disjoint_cycles
from .digraph import FORMATS, DigraphParseError, parse_digraph, render_digraph
from .sequences import (
    SequenceParseError,
    UnrealizableDegreeError,
    forces_one,
    forces_two,
    parse_sequence,
)
from .verify import adjudicate_intro_examples, verify_fact_deletion, verify_theorem

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NO_WITNESS = 3
EXIT_LARGE = 4
EXIT_UNREALIZABLE = 5


def _color_enabled() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def _paint(text: str, ok: bool) -> str:
    if not _color_enabled():
        return text
    code = "32" if ok else "31"
    return f"\x1b[{code}m{text}\x1b[0m"


def _read_sequence(arg: str):
    text = Path(arg[1:]).read_text() if arg.startswith("@") else arg
    return parse_sequence(text)


def _cmd_check_seq(args) -> int:
    d = _read_sequence(args.sequence)
    j = forces_one(d)
    forces2, cert = forces_two(d)
    if args.format == "json":
        payload = {
            "sequence": list(d.terms),
            "forces_one": j is not None,
            "forces_one_j": j,
            "forces_two": forces2,
            "certificate": None
            if cert is None
            else {"r": cert.r, "s": cert.s, "j": cert.j},
        }
        print(json.dumps(payload, separators=(",", ":"), sort_keys=True))
        return EXIT_OK
    if j is None:
        print("forces-1: no")
    else:
        print(f"forces-1: yes (smallest j with d_j >= j: j={j})")
    if cert is None:
        print("forces-2: no")
    else:
        jtxt = "absent" if cert.j is None else str(cert.j)
        print(f"forces-2: yes (certificate r={cert.r}, s={cert.s}, j={jtxt})")
    return EXIT_OK


def _cmd_witness(args) -> int:
    d = _read_sequence(args.sequence)
    try:
        digraph, case = constructions.realize_nonlarge(d)
    except constructions.SequenceIsLargeError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_LARGE
    except UnrealizableDegreeError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_UNREALIZABLE
    print(f"construction: {case}", file=sys.stderr)
    sys.stdout.write(render_digraph(digraph, args.format))
    return EXIT_OK


def _cmd_construct(args) -> int:
    if args.kind == "tournament":
        digraph = constructions.transitive_tournament(args.n)
        layout = None
    elif args.kind == "fig1":
        digraph = constructions.hub_tournament(args.n)
        layout = None
    else:
        if args.r is None or args.s is None:
            print("error: fig2 requires --r and --s", file=sys.stderr)
            return EXIT_PARSE
        try:
            digraph, layout = constructions.layered_witness(args.n, args.r, args.s)
        except ValueError as err:
            print(f"error: {err}", file=sys.stderr)
            return EXIT_PARSE
    sys.stdout.write(render_digraph(digraph, args.format))
    if args.roles and layout is not None:
        print(json.dumps(layout.role_map(), separators=(",", ":"), sort_keys=True))
    return EXIT_OK


def _cmd_find_cycles(args) -> int:
    try:
        digraph = parse_digraph(Path(args.file).read_text())
    except DigraphParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    witness = find_disjoint_cycles(digraph, args.k)
    if witness is None:
        print('"none"')
        return EXIT_NO_WITNESS
    print(witness.to_json())
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = verify_theorem(
        args.max_n, args.k, loops=args.loops, node_limit=args.node_limit,
        jobs=args.jobs,
    )
    if args.format == "json":
        print(report.to_json())
    else:
        sys.stdout.write(report.to_table())
        verdict = "PASS" if report.ok else "FAIL"
        print(_paint(verdict, report.ok))
    return EXIT_OK if report.ok else 1


def _cmd_verify_deletion(args) -> int:
    report = verify_fact_deletion(args.max_n)
    if args.format == "json":
        print(report.to_json())
    else:
        sys.stdout.write(report.to_table())
    return EXIT_OK if report.ok else 1


def _cmd_adjudicate(args) -> int:
    report = adjudicate_intro_examples(tuple(args.n))
    if args.format == "json":
        print(report.to_json())
    else:
        sys.stdout.write(report.to_table())
    return EXIT_OK if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycleforce",
        description="Decide whether outdegree sequences force 1 or 2 "
        "vertex-disjoint cycles; build witness digraphs; verify exhaustively.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-seq", help="forcing verdicts for a sequence")
    p.add_argument("sequence", help="comma-separated terms, or @file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_check_seq)

    p = sub.add_parser("witness", help="digraph realizing a non-large sequence "
                       "with no two disjoint cycles")
    p.add_argument("sequence", help="comma-separated terms, or @file")
    p.add_argument("--format", choices=FORMATS, default="edge-list")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("construct", help="emit an extremal construction")
    p.add_argument("kind", choices=("tournament", "fig1", "fig2"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--format", choices=FORMATS, default="edge-list")
    p.add_argument("--roles", action="store_true",
                   help="also print the fig2 vertex-role map as JSON")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("find-cycles", help="find k vertex-disjoint cycles")
    p.add_argument("file", help="edge-list digraph file")
    p.add_argument("-k", type=int, default=2)
    p.set_defaults(func=_cmd_find_cycles)

    p = sub.add_parser("verify", help="exhaustive forcing check at small n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("-k", type=int, default=2, choices=(1, 2))
    p.add_argument("--loops", dest="loops", action="store_true", default=True)
    p.add_argument("--no-loops", dest="loops", action="store_false")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--node-limit", type=int, default=None,
                   help="per-sequence search budget; exceeding it marks the "
                   "record as partial")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("verify-deletion",
                       help="term-deletion largeness preservation check")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_verify_deletion)

    p = sub.add_parser("adjudicate-intro",
                       help="verdicts for the two motivating sequence families")
    p.add_argument("--n", type=int, nargs="+", default=[5, 6])
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_adjudicate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SequenceParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except UnrealizableDegreeError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_UNREALIZABLE
    except FileNotFoundError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
