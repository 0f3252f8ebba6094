"""Command-line front end.

Subcommands:
  analyze  one report line per graph6 record (file or stdin)
  family   emit or analyze a named family member
  equiv    decide distinguishable equivalence of exactly two graphs
  scan     corpus scan: rho bound, pair rules, histogram, witness hunts

Exit codes: 0 clean, 1 data or violation errors, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import config
from .checks import ScanOptions, scan_corpus
from .equivalence import distinguishably_equivalent
from .errors import (
    BudgetExceededError,
    FamilySpecError,
    GroupTooLargeError,
    SymbreakError,
    UnsupportedSizeError,
)
from .graphs import (
    FAMILY_KINDS,
    FamilySpec,
    encode_graph6,
    enumerate_graphs,
    generate_family,
    read_graph6_lines,
)
from .metrics import analyze


def _read_records(path: str):
    """Yield (line_number, graph-or-error) from a graph6 file or stdin."""
    stream = sys.stdin if path == "-" else open(path, "r", encoding="ascii")
    try:
        yield from read_graph6_lines(stream)
    finally:
        if stream is not sys.stdin:
            stream.close()


def _emit_report(report, fmt: str):
    if fmt == "json":
        print(json.dumps(report.to_obj(), sort_keys=True))
    else:
        print(report.to_line())


def cmd_analyze(args) -> int:
    budget = _budget(args)
    status = 0
    for lineno, item in _read_records(args.input):
        if isinstance(item, Exception):
            print(f"error: line {lineno}: {item}", file=sys.stderr)
            status = 1
            if args.fail_fast:
                return status
            continue
        try:
            report = analyze(item, budget)
        except (GroupTooLargeError, UnsupportedSizeError) as exc:
            print(f"error: line {lineno}: {exc}", file=sys.stderr)
            status = 1
            if args.fail_fast:
                return status
            continue
        _emit_report(report, args.format)
    return status


def cmd_family(args) -> int:
    try:
        g = generate_family(FamilySpec(args.kind, args.parameter))
    except FamilySpecError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    if args.analyze:
        try:
            _emit_report(analyze(g, _budget(args)), args.format)
        except (GroupTooLargeError, UnsupportedSizeError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        return 0
    print(encode_graph6(g))
    return 0


def cmd_equiv(args) -> int:
    graphs = []
    for lineno, item in _read_records(args.input):
        if isinstance(item, Exception):
            print(f"error: line {lineno}: {item}", file=sys.stderr)
            return 1
        graphs.append(item)
    if len(graphs) != 2:
        print(f"usage error: need exactly 2 records, got {len(graphs)}", file=sys.stderr)
        return 2
    g1, g2 = graphs
    if g1.n != g2.n:
        print(f"not-equivalent vertex-count {g1.n} != {g2.n}")
        return 0
    try:
        sigma = distinguishably_equivalent(g1, g2, _budget(args))
    except BudgetExceededError as exc:
        print(f"not-equivalent search-exhausted {exc}")
        return 1
    if sigma is None:
        from .autgroup import automorphism_group
        from .perms import cycle_type

        a1, a2 = automorphism_group(g1), automorphism_group(g2)
        if a1.order != a2.order:
            reason = f"aut-order {a1.order} != {a2.order}"
        elif sorted(cycle_type(p) for p in a1.elements) != sorted(
            cycle_type(p) for p in a2.elements
        ):
            reason = "cycle-type multisets differ"
        else:
            reason = "no conjugating bijection"
        print(f"not-equivalent {reason}")
        return 0
    mapping = " ".join(f"{v}->{sigma.images[v]}" for v in range(g1.n))
    print(f"equivalent {mapping}")
    return 0


def cmd_scan(args) -> int:
    if args.enumerate is not None:
        if not 1 <= args.enumerate <= 6:
            print("usage error: --enumerate takes n in 1..6", file=sys.stderr)
            return 2
        graphs = [g for n in range(1, args.enumerate + 1) for g in enumerate_graphs(n)]
    elif args.input is not None:
        graphs = []
        for lineno, item in _read_records(args.input):
            if isinstance(item, Exception):
                print(f"error: line {lineno}: {item}", file=sys.stderr)
                return 1
            graphs.append(item)
    else:
        print("usage error: give a corpus file or --enumerate n", file=sys.stderr)
        return 2

    options = ScanOptions(jobs=args.jobs, budget=_budget(args), all_pairs=args.props)
    report = scan_corpus(graphs, options)
    for gr in report.graph_reports:
        _emit_report(gr, args.format)
    print(json.dumps(report.summary_obj(), sort_keys=True))
    return 0 if report.ok else 1


def _budget(args) -> config.Budget:
    if getattr(args, "budget", None) is None:
        return config.DEFAULT_BUDGET
    return config.Budget.uniform(args.budget)


def _add_common(p, jobs=False):
    p.add_argument("--budget", type=int, default=None, help="search budget cap")
    p.add_argument(
        "--format", choices=("lines", "json"), default="lines", help="output format"
    )
    if jobs:
        p.add_argument(
            "--jobs",
            type=int,
            default=os.cpu_count() or 1,
            help="worker processes (output is identical for any value)",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symbreak",
        description="Symmetry-breaking invariants of small graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze graph6 records")
    p.add_argument("input", nargs="?", default="-", help="graph6 file, or - for stdin")
    p.add_argument("--fail-fast", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("family", help="generate or analyze a named family member")
    p.add_argument("kind", choices=FAMILY_KINDS)
    p.add_argument("parameter", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--emit", action="store_true", help="print graph6 (default)")
    group.add_argument("--analyze", action="store_true", help="print full report")
    _add_common(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("equiv", help="decide distinguishable equivalence of two graphs")
    p.add_argument("input", nargs="?", default="-", help="file with exactly 2 records")
    _add_common(p)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("scan", help="scan a corpus")
    p.add_argument("input", nargs="?", default=None, help="graph6 corpus file")
    p.add_argument("--enumerate", type=int, default=None, metavar="N",
                   help="scan all graphs on up to N vertices (N <= 6)")
    p.add_argument("--props", action="store_true",
                   help="run pair rules on every size-2 determining pair, not just the witness")
    _add_common(p, jobs=True)
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 1
    except SymbreakError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
