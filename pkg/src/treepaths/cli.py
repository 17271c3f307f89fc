"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or validation
error, 3 I/O or parse error. Requested data goes to stdout, diagnostics to
stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import exactcount as ec
from . import oracle
from .treeio import FORMATS, TreeParseError, classify, emit_histogram, parse_edge_list
from .verify import run_grid

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
MAX_REPORTED_MISMATCHES = 10


class UsageError(Exception):
    pass


def _err(msg: str) -> None:
    print(f"treepaths: {msg}", file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treepaths",
        description="Exact path counts in perfect m-ary trees, checked against a BFS oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="closed-form path counts for a perfect tree")
    p.add_argument("kind", choices=("rooted", "unrooted"))
    p.add_argument("--m", type=int, required=True, help="branching factor (>= 2)")
    p.add_argument("--depth", type=int, help="depth r (rooted trees)")
    p.add_argument("--diameter", type=int, help="diameter D (unrooted trees)")
    p.add_argument("--t", type=int, help="single path length; omit for the full table")
    p.add_argument("--source", choices=("prop", "theorem"), default="prop",
                   help="formula family (default: prop)")
    p.add_argument("--format", choices=FORMATS, default="plain")

    p = sub.add_parser("verify", help="compare every formula with the BFS oracle on a grid")
    p.add_argument("--m-min", type=int, default=2)
    p.add_argument("--m-max", type=int, default=5)
    p.add_argument("--max-depth", type=int, default=5)
    p.add_argument("--max-diameter", type=int, default=10)
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_VERTEX_BUDGET,
                   help="skip shapes with more vertices than this")
    p.add_argument("--workers", type=int, default=1, help="BFS worker processes per shape")

    p = sub.add_parser("histogram", help="distance histogram of an edge-list tree")
    p.add_argument("--input", required=True, help="edge-list file, or - for stdin")
    p.add_argument("--format", choices=FORMATS, default="plain")
    return parser


def _count_one(kind: str, shape, t: int, source: str) -> int:
    if kind == "rooted":
        fn = ec.rooted_count_theorem if source == "theorem" else ec.rooted_count_prop
    else:
        fn = ec.unrooted_count_theorem if source == "theorem" else ec.unrooted_count_prop
    return fn(shape, t)


def cmd_count(args) -> int:
    if args.kind == "rooted":
        if args.depth is None or args.diameter is not None:
            raise UsageError("rooted trees take --depth (and not --diameter)")
        shape = ec.RootedShape(args.m, args.depth)
        n = ec.vr(shape.m, shape.r)
    else:
        if args.diameter is None or args.depth is not None:
            raise UsageError("unrooted trees take --diameter (and not --depth)")
        shape = ec.UnrootedShape(args.m, args.diameter)
        n = ec.vu(shape.m, shape.D)

    if args.t is not None:
        value = _count_one(args.kind, shape, args.t, args.source)
        if args.format == "plain":
            sys.stdout.write(f"{value}\n")
        else:
            sys.stdout.write(emit_histogram(oracle.DistanceHistogram(n, {args.t: value}), args.format))
        return EXIT_OK

    counts = {t: _count_one(args.kind, shape, t, args.source)
              for t in range(1, shape.diameter + 1)}
    sys.stdout.write(emit_histogram(oracle.DistanceHistogram(n, counts), args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.m_min < 2:
        raise UsageError(f"--m-min must be >= 2, got {args.m_min}")
    if args.m_max < args.m_min:
        raise UsageError("--m-max must be >= --m-min")
    if min(args.max_depth, args.max_diameter) < 0:
        raise UsageError("--max-depth and --max-diameter must be >= 0")
    if args.budget < 1 or args.workers < 1:
        raise UsageError("--budget and --workers must be positive")

    failures = []
    shapes = checks = 0
    for rep in run_grid(args.m_min, args.m_max, args.max_depth, args.max_diameter,
                        args.budget, args.workers):
        print(rep.line(), flush=True)
        shapes += 1
        checks += rep.checks
        failures.extend(rep.mismatches)
    if failures:
        _err(f"{len(failures)} mismatches over {shapes} shapes; first {MAX_REPORTED_MISMATCHES}:")
        for mm in failures[:MAX_REPORTED_MISMATCHES]:
            print(f"  {mm}", file=sys.stderr)
        return EXIT_MISMATCH
    _err(f"all {checks} checks passed on {shapes} shapes")
    return EXIT_OK


def cmd_histogram(args) -> int:
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        tree = parse_edge_list(text)
    except OSError as exc:
        _err(f"cannot read {args.input}: {exc.strerror or exc}")
        return EXIT_IO
    except TreeParseError as exc:
        _err(f"{args.input}: {exc}")
        return EXIT_IO

    hist = oracle.distance_histogram(tree)
    degree = oracle.degree_formula_counts(tree)
    summary = classify(tree).summary()
    agree = all(degree[i] == hist[i + 1] for i in range(3))
    check_line = "degree formulas t=1..3: " + " ".join(str(v) for v in degree) + (
        " (match)" if agree else " (MISMATCH)")

    if args.format == "json":
        payload = json.loads(emit_histogram(hist, "json"))
        payload["degree_formulas"] = {str(i + 1): str(v) for i, v in enumerate(degree)}
        payload["classification"] = summary
        sys.stdout.write(json.dumps(payload) + "\n")
    elif args.format == "csv":
        sys.stdout.write(emit_histogram(hist, "csv"))
        _err(check_line)
        _err(summary)
    else:
        sys.stdout.write(emit_histogram(hist, "plain"))
        print(check_line)
        print(summary)
    if not agree:
        _err("degree formulas disagree with BFS counts")
        return EXIT_MISMATCH
    return EXIT_OK


COMMANDS = {"count": cmd_count, "verify": cmd_verify, "histogram": cmd_histogram}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ValueError, TypeError) as exc:
        _err(str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
