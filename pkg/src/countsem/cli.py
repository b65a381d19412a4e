"""Command-line interface.

Exit codes: 0 on success, 1 on input or usage errors (and on property-check
failures), 2 when the iteration safeguard ran out before convergence.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import counting, extensions, formats, ranking, walks
from .framework import ArgumentationFramework, FrameworkError
from .generate import random_framework

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NO_CONVERGENCE = 2


def _add_io_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--input", metavar="PATH", help="framework file to read")
    sub.add_argument(
        "--format",
        choices=("apx", "tgf", "auto"),
        default="auto",
        help="input format; auto infers from the file extension",
    )
    sub.add_argument(
        "--output",
        choices=("json", "csv", "dot", "plain"),
        default="plain",
        help="result format on stdout",
    )


def _add_solver_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--alpha", type=float, default=counting.DEFAULT_ALPHA,
                     help="damping factor in (0,1)")
    sub.add_argument("--epsilon", type=float, default=counting.DEFAULT_EPSILON,
                     help="termination tolerance")
    sub.add_argument("--max-iter", type=int, default=counting.DEFAULT_MAX_ITER,
                     help="iteration safeguard")
    sub.add_argument("--trace", metavar="PATH", help="write the iteration trace as CSV")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="countsem",
        description="Graded argument strength, extensions, walks, and rankings "
        "for abstract argumentation frameworks.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="compute per-argument strengths")
    _add_io_flags(solve)
    _add_solver_flags(solve)

    rank_cmd = commands.add_parser("rank", help="rank arguments by strength")
    _add_io_flags(rank_cmd)
    _add_solver_flags(rank_cmd)

    ext = commands.add_parser("extensions", help="enumerate classical extensions")
    _add_io_flags(ext)
    ext.add_argument("--semantics", choices=extensions.SEMANTICS, required=True)

    walks_cmd = commands.add_parser("walks", help="count attack walks exactly")
    _add_io_flags(walks_cmd)
    walks_cmd.add_argument("--from", dest="source", metavar="NAME", required=True)
    walks_cmd.add_argument("--to", dest="target", metavar="NAME", required=True)
    walks_cmd.add_argument("--length", type=int, required=True)

    check = commands.add_parser("check", help="verify ranking guarantees")
    _add_io_flags(check)
    _add_solver_flags(check)
    check.add_argument("--random", type=int, metavar="INT", default=None,
                       help="check this many random frameworks instead of a file")
    check.add_argument("--size", type=int, default=6, help="arguments per random framework")
    check.add_argument("--seed", type=int, default=0, help="random generator seed")

    tree = commands.add_parser("dispute-tree", help="expand a dispute tree as DOT")
    _add_io_flags(tree)
    tree.add_argument("--root", metavar="NAME", required=True)
    tree.add_argument("--depth", type=int, required=True)

    return parser


def _error(message: str) -> int:
    print(f"countsem: error: {message}", file=sys.stderr)
    return EXIT_INPUT


def _load(args) -> ArgumentationFramework:
    if not args.input:
        raise FrameworkError("an --input file is required")
    path = Path(args.input)
    fmt = args.format
    if fmt == "auto":
        suffix = path.suffix.lower().lstrip(".")
        if suffix not in ("apx", "tgf"):
            raise FrameworkError(
                f"cannot infer format from {path.name!r}; pass --format"
            )
        fmt = suffix
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FrameworkError(f"cannot read {path}: {exc}") from exc
    return formats.parse_apx(text) if fmt == "apx" else formats.parse_tgf(text)


def _solver_params(args) -> counting.CountingParams:
    return counting.CountingParams(args.alpha, args.epsilon, args.max_iter)


def _write_trace(args, af, trace) -> None:
    if args.trace:
        Path(args.trace).write_text(formats.trace_csv(af, trace), encoding="utf-8")


def cmd_solve(args) -> int:
    af = _load(args)
    strengths, trace = counting.iterate(af, _solver_params(args))
    _write_trace(args, af, trace)
    if args.output == "json":
        print(formats.emit_strengths_json(af, strengths, trace))
    elif args.output == "csv":
        print(formats.trace_csv(af, trace), end="")
    elif args.output == "plain":
        for name, value in zip(af.names, strengths):
            print(f"{name} {value:.17g}")
    else:
        return _error("solve supports --output json, csv, or plain")
    if not trace.converged:
        print(
            f"countsem: did not converge within {trace.iterations} iterations",
            file=sys.stderr,
        )
        return EXIT_NO_CONVERGENCE
    return EXIT_OK


def cmd_rank(args) -> int:
    af = _load(args)
    strengths, trace = counting.iterate(af, _solver_params(args))
    _write_trace(args, af, trace)
    derived = ranking.rank(af.names, strengths)
    if args.output == "json":
        print(formats.emit_ranking_json(derived))
    elif args.output == "plain":
        classes = derived.equivalence_classes()
        print(" > ".join(" = ".join(cls) for cls in classes))
    else:
        return _error("rank supports --output json or plain")
    if not trace.converged:
        return EXIT_NO_CONVERGENCE
    return EXIT_OK


def cmd_extensions(args) -> int:
    af = _load(args)
    result = extensions.enumerate_extensions(af, args.semantics)
    listed = [sorted(ext) for ext in result.extensions]
    if args.output == "json":
        body = ", ".join("[" + ", ".join(f'"{n}"' for n in ext) + "]" for ext in listed)
        print(f'{{"semantics": "{result.semantics}", "extensions": [{body}]}}')
    elif args.output == "plain":
        if not listed:
            print("none")
        for ext in listed:
            print("{" + ",".join(ext) + "}")
    else:
        return _error("extensions supports --output json or plain")
    return EXIT_OK


def cmd_walks(args) -> int:
    af = _load(args)
    if args.length < 0:
        return _error("--length must be non-negative")
    count = walks.count_walks(af, args.source, args.target, args.length)
    if args.output == "json":
        print(f'{{"from": "{args.source}", "to": "{args.target}", '
              f'"length": {args.length}, "walks": {count}}}')
    else:
        print(count)
    return EXIT_OK


def _report_lines(report: ranking.PropertyReport) -> list[str]:
    lines = []
    for result in report.results:
        if result.passed:
            lines.append(f"PASS {result.name}")
        else:
            first = "; ".join(" ".join(w) for w in result.witnesses[:3])
            lines.append(f"FAIL {result.name}: {first}")
    return lines


def cmd_check(args) -> int:
    params = _solver_params(args)
    if args.random is not None:
        rng = random.Random(args.seed)
        all_ok = True
        for case in range(1, args.random + 1):
            af = random_framework(rng, rng.randint(1, args.size), rng.uniform(0.0, 0.5))
            strengths = counting.counting_semantics(af, params)
            report = ranking.check_properties(af, strengths, params.epsilon)
            if report.passed:
                print(f"PASS {case}")
            else:
                all_ok = False
                print(f"FAIL {case}")
                for line in _report_lines(report):
                    if line.startswith("FAIL"):
                        print(f"  {line}")
        return EXIT_OK if all_ok else EXIT_INPUT

    af = _load(args)
    strengths = counting.counting_semantics(af, params)
    report = ranking.check_properties(af, strengths, params.epsilon)
    if args.output == "json":
        print(formats.emit_report_json(report))
    else:
        for line in _report_lines(report):
            print(line)
    for x, y in report.near_ties:
        print(f"countsem: warning: strengths of {x} and {y} differ by less than "
              f"10*epsilon; their strict order is not meaningful", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_INPUT


def cmd_dispute_tree(args) -> int:
    af = _load(args)
    if args.depth < 0:
        return _error("--depth must be non-negative")
    tree = walks.dispute_tree(af, args.root, args.depth)
    print(formats.emit_dot(tree), end="")
    return EXIT_OK


_COMMANDS = {
    "solve": cmd_solve,
    "rank": cmd_rank,
    "extensions": cmd_extensions,
    "walks": cmd_walks,
    "check": cmd_check,
    "dispute-tree": cmd_dispute_tree,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; keep 1 as the input/usage code
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except (FrameworkError, formats.ParseError, ValueError) as exc:
        return _error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
