"""``disperse`` command line: solve, verify, gen, bench."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .bench import COUNTER_FACTOR, run_bench
from .cycle_solver import solve_cycle
from .formats import (
    format_instance,
    format_rational,
    parse_instance,
    parse_rational,
    solution_from_json,
    solution_to_json,
)
from .line_solver import solve_line
from .model import (
    UNBOUNDED,
    InstanceError,
    InternalConsistencyError,
    LineInstance,
)
from .oracle import GeneratorConfig, UnsatisfiableConfig, gen_instance
from .verify import verify_solution

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _color() -> bool:
    return os.environ.get("DISPERSE_COLOR", "1") != "0" and sys.stdout.isatty()


def _bold(s: str) -> str:
    return f"\033[1m{s}\033[0m" if _color() else s


def _err(msg: str) -> None:
    print(f"disperse: {msg}", file=sys.stderr)


def _read_instance(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_instance(text)


def _describe_certificate(cert) -> str:
    name = type(cert).__name__
    fields = {k: v for k, v in vars(cert).items()}
    inner = ", ".join(
        f"{k}={format_rational(v) if k == 'value' else v}" for k, v in fields.items()
    )
    return f"{name}({inner})" if inner else name


def cmd_solve(args) -> int:
    try:
        inst = _read_instance(args.instance)
        bound = parse_rational(args.initial_bound) if args.initial_bound else None
        if bound is not None and bound <= 0:
            raise InstanceError("--initial-bound must be positive")
    except (OSError, InstanceError, ValueError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    try:
        if isinstance(inst, LineInstance):
            sol = solve_line(inst, bound, check_invariants=args.check_invariants)
        else:
            if bound is not None:
                _err("--initial-bound applies to line instances only")
                return EXIT_INPUT
            sol = solve_cycle(inst, check_invariants=args.check_invariants)
    except InternalConsistencyError as exc:
        _err(f"internal invariant violated:\n{exc}")
        return EXIT_INTERNAL
    if args.json:
        print(solution_to_json(sol))
        return EXIT_OK
    d = "unbounded" if sol.d_min is UNBOUNDED else format_rational(sol.d_min)
    print(_bold(f"{sol.kind} instance, n = {len(sol)}"))
    print(f"d_min       {d}" + ("" if sol.d_min is UNBOUNDED else f"  (~{float(sol.d_min):.17g})"))
    print(f"certificate {_describe_certificate(sol.certificate)}")
    print(f"{'index':>6}  point")
    for k, p in enumerate(sol.points, start=1):
        print(f"{k:>6}  {format_rational(p)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        inst = _read_instance(args.instance)
        sol = solution_from_json(Path(args.solution).read_text(encoding="utf-8"))
    except (OSError, InstanceError, ValueError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    try:
        report = verify_solution(inst, sol)
    except ValueError as exc:
        _err(str(exc))
        return EXIT_INPUT
    print(report)
    return EXIT_OK if report.optimal else EXIT_VERIFY_FAILED


def cmd_gen(args) -> int:
    cfg = GeneratorConfig(
        seed=args.seed,
        n=args.n,
        kind=args.kind,
        coord_max=args.coord_max,
        allow_touching=args.allow_touching,
        allow_degenerate=args.allow_degenerate,
    )
    try:
        text = format_instance(gen_instance(cfg))
    except (UnsatisfiableConfig, InstanceError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    header = f"# gen --kind {args.kind} --n {args.n} --seed {args.seed} --coord-max {args.coord_max}\n"
    if args.out:
        Path(args.out).write_text(header + text, encoding="utf-8")
    else:
        sys.stdout.write(header + text)
    return EXIT_OK


def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return sizes


def cmd_bench(args) -> int:
    try:
        report = run_bench(args.sizes, seed=args.seed, repeats=args.repeats, kind=args.kind)
    except UnsatisfiableConfig as exc:
        _err(str(exc))
        return EXIT_INPUT
    timing = not args.counters_only
    print(report.to_csv(timing) if args.csv else report.to_table(timing), end="" if args.csv else "\n")
    bad = [r.n for r in report.rows if not r.within_bound]
    if bad:
        _err(f"counter bound {COUNTER_FACTOR}n exceeded for n in {bad}")
        return EXIT_INTERNAL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="disperse",
        description="Max-min point dispersion on disjoint intervals (line or cycle).",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve an instance file")
    s.add_argument("instance", help="instance file, or - for stdin")
    s.add_argument("--json", action="store_true", help="print the solution as JSON")
    s.add_argument("--check-invariants", action="store_true",
                   help="check every scan invariant after each interval (quadratic)")
    s.add_argument("--initial-bound", metavar="P/Q", help="start the line scan from this d_min")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a solution JSON against an instance")
    v.add_argument("instance")
    v.add_argument("solution")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="write a seeded random instance")
    g.add_argument("--kind", choices=("line", "cycle"), default="line")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--coord-max", type=int, default=200)
    g.add_argument("--allow-touching", action="store_true")
    g.add_argument("--allow-degenerate", action="store_true")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="time the solver on seeded instances of several sizes")
    b.add_argument("--sizes", type=_sizes, required=True, help="comma-separated n values")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--repeats", type=int, default=1)
    b.add_argument("--kind", choices=("line", "cycle"), default="line")
    b.add_argument("--csv", action="store_true")
    b.add_argument("--counters-only", action="store_true",
                   help="omit timing columns so the output is reproducible")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
