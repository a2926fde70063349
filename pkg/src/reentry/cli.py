"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 solver size guard exceeded.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import _backend
from .approx import fptas_solve
from .core import (
    GuardExceeded,
    InvalidInstance,
    InvalidSchedule,
    LoopRef,
    evaluate_objective,
    simulate_sequence,
)
from .exact import assignment_to_schedule, brute_force_optimum, dp_optimum
from .experiment import run_ratio_experiment
from .gantt import render_gantt
from .generate import GenConfig, generate_random_instance
from .io import dumps_instance, format_decimal, format_exact, format_rational, parse_rational, read_instance, write_instance
from .reductions import partition_reduction, three_partition_reduction
from .rules import dispatch_schedule, parse_rule

EXIT_OK, EXIT_INVALID, EXIT_GUARD = 0, 2, 3


def _show(x: Fraction) -> str:
    return f"{format_exact(x)} ({format_decimal(x, 6)})"


def _solve(inst, rule: str, eps: str | None, tb: str | None):
    """Return (schedule, objective, provenance)."""
    name = rule.partition("+")[0].lower()
    if name == "dp":
        value, a = dp_optimum(inst)
        sched, _ = assignment_to_schedule(inst, a)
        return sched, value, f"dp backend={_backend.BACKEND}"
    if name == "bruteforce":
        value, a = brute_force_optimum(inst)
        sched, _ = assignment_to_schedule(inst, a)
        return sched, value, f"bruteforce backend={_backend.BACKEND}"
    if name == "fptas":
        e = parse_rational(eps if eps is not None else "0.1")
        sched, value = fptas_solve(inst, e)
        return sched, value, f"fptas eps={format_rational(e)}"
    drule = parse_rule(rule, tb)
    sched = dispatch_schedule(inst, drule)
    return sched, evaluate_objective(inst, sched), drule.descriptor


def _print_schedule(inst, sched):
    for j, starts in enumerate(sched.starts):
        print(f"job {j + 1}: starts {','.join(map(str, starts))} C={starts[-1] + inst.m}")


def cmd_solve(args):
    inst = read_instance(args.input)
    sched, value, prov = _solve(inst, args.rule, args.eps, args.tb)
    print(f"solver: {prov}")
    print(f"objective: {_show(value)}")
    _print_schedule(inst, sched)


def parse_sequence(text: str) -> list[LoopRef]:
    refs = []
    for part in text.replace(" ", "").split(";"):
        if not part:
            continue
        j, _, k = part.partition(",")
        refs.append(LoopRef(int(j) - 1, int(k)))
    return refs


def cmd_evaluate(args):
    inst = read_instance(args.input)
    sched = simulate_sequence(inst, parse_sequence(args.seq))
    print(f"objective: {_show(evaluate_objective(inst, sched))}")
    _print_schedule(inst, sched)


def cmd_gantt(args):
    inst = read_instance(args.input)
    sched, _, _ = _solve(inst, args.rule, args.eps, args.tb)
    print(render_gantt(inst, sched, "svg" if args.svg else "text"))


def _config(args) -> GenConfig:
    return GenConfig(
        n_range=(args.n_min, args.n_max),
        m_range=(args.m_min, args.m_max),
        loops_range=(args.loops_min, args.loops_max),
        weight_range=(args.weight_min, args.weight_max),
        seed=args.seed,
        count=args.count,
    )


def cmd_gen(args):
    cfg = _config(args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for i in range(cfg.count):
        write_instance(generate_random_instance(cfg, i), out / f"instance_{i:05d}.json")
    print(f"wrote {cfg.count} instances to {out}")


def cmd_experiment(args):
    cfg = _config(args)
    rule = parse_rule(args.rule, args.tb)
    result = run_ratio_experiment(cfg, rule, args.solver, workers=args.workers)
    Path(args.out).write_text(result.csv_text(), encoding="utf-8")
    print(f"seed: {cfg.seed}")
    print(result.summary())


def _items(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def cmd_reduce(args):
    if args.problem == "partition":
        dec = partition_reduction(_items(args.items))
    else:
        if args.b is None or args.q is None:
            raise ValueError("3partition needs --b and --q")
        dec = three_partition_reduction(_items(args.items), args.b, args.q)
    sys.stdout.write(dumps_instance(dec.instance))
    print(f"threshold: {format_exact(dec.threshold)}")


def _add_ranges(p):
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--m-min", type=int, default=2)
    p.add_argument("--m-max", type=int, default=6)
    p.add_argument("--loops-min", type=int, default=1)
    p.add_argument("--loops-max", type=int, default=20)
    p.add_argument("--weight-min", type=int, default=1)
    p.add_argument("--weight-max", type=int, default=20)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reentry", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--rule", default="wlrl", help="lrl | wlrl | wlrl-static | fifo | dp | bruteforce | fptas")
    p.add_argument("--eps", help="FPTAS accuracy, decimal or fraction")
    p.add_argument("--tb", help="tie-break chain, e.g. loops-desc,weight-asc")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("evaluate", help="time a loop sequence and evaluate it")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--seq", required=True, help='1-based "job,loop;job,loop;..."')
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("gantt", help="draw the schedule of a rule or solver")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--rule", default="wlrl")
    p.add_argument("--eps")
    p.add_argument("--tb")
    p.add_argument("--svg", action="store_true")
    p.set_defaults(func=cmd_gantt)

    p = sub.add_parser("gen", help="write random instances")
    _add_ranges(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("experiment", help="rule-versus-optimum ratio study")
    _add_ranges(p)
    p.add_argument("--rule", default="wlrl")
    p.add_argument("--tb")
    p.add_argument("--solver", choices=["dp", "bruteforce"], default="dp")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("reduce", help="build a hardness-reduction instance")
    p.add_argument("problem", choices=["partition", "3partition"])
    p.add_argument("--items", required=True)
    p.add_argument("--b", type=int)
    p.add_argument("--q", type=int)
    p.set_defaults(func=cmd_reduce)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (InvalidInstance, InvalidSchedule, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
