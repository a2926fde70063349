"""Performance-ratio experiments: a dispatch rule against an exact optimum."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .core import GuardExceeded, evaluate_objective
from .exact import brute_force_optimum, dp_optimum
from .generate import GenConfig, generate_random_instance
from .io import format_decimal, format_exact
from .rules import DispatchRule, dispatch_schedule

CSV_COLUMNS = ["seed", "index", "n", "m", "total_loops", "rule_obj", "opt_obj", "ratio_decimal", "rule_descriptor"]
SOLVERS = ("dp", "bruteforce")


@dataclass(frozen=True)
class RatioRecord:
    seed: int
    index: int
    n: int
    m: int
    total_loops: int
    rule_objective: Fraction
    opt_objective: Fraction
    rule_descriptor: str

    @property
    def ratio(self) -> Fraction:
        return self.rule_objective / self.opt_objective

    def within_worst_case_bound(self) -> bool:
        """``rule/opt <= (1 + sqrt 2)/2`` in rational arithmetic."""
        return (2 * self.rule_objective - self.opt_objective) ** 2 <= 2 * self.opt_objective**2

    def row(self) -> list[str]:
        return [
            str(self.seed), str(self.index), str(self.n), str(self.m), str(self.total_loops),
            format_exact(self.rule_objective), format_exact(self.opt_objective),
            format_decimal(self.ratio, 9), self.rule_descriptor,
        ]


@dataclass
class ExperimentResult:
    records: list[RatioRecord]
    skipped: list[tuple[int, str]] = field(default_factory=list)
    rule_descriptor: str = ""
    solver: str = "dp"

    @property
    def mean_ratio(self) -> Fraction | None:
        if not self.records:
            return None
        return sum((r.ratio for r in self.records), Fraction(0)) / len(self.records)

    @property
    def argmax(self) -> RatioRecord | None:
        # earliest index wins ties
        return max(self.records, key=lambda r: (r.ratio, -r.index), default=None)

    def csv_text(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for rec in self.records:
            writer.writerow(rec.row())
        return buf.getvalue()

    def summary(self) -> str:
        lines = [
            f"rule: {self.rule_descriptor}",
            f"optimum solver: {self.solver}",
            f"instances: {len(self.records)}",
            f"skipped: {len(self.skipped)}",
        ]
        if self.records:
            top = self.argmax
            lines += [
                f"mean ratio: {format_decimal(self.mean_ratio, 6)}",
                f"max ratio: {format_decimal(top.ratio, 6)} ({format_exact(top.ratio)})",
                f"argmax: seed={top.seed} index={top.index}",
                f"worst-case bound violations: {sum(not r.within_worst_case_bound() for r in self.records)}",
            ]
        for index, reason in self.skipped:
            lines.append(f"skipped index {index}: {reason}")
        return "\n".join(lines)


def _optimum(inst, solver: str) -> Fraction:
    if solver == "dp":
        return dp_optimum(inst)[0]
    if solver == "bruteforce":
        return brute_force_optimum(inst)[0]
    raise ValueError(f"unknown solver {solver!r}")


def evaluate_index(cfg: GenConfig, index: int, rule: DispatchRule, solver: str):
    inst = generate_random_instance(cfg, index)
    try:
        opt = _optimum(inst, solver)
    except GuardExceeded as exc:
        return index, str(exc)
    obj = evaluate_objective(inst, dispatch_schedule(inst, rule))
    return index, RatioRecord(cfg.seed, index, inst.n, inst.m, inst.total_loops, obj, opt, rule.descriptor)


def _evaluate_args(args):
    return evaluate_index(*args)


def run_ratio_experiment(cfg: GenConfig, rule: DispatchRule, solver: str = "dp", workers: int = 1) -> ExperimentResult:
    if solver not in SOLVERS:
        raise ValueError(f"unknown solver {solver!r}")
    jobs = [(cfg, i, rule, solver) for i in range(cfg.count)]
    if workers > 1 and cfg.count > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_evaluate_args, jobs, chunksize=max(1, cfg.count // (8 * workers))))
    else:
        results = [_evaluate_args(a) for a in jobs]
    results.sort(key=lambda r: r[0])
    records = [r for _, r in results if isinstance(r, RatioRecord)]
    skipped = [(i, r) for i, r in results if isinstance(r, str)]
    return ExperimentResult(records, skipped, rule.descriptor, solver)
