"""Exact solvers.

Every solver here searches non-interruptive schedules in which progression
``i`` (0-based) starts at time ``i`` and runs its jobs back to back in WSPT
order, except :func:`exhaustive_sequence_optimum`, which enumerates every
loop sequence and serves as an independent check of that restriction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _backend
from .core import GuardExceeded, Instance, Schedule, check_instance

MAX_ASSIGNMENTS = 10**8
MAX_SEQUENCE_LOOPS = 9
MAX_DP_STATES = 5_000_000


@dataclass(frozen=True)
class Assignment:
    """``prog_of[j]`` is the 0-based progression of job ``j``."""

    prog_of: tuple[int, ...]

    def members(self, inst: Instance, prog: int) -> list[int]:
        """Jobs of one progression in processing order."""
        return [j for j in wspt_order(inst) if self.prog_of[j] == prog]


def wspt_order(inst: Instance) -> list[int]:
    """Job ids by non-increasing weight/loops; equal ratios keep input order."""
    return sorted(range(inst.n), key=lambda j: -inst.jobs[j].weight / inst.jobs[j].loops)


def assignment_completions(inst: Instance, a: Assignment) -> list[int]:
    m = inst.m
    cum = [0] * m
    comp = [0] * inst.n
    for j in wspt_order(inst):
        p = a.prog_of[j]
        cum[p] += inst.jobs[j].loops
        comp[j] = p + m * cum[p]
    return comp


def assignment_to_schedule(inst: Instance, a: Assignment) -> tuple[Schedule, Fraction]:
    m = inst.m
    if len(a.prog_of) != inst.n or any(not 0 <= p < m for p in a.prog_of):
        raise ValueError("assignment does not match the instance")
    comp = assignment_completions(inst, a)
    starts = tuple(
        tuple(c - m * (job.loops - r) for r in range(job.loops))
        for c, job in zip(comp, inst.jobs)
    )
    obj = sum((job.weight * c for job, c in zip(inst.jobs, comp)), Fraction(0))
    return Schedule(m, starts), obj


def _scaled_weights(inst: Instance) -> tuple[list[int], int]:
    denom = math.lcm(*(job.weight.denominator for job in inst.jobs))
    return [int(job.weight * denom) for job in inst.jobs], denom


def _fits_int64(inst: Instance, weights: Sequence[int]) -> bool:
    horizon = inst.m * (inst.total_loops + 1)
    return sum(weights) * horizon < _backend.INT64_SAFE


def _kernels_for(inst: Instance, weights: Sequence[int], backend: str | None):
    kern = _backend.get(backend)
    if kern is not _backend._pykernels and not _fits_int64(inst, weights):
        kern = _backend._pykernels
    return kern


def brute_force_optimum(
    inst: Instance, *, max_assignments: int = MAX_ASSIGNMENTS, backend: str | None = None
) -> tuple[Fraction, Assignment]:
    """Minimum over all ``m**n`` progression assignments.

    Among optimal assignments the lexicographically smallest ``prog_of``
    vector is returned.
    """
    check_instance(inst)
    if inst.m**inst.n > max_assignments:
        raise GuardExceeded(f"{inst.m}**{inst.n} assignments exceed the limit of {max_assignments}")
    weights, denom = _scaled_weights(inst)
    kern = _kernels_for(inst, weights, backend)
    value, assign = kern.brute_solve(inst.m, list(inst.loops), weights, wspt_order(inst))
    return Fraction(value, denom), Assignment(tuple(assign))


def exhaustive_sequence_optimum(
    inst: Instance, *, max_loops: int = MAX_SEQUENCE_LOOPS, backend: str | None = None
) -> Fraction:
    """Minimum over every precedence-respecting loop sequence (semi-active timing)."""
    check_instance(inst)
    if inst.total_loops > max_loops:
        raise GuardExceeded(f"{inst.total_loops} loops exceed the limit of {max_loops}")
    weights, denom = _scaled_weights(inst)
    kern = _kernels_for(inst, weights, backend)
    return Fraction(kern.sequence_solve(inst.m, list(inst.loops), weights), denom)


def dp_optimum(
    inst: Instance, *, max_states: int = MAX_DP_STATES, backend: str | None = None
) -> tuple[Fraction, Assignment]:
    """Pseudo-polynomial DP over the loop count already placed in each progression.

    Jobs are added in WSPT order; the state after ``j`` jobs is the vector of
    loop counts per progression, so progression ``i`` currently ends at
    ``i + m*c_i``.  Only reachable states are stored.
    """
    check_instance(inst)
    order = wspt_order(inst)
    weights, denom = _scaled_weights(inst)
    loops = [inst.jobs[j].loops for j in order]
    w_ord = [weights[j] for j in order]
    kern = _kernels_for(inst, weights, backend)
    result = kern.dp_solve(inst.m, loops, w_ord, max_states)
    if result is None:
        result = _backend._pykernels.dp_solve(inst.m, loops, w_ord, max_states)
    value, choices = result
    prog_of = [0] * inst.n
    for j, p in zip(order, choices):
        prog_of[j] = p
    return Fraction(value, denom), Assignment(tuple(prog_of))


def closed_form_objective(m: int, progressions: Sequence[Sequence[int]]) -> Fraction:
    """Objective of a gap-free non-interruptive schedule when every weight
    equals the job's loop count.

    ``progressions[t]`` lists the loop counts of the jobs in the progression
    starting at time ``t``; their order does not matter.
    """
    half_m = Fraction(m, 2)
    total = Fraction(0)
    squares = 0
    for t, loops in enumerate(progressions):
        size = sum(loops)
        total += size * size + Fraction(size * 2 * t, m)
        squares += sum(l * l for l in loops)
    return half_m * total + half_m * squares
