"""FPTAS via reduction to identical parallel machines.

A job with ``l`` loops becomes a parallel task of length ``m*l`` with the
same weight, and ``m - 1`` dummy tasks of lengths ``1 .. m-1`` and maximal
weight pin the start offsets of the progressions.  A trimmed load-vector DP
schedules the parallel instance; after the dummies are spread over distinct
machines, each machine becomes one progression of the flow shop with the
same completion times for the real jobs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import GuardExceeded, Instance, Schedule, check_instance, evaluate_objective

MAX_FPTAS_STATES = 2_000_000


@dataclass(frozen=True)
class Task:
    proc: int
    weight: Fraction
    job: int | None = None
    dummy: int | None = None

    @property
    def is_dummy(self) -> bool:
        return self.dummy is not None

    def __repr__(self):
        tag = f"d{self.dummy}" if self.is_dummy else f"j{self.job + 1}"
        return f"Task({tag}, p={self.proc}, w={self.weight})"


@dataclass(frozen=True)
class ParallelInstance:
    machines: int
    tasks: tuple[Task, ...]

    @property
    def real_tasks(self) -> list[Task]:
        return [t for t in self.tasks if not t.is_dummy]

    @property
    def dummies(self) -> list[Task]:
        return [t for t in self.tasks if t.is_dummy]


@dataclass(frozen=True)
class ParallelSchedule:
    """Tasks per machine, processed back to back from time 0."""

    machines: tuple[tuple[Task, ...], ...]

    def completions(self) -> dict[Task, int]:
        out = {}
        for seq in self.machines:
            t = 0
            for task in seq:
                t += task.proc
                out[task] = t
        return out

    def objective(self) -> Fraction:
        return sum((task.weight * c for task, c in self.completions().items()), Fraction(0))


def to_parallel_instance(inst: Instance) -> ParallelInstance:
    check_instance(inst)
    m = inst.m
    w_max = max(job.weight for job in inst.jobs)
    tasks = [Task(m * job.loops, job.weight, job=j) for j, job in enumerate(inst.jobs)]
    tasks += [Task(i, w_max, dummy=i) for i in range(1, m)]
    return ParallelInstance(m, tuple(tasks))


def wspt_key(task: Task):
    # dummies first on equal ratio, then shorter tasks, then stable by identity
    return (-task.weight / task.proc, 0 if task.is_dummy else 1, task.proc,
            task.dummy if task.is_dummy else task.job)


def sahni_fptas(
    pinst: ParallelInstance, eps: Fraction | int | str, *, max_states: int = MAX_FPTAS_STATES
) -> ParallelSchedule:
    """Trimmed DP for P||sum wC; ``eps=0`` runs the exact, untrimmed DP.

    Tasks are placed in WSPT order, each appended to one machine.  Machines
    are identical, so a state is the sorted vector of machine loads.  After
    every task, states whose ``m-1`` smallest loads fall in the same grid
    cell of width ``eps*sum(p)/(2 n^2)`` are merged, keeping the one of
    least cost (ties: lexicographically smallest loads).
    """
    eps = Fraction(eps)
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    m = pinst.machines
    tasks = sorted(pinst.tasks, key=wspt_key)
    n = len(tasks)
    if not n:
        return ParallelSchedule(tuple(() for _ in range(m)))
    scale = math.lcm(*(t.weight.denominator for t in tasks))
    weights = [int(t.weight * scale) for t in tasks]
    total = sum(t.proc for t in tasks)
    width = eps * total / (2 * n * n)
    num, den = width.numerator, width.denominator

    if num:
        def cell(loads):
            return tuple(x * den // num for x in loads[: m - 1])
    else:
        def cell(loads):
            return loads

    start = (0,) * m
    layer = {cell(start): (start, 0)}
    history = []
    for task, w in zip(tasks, weights):
        p = task.proc
        nxt: dict[tuple, tuple] = {}
        back: dict[tuple, tuple] = {}
        for key, (loads, cost) in layer.items():
            for i in range(m):
                if i and loads[i] == loads[i - 1]:
                    continue
                grown = loads[i] + p
                new = tuple(sorted(loads[:i] + (grown,) + loads[i + 1:]))
                c = cost + w * grown
                k = cell(new)
                old = nxt.get(k)
                if old is None or c < old[1] or (c == old[1] and new < old[0]):
                    nxt[k] = (new, c)
                    back[k] = (key, loads[i])
        if len(nxt) > max_states:
            raise GuardExceeded(f"FPTAS layer holds {len(nxt)} states, limit is {max_states}")
        history.append(back)
        layer = nxt
    key = min(layer, key=lambda k: (layer[k][1], layer[k][0]))
    chosen_loads = []
    for back in reversed(history):
        key, load = back[key]
        chosen_loads.append(load)
    chosen_loads.reverse()
    # replay: the task goes to the lowest-numbered machine with that load
    machines: list[list[Task]] = [[] for _ in range(m)]
    loads = [0] * m
    for task, load in zip(tasks, chosen_loads):
        i = loads.index(load)
        machines[i].append(task)
        loads[i] += task.proc
    return ParallelSchedule(tuple(tuple(seq) for seq in machines))


def _sorted_machines(machines: Sequence[Sequence[Task]]) -> list[list[Task]]:
    return [sorted(seq, key=wspt_key) for seq in machines]


def normalize_dummy_placement(psched: ParallelSchedule) -> ParallelSchedule:
    """Spread the dummies over distinct machines without raising the cost.

    Every machine is sorted by WSPT (dummies lead).  While some machine
    carries two dummies ``d1, d2`` followed by tasks ``J``, take a
    dummy-free machine holding ``j1`` followed by ``J'``.  If
    ``w(J) >= w(J')`` move ``d1`` to the front of that machine; otherwise
    swap ``d2`` with ``j1``.
    """
    m = len(psched.machines)
    n_dummies = sum(t.is_dummy for seq in psched.machines for t in seq)
    if m > 1 and n_dummies != m - 1:
        raise ValueError(f"expected {m - 1} dummy tasks, found {n_dummies}")
    before = psched.objective()
    machines = _sorted_machines(psched.machines)
    while True:
        crowded = next((i for i, seq in enumerate(machines) if sum(t.is_dummy for t in seq) >= 2), None)
        if crowded is None:
            break
        free = next(i for i, seq in enumerate(machines) if not any(t.is_dummy for t in seq))
        src, dst = machines[crowded], machines[free]
        d1, d2, rest = src[0], src[1], src[2:]
        if sum(t.weight for t in rest) >= sum(t.weight for t in dst[1:]):
            machines[crowded] = [d2] + rest
            machines[free] = [d1] + dst
        else:
            j1 = dst[0]
            machines[crowded] = [d1, j1] + rest
            machines[free] = [d2] + dst[1:]
        machines = _sorted_machines(machines)
    out = ParallelSchedule(tuple(tuple(seq) for seq in machines))
    assert out.objective() <= before
    return out


def is_normalized(psched: ParallelSchedule) -> bool:
    for seq in psched.machines:
        if sum(t.is_dummy for t in seq) > 1 or list(seq) != sorted(seq, key=wspt_key):
            return False
    return True


def parallel_to_flowshop(inst: Instance, psched: ParallelSchedule) -> Schedule:
    """Read each machine as one progression starting at its dummy's length."""
    m = inst.m
    if len(psched.machines) != m:
        raise ValueError("machine count differs from the instance")
    if not is_normalized(psched):
        raise ValueError("parallel schedule is not normalized")
    offsets = set()
    starts: list[tuple[int, ...] | None] = [None] * inst.n
    for seq in psched.machines:
        offset = seq[0].proc if seq and seq[0].is_dummy else 0
        if offset in offsets:
            raise ValueError(f"two machines map to the progression starting at {offset}")
        offsets.add(offset)
        t = offset
        for task in seq:
            if task.is_dummy:
                continue
            loops = inst.jobs[task.job].loops
            if task.proc != m * loops:
                raise ValueError(f"task for job {task.job + 1} has length {task.proc}, expected {m * loops}")
            starts[task.job] = tuple(t + m * r for r in range(loops))
            t += task.proc
    if any(s is None for s in starts):
        raise ValueError("some jobs are missing from the parallel schedule")
    sched = Schedule(m, tuple(starts))
    sched.check(inst)
    par = psched.completions()
    for task in par:
        if not task.is_dummy:
            assert sched.job_completions[task.job] == par[task]
    return sched


def internal_eps(m: int, eps_target: Fraction) -> Fraction:
    return 2 * Fraction(eps_target) / (m + 1)


def fptas_solve(
    inst: Instance, eps_target: Fraction | int | str, *, max_states: int = MAX_FPTAS_STATES
) -> tuple[Schedule, Fraction]:
    """A non-interruptive schedule within ``1 + eps_target`` of the optimum."""
    eps_target = Fraction(eps_target)
    if eps_target <= 0:
        raise ValueError("eps must be positive")
    pinst = to_parallel_instance(inst)
    psched = sahni_fptas(pinst, internal_eps(inst.m, eps_target), max_states=max_states)
    psched = normalize_dummy_placement(psched)
    sched = parallel_to_flowshop(inst, psched)
    return sched, evaluate_objective(inst, sched)
