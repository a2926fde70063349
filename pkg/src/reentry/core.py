"""Problem model for reentrant flow shops with unit processing times.

A job with ``loops`` traversals occupies machine 1 for one time unit per loop
and, because every operation takes one unit, a loop started on machine 1 at
time ``S`` completes on the last machine at ``S + m``.  A schedule is therefore
fully described by the machine-1 start time of every loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

# Start and completion times are carried as unsigned 64-bit values by the
# file format and the compiled kernels.
TIME_LIMIT = 2**64


class InvalidInstance(ValueError):
    """Raised when an instance violates the model invariants."""

    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class InvalidSchedule(ValueError):
    pass


class GuardExceeded(RuntimeError):
    """An exhaustive or state-space solver hit its configured size cap."""


@dataclass(frozen=True)
class Job:
    loops: int
    weight: Fraction

    def __post_init__(self):
        if not isinstance(self.weight, Fraction):
            object.__setattr__(self, "weight", Fraction(self.weight))


@dataclass(frozen=True)
class Instance:
    m: int
    jobs: tuple[Job, ...] = ()

    def __post_init__(self):
        if not isinstance(self.jobs, tuple):
            object.__setattr__(self, "jobs", tuple(self.jobs))

    @classmethod
    def from_lists(cls, m: int, loops: Iterable[int], weights: Iterable | None = None) -> "Instance":
        loops = list(loops)
        if weights is None:
            weights = [1] * len(loops)
        weights = list(weights)
        if len(weights) != len(loops):
            raise ValueError("loops and weights differ in length")
        return cls(m, tuple(Job(l, Fraction(w)) for l, w in zip(loops, weights)))

    @property
    def n(self) -> int:
        return len(self.jobs)

    @property
    def loops(self) -> tuple[int, ...]:
        return tuple(j.loops for j in self.jobs)

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return tuple(j.weight for j in self.jobs)

    @property
    def total_loops(self) -> int:
        return sum(j.loops for j in self.jobs)

    def loop_refs(self) -> list["LoopRef"]:
        return [LoopRef(j, k) for j, job in enumerate(self.jobs) for k in range(1, job.loops + 1)]


class LoopRef(NamedTuple):
    """Loop ``k`` (1-based) of job ``job`` (0-based)."""

    job: int
    k: int

    def label(self) -> str:
        return f"l{self.job + 1}{self.k}" if self.job < 9 and self.k < 10 else f"l({self.job + 1},{self.k})"


def validate_instance(inst: Instance) -> list[str]:
    """Return every violated invariant of ``inst``; an empty list means valid."""
    problems = []
    if not isinstance(inst.m, int) or inst.m < 1:
        problems.append("m: must satisfy m >= 1")
    for idx, job in enumerate(inst.jobs):
        if not isinstance(job.loops, int) or job.loops < 1:
            problems.append(f"jobs[{idx}].loops: must satisfy loops >= 1")
        if job.weight <= 0:
            problems.append(f"jobs[{idx}].weight: must satisfy weight > 0")
    if not problems and inst.m * (inst.total_loops + 1) >= TIME_LIMIT:
        problems.append("m * total_loops exceeds the 64-bit time horizon")
    return problems


def check_instance(inst: Instance, *, nonempty: bool = True) -> None:
    problems = validate_instance(inst)
    if nonempty and not inst.jobs:
        problems.append("jobs: at least one job required")
    if problems:
        raise InvalidInstance(problems)


@dataclass(frozen=True)
class Schedule:
    """Machine-1 start times, ``starts[j][k-1]`` for loop k of job j."""

    m: int
    starts: tuple[tuple[int, ...], ...]

    def start(self, ref: LoopRef) -> int:
        return self.starts[ref.job][ref.k - 1]

    def completion(self, ref: LoopRef) -> int:
        return self.starts[ref.job][ref.k - 1] + self.m

    @property
    def job_completions(self) -> tuple[int, ...]:
        return tuple(s[-1] + self.m for s in self.starts)

    @property
    def horizon(self) -> int:
        return max((s[-1] + self.m for s in self.starts if s), default=0)

    def loops_by_start(self) -> list[LoopRef]:
        refs = [LoopRef(j, k + 1) for j, s in enumerate(self.starts) for k in range(len(s))]
        refs.sort(key=self.start)
        return refs

    def occupancy(self) -> dict[int, LoopRef]:
        return {self.start(r): r for r in self.loops_by_start()}

    def first_idle(self) -> int | None:
        """Smallest idle machine-1 slot below the latest start, if any."""
        occupied = {s for row in self.starts for s in row}
        if not occupied:
            return None
        for t in range(max(occupied)):
            if t not in occupied:
                return t
        return None

    def violations(self, inst: Instance | None = None) -> list[str]:
        problems = []
        if inst is not None:
            if inst.m != self.m:
                problems.append(f"schedule has m={self.m}, instance has m={inst.m}")
            if len(self.starts) != inst.n:
                problems.append(f"schedule has {len(self.starts)} jobs, instance has {inst.n}")
            else:
                for j, (row, job) in enumerate(zip(self.starts, inst.jobs)):
                    if len(row) != job.loops:
                        problems.append(f"job {j + 1}: {len(row)} loops scheduled, {job.loops} required")
        seen: dict[int, LoopRef] = {}
        for j, row in enumerate(self.starts):
            for k, s in enumerate(row, start=1):
                if s < 0:
                    problems.append(f"loop ({j + 1},{k}) starts at negative time {s}")
                if s in seen:
                    other = seen[s]
                    problems.append(
                        f"loops ({other.job + 1},{other.k}) and ({j + 1},{k}) share start time {s}"
                    )
                seen[s] = LoopRef(j, k)
                if k >= 2 and s < row[k - 2] + self.m:
                    problems.append(f"loop ({j + 1},{k}) starts before loop ({j + 1},{k - 1}) completes")
        return problems

    def check(self, inst: Instance | None = None) -> None:
        problems = self.violations(inst)
        if problems:
            raise InvalidSchedule("; ".join(problems))


def simulate_sequence(inst: Instance, seq: Sequence[LoopRef | tuple[int, int]]) -> Schedule:
    """Semi-active timing of a machine-1 loop sequence.

    Each loop starts at the earliest slot after its predecessor in ``seq``
    at which the job's previous loop has left the last machine.
    """
    m = inst.m
    total = inst.total_loops
    if len(seq) != total:
        raise InvalidSchedule(f"sequence has {len(seq)} loops, instance has {total}")
    starts: list[list[int]] = [[] for _ in inst.jobs]
    prev = -1
    for pos, (j, k) in enumerate(seq):
        if not 0 <= j < inst.n:
            raise InvalidSchedule(f"position {pos}: unknown job {j + 1}")
        row = starts[j]
        if k != len(row) + 1 or k > inst.jobs[j].loops:
            raise InvalidSchedule(f"position {pos}: loop ({j + 1},{k}) out of order or repeated")
        ready = row[-1] + m if row else 0
        prev = max(prev + 1, ready)
        row.append(prev)
    return Schedule(m, tuple(tuple(r) for r in starts))


def evaluate_objective(inst: Instance, sched: Schedule) -> Fraction:
    """Total weighted completion time, exact."""
    problems = sched.violations(inst)
    if problems:
        raise InvalidSchedule("; ".join(problems))
    return sum((job.weight * c for job, c in zip(inst.jobs, sched.job_completions)), Fraction(0))


@dataclass(frozen=True)
class Progression:
    loops: tuple[LoopRef, ...]
    start: int
    w_last: Fraction


def _chain(sched: Schedule, first: LoopRef, occ: dict[int, LoopRef]) -> list[LoopRef]:
    chain = [first]
    t = sched.start(first) + sched.m
    while t in occ:
        chain.append(occ[t])
        t += sched.m
    return chain


def _w_last(inst: Instance, loops: Iterable[LoopRef]) -> Fraction:
    return sum(
        (inst.jobs[r.job].weight for r in loops if r.k == inst.jobs[r.job].loops),
        Fraction(0),
    )


def progression_of(inst: Instance, sched: Schedule, first: LoopRef) -> Progression:
    """The progression initiated by ``first``: the chain first, first+m, ..."""
    chain = _chain(sched, first, sched.occupancy())
    return Progression(tuple(chain), sched.start(first), _w_last(inst, chain))


def extract_progressions(inst: Instance, sched: Schedule) -> list[Progression]:
    """Partition all loops into maximal progressions, ordered by start time."""
    occ = sched.occupancy()
    result = []
    for t in sorted(occ):
        if t - sched.m in occ:
            continue
        chain = _chain(sched, occ[t], occ)
        result.append(Progression(tuple(chain), t, _w_last(inst, chain)))
    return result


def interchange_progressions(inst: Instance, sched: Schedule, a: LoopRef, b: LoopRef) -> Schedule:
    """Swap the progressions initiated by ``a`` and ``b`` (``a`` starting first)."""
    occ = sched.occupancy()
    sa, sb = sched.start(a), sched.start(b)
    if sa >= sb:
        raise InvalidSchedule("first progression must start strictly earlier")
    pa = _chain(sched, a, occ)
    if b in pa:
        raise InvalidSchedule("second loop lies inside the first progression")
    pb = _chain(sched, b, occ)
    delta = sb - sa
    shift = {r: delta for r in pa}
    shift.update({r: -delta for r in pb})
    starts = tuple(
        tuple(s + shift.get(LoopRef(j, k), 0) for k, s in enumerate(row, start=1))
        for j, row in enumerate(sched.starts)
    )
    out = Schedule(sched.m, starts)
    problems = out.violations(inst)
    if problems:
        raise InvalidSchedule("interchange is infeasible: " + "; ".join(problems))
    expected = evaluate_objective(inst, sched) + delta * (_w_last(inst, pa) - _w_last(inst, pb))
    assert evaluate_objective(inst, out) == expected
    return out


def is_non_interruptive(sched: Schedule) -> bool:
    m = sched.m
    return all(row[k] == row[k - 1] + m for row in sched.starts for k in range(1, len(row)))


def objective_from_completions(inst: Instance, completions: Sequence[int]) -> Fraction:
    return sum((job.weight * c for job, c in zip(inst.jobs, completions)), Fraction(0))
