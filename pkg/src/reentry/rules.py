"""Machine-1 dispatching with LRL, WLRL and related priority rules."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .core import Instance, Schedule, check_instance


class Kind(Enum):
    LRL = "lrl"
    WLRL = "wlrl"
    FIXED_RATIO = "wlrl-static"
    FIFO = "fifo"


class TieBreak(Enum):
    HIGHEST_WEIGHT = "weight-desc"
    LOWEST_WEIGHT = "weight-asc"
    MOST_REMAINING = "loops-desc"
    FEWEST_REMAINING = "loops-asc"
    LOWEST_INDEX = "index"


DEFAULT_TIES = {
    Kind.LRL: (TieBreak.HIGHEST_WEIGHT, TieBreak.LOWEST_INDEX),
    Kind.WLRL: (TieBreak.FEWEST_REMAINING, TieBreak.HIGHEST_WEIGHT, TieBreak.LOWEST_INDEX),
    Kind.FIXED_RATIO: (TieBreak.FEWEST_REMAINING, TieBreak.HIGHEST_WEIGHT, TieBreak.LOWEST_INDEX),
    Kind.FIFO: (TieBreak.LOWEST_INDEX,),
}


@dataclass(frozen=True)
class DispatchRule:
    kind: Kind
    tie_break: tuple[TieBreak, ...] = ()

    def __post_init__(self):
        chain = tuple(self.tie_break) or DEFAULT_TIES[self.kind]
        if chain[-1] is not TieBreak.LOWEST_INDEX:
            chain = tuple(t for t in chain if t is not TieBreak.LOWEST_INDEX) + (TieBreak.LOWEST_INDEX,)
        object.__setattr__(self, "tie_break", chain)

    @property
    def descriptor(self) -> str:
        return f"{self.kind.value}+tb=" + ",".join(t.value for t in self.tie_break)

    def key(self, job: int, weight: Fraction, loops: int, remaining: int, ready: int) -> tuple:
        """Sort key; the ready job with the largest key is dispatched."""
        if self.kind is Kind.LRL:
            primary = -remaining
        elif self.kind is Kind.WLRL:
            primary = weight / remaining
        elif self.kind is Kind.FIXED_RATIO:
            primary = weight / loops
        else:
            primary = -ready
        parts = [primary]
        for tb in self.tie_break:
            if tb is TieBreak.HIGHEST_WEIGHT:
                parts.append(weight)
            elif tb is TieBreak.LOWEST_WEIGHT:
                parts.append(-weight)
            elif tb is TieBreak.MOST_REMAINING:
                parts.append(remaining)
            elif tb is TieBreak.FEWEST_REMAINING:
                parts.append(-remaining)
            else:
                parts.append(-job)
        return tuple(parts)


LRL = DispatchRule(Kind.LRL)
WLRL = DispatchRule(Kind.WLRL)


def parse_tie_chain(text: str) -> tuple[TieBreak, ...]:
    try:
        return tuple(TieBreak(part.strip()) for part in text.split(",") if part.strip())
    except ValueError:
        names = ", ".join(t.value for t in TieBreak)
        raise ValueError(f"unknown tie-break in {text!r}; expected any of {names}") from None


def parse_rule(text: str, tie_chain: str | None = None) -> DispatchRule:
    """Parse ``lrl``, ``wlrl``, ``wlrl-static`` or ``fifo`` with an optional ``+tb=`` chain."""
    name, _, rest = text.strip().partition("+")
    try:
        kind = Kind(name.lower())
    except ValueError:
        raise ValueError(f"unknown rule {name!r}") from None
    chain: tuple[TieBreak, ...] = ()
    if rest:
        if not rest.startswith("tb="):
            raise ValueError(f"bad rule suffix {rest!r}")
        chain = parse_tie_chain(rest[3:])
    if tie_chain:
        chain = parse_tie_chain(tie_chain)
    return DispatchRule(kind, chain)


def dispatch_schedule(inst: Instance, rule: DispatchRule = LRL) -> Schedule:
    """Non-delay list schedule: whenever machine 1 is free and some job is
    ready, start the next loop of the highest-priority ready job."""
    check_instance(inst)
    m = inst.m
    n = inst.n
    next_k = [0] * n
    ready_at = [0] * n
    starts: list[list[int]] = [[] for _ in range(n)]
    left = inst.total_loops
    t = 0
    while left:
        best = None
        best_key = None
        for j in range(n):
            job = inst.jobs[j]
            if next_k[j] == job.loops or ready_at[j] > t:
                continue
            key = rule.key(j, job.weight, job.loops, job.loops - next_k[j], ready_at[j])
            if best_key is None or key > best_key:
                best, best_key = j, key
        if best is None:
            t = min(ready_at[j] for j in range(n) if next_k[j] < inst.jobs[j].loops)
            continue
        starts[best].append(t)
        next_k[best] += 1
        ready_at[best] = t + m
        left -= 1
        t += 1
    return Schedule(m, tuple(tuple(r) for r in starts))


def dispatch_sequence(inst: Instance, rule: DispatchRule = LRL) -> list[tuple[int, int]]:
    """Loop order on machine 1 as (job, k) pairs, 0-based job, 1-based k."""
    sched = dispatch_schedule(inst, rule)
    return [tuple(r) for r in sched.loops_by_start()]
