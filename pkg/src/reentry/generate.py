"""Reproducible instance generation.

Instance ``index`` of a run with seed ``seed`` draws from its own splitmix64
stream, so any instance can be regenerated without replaying the others.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Instance

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, state: int):
        self.state = state & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform on ``[lo, hi]`` by rejection, no modulo bias."""
        span = hi - lo + 1
        limit = (1 << 64) - (1 << 64) % span
        while True:
            x = self.next()
            if x < limit:
                return lo + x % span


def stream(seed: int, index: int) -> SplitMix64:
    mixer = SplitMix64(seed)
    base = mixer.next()
    return SplitMix64(base ^ ((index * GOLDEN) & MASK64))


@dataclass(frozen=True)
class GenConfig:
    """Ranges are inclusive; defaults are 4-8 jobs, 2-6 machines, 1-20 loops and weights."""

    n_range: tuple[int, int] = (4, 8)
    m_range: tuple[int, int] = (2, 6)
    loops_range: tuple[int, int] = (1, 20)
    weight_range: tuple[int, int] = (1, 20)
    seed: int = 0
    count: int = 2000

    def __post_init__(self):
        for name in ("n_range", "m_range", "loops_range", "weight_range"):
            lo, hi = getattr(self, name)
            if lo < 1 or hi < lo:
                raise ValueError(f"{name} must satisfy 1 <= min <= max, got {(lo, hi)}")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.count < 0:
            raise ValueError("count must be nonnegative")


def generate_random_instance(cfg: GenConfig, index: int) -> Instance:
    rng = stream(cfg.seed, index)
    n = rng.randint(*cfg.n_range)
    m = rng.randint(*cfg.m_range)
    loops, weights = [], []
    for _ in range(n):
        loops.append(rng.randint(*cfg.loops_range))
        weights.append(rng.randint(*cfg.weight_range))
    return Instance.from_lists(m, loops, weights)


@dataclass(frozen=True)
class WorstCaseFamily:
    x: int
    y: int
    big: int
    m: int

    def __post_init__(self):
        if self.x < 0:
            raise ValueError("x must be nonnegative")
        if self.y < 2:
            raise ValueError("big jobs need at least 2 loops")
        if not 0 <= self.big < self.m:
            raise ValueError("the number of big jobs must be below m")
        if self.x + self.big == 0:
            raise ValueError("family member has no jobs")


def generate_worst_case_family(fam: WorstCaseFamily) -> Instance:
    """``x`` unit jobs followed by ``big`` jobs of ``y`` loops, weight = loops."""
    loops = [1] * fam.x + [fam.y] * fam.big
    return Instance.from_lists(fam.m, loops, loops)
