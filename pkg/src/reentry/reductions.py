"""Hardness constructions as decision instances.

Both reductions build jobs with weight equal to loop count, so the
objective of a gap-free non-interruptive schedule depends only on the loop
totals of the progressions.  An instance is a YES-instance exactly when the
optimum does not exceed the threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Instance


@dataclass(frozen=True)
class DecisionInstance:
    instance: Instance
    threshold: Fraction

    def accepts(self, optimum: Fraction) -> bool:
        return optimum <= self.threshold


def partition_reduction(items: Sequence[int]) -> DecisionInstance:
    """Two machines, one job per item with ``loops = weight = a``.

    Threshold ``b^2/2 + sum(a^2) + b/2``: the single-progression cost
    ``b^2 + sum(a^2)`` lowered by ``b^2/2 - b/2``.
    """
    a = list(items)
    if not a or any(not isinstance(x, int) or x < 1 for x in a):
        raise ValueError("items must be positive integers")
    b = sum(a)
    if b % 2:
        raise ValueError(f"item sum {b} is odd")
    threshold = Fraction(b * b, 2) + sum(x * x for x in a) + Fraction(b, 2)
    return DecisionInstance(Instance.from_lists(2, a, a), threshold)


def check_three_partition(items: Sequence[int], b: int, q: int) -> list[str]:
    problems = []
    if q < 1:
        problems.append("q must be at least 1")
    if len(items) != 3 * q:
        problems.append(f"expected {3 * q} items, got {len(items)}")
    for idx, x in enumerate(items):
        if not 4 * x > b or not 2 * x < b:
            problems.append(f"items[{idx}]={x} is not strictly between b/4 and b/2")
    if sum(items) != q * b:
        problems.append(f"items sum to {sum(items)}, expected q*b = {q * b}")
    return problems


def three_partition_reduction(items: Sequence[int], b: int, q: int) -> DecisionInstance:
    """``m = q`` machines, one job per item with ``loops = weight = a``."""
    a = list(items)
    problems = check_three_partition(a, b, q)
    if problems:
        raise ValueError("; ".join(problems))
    m = q
    threshold = Fraction(m, 2) * (m * b * b + (m - 1) * b + sum(x * x for x in a))
    return DecisionInstance(Instance.from_lists(m, a, a), threshold)


def partition_subset_cost(items: Sequence[int], subset: Sequence[int]) -> Fraction:
    """Objective when ``subset`` (item indices) forms the even-start progression:
    ``y + 2c^2 - c`` with ``c = sum(subset) - b/2``."""
    y = partition_reduction(items).threshold
    c = sum(items[i] for i in subset) - Fraction(sum(items), 2)
    return y + 2 * c * c - c
