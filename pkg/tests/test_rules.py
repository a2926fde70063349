from fractions import Fraction
from itertools import product

import pytest

from conftest import random_instance
from reentry.core import Instance, evaluate_objective, is_non_interruptive
from reentry.rules import (
    LRL,
    WLRL,
    DispatchRule,
    Kind,
    TieBreak,
    dispatch_schedule,
    dispatch_sequence,
    parse_rule,
)


def test_lrl_unit_jobs(unit_jobs):
    sched = dispatch_schedule(unit_jobs, LRL)
    expected = [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (3, 2), (4, 1), (5, 1), (4, 2), (5, 2), (4, 3), (5, 3), (5, 4)]
    assert dispatch_sequence(unit_jobs, LRL) == [(j - 1, k) for j, k in expected]
    assert evaluate_objective(unit_jobs, sched) == 55
    assert sched.job_completions == (6, 7, 8, 15, 19)


def test_wlrl_rational_jobs(rational_jobs):
    sched = dispatch_schedule(rational_jobs, WLRL)
    expected = [(1, 1), (2, 1), (1, 2), (2, 2)] + [(3, k) for k in range(1, 7)]
    assert dispatch_sequence(rational_jobs, WLRL) == [(j - 1, k) for j, k in expected]
    assert evaluate_objective(rational_jobs, sched) == Fraction(1153, 10)


def test_static_ratio_agrees_on_rational_jobs(rational_jobs):
    rule = DispatchRule(Kind.FIXED_RATIO)
    assert evaluate_objective(rational_jobs, dispatch_schedule(rational_jobs, rule)) == Fraction(1153, 10)


@pytest.mark.parametrize("kind", list(Kind))
def test_single_job_runs_back_to_back(kind):
    inst = Instance.from_lists(3, [4], [5])
    sched = dispatch_schedule(inst, DispatchRule(kind))
    assert sched.starts == ((0, 3, 6, 9),)
    assert evaluate_objective(inst, sched) == 5 * 3 * 4


def test_default_tie_chains():
    assert LRL.tie_break == (TieBreak.HIGHEST_WEIGHT, TieBreak.LOWEST_INDEX)
    assert WLRL.tie_break == (TieBreak.FEWEST_REMAINING, TieBreak.HIGHEST_WEIGHT, TieBreak.LOWEST_INDEX)


def test_lowest_index_is_always_last():
    rule = DispatchRule(Kind.LRL, (TieBreak.LOWEST_INDEX, TieBreak.LOWEST_WEIGHT))
    assert rule.tie_break == (TieBreak.LOWEST_WEIGHT, TieBreak.LOWEST_INDEX)


def test_parse_rule_grammar():
    rule = parse_rule("wlrl+tb=loops-desc,weight-asc")
    assert rule.kind is Kind.WLRL
    assert rule.tie_break == (TieBreak.MOST_REMAINING, TieBreak.LOWEST_WEIGHT, TieBreak.LOWEST_INDEX)
    assert parse_rule("wlrl-static").kind is Kind.FIXED_RATIO
    assert parse_rule("lrl", "weight-asc").tie_break[0] is TieBreak.LOWEST_WEIGHT
    assert rule.descriptor == "wlrl+tb=loops-desc,weight-asc,index"
    for bad in ("spt", "lrl+weight", "lrl+tb=sideways"):
        with pytest.raises(ValueError):
            parse_rule(bad)


ALL_CHAINS = [tuple(c) for c in product(
    [TieBreak.HIGHEST_WEIGHT, TieBreak.LOWEST_WEIGHT, TieBreak.MOST_REMAINING, TieBreak.FEWEST_REMAINING],
    repeat=2,
)]


def test_lrl_non_interruptive_for_every_tie_chain(rng):
    for _ in range(150):
        inst = random_instance(rng, n=(1, 7), m=(1, 4), loops=(1, 6))
        for chain in ALL_CHAINS:
            assert is_non_interruptive(dispatch_schedule(inst, DispatchRule(Kind.LRL, chain)))


def _unforced_idle_slots(inst, sched):
    """Slots where machine 1 is idle although some job's next loop is ready."""
    starts = {s for row in sched.starts for s in row}
    bad = []
    for t in range(max(starts)):
        if t in starts:
            continue
        for row in sched.starts:
            done = [s for s in row if s < t]
            if len(done) < len(row) and (not done or done[-1] + inst.m <= t):
                bad.append(t)
                break
    return bad


@pytest.mark.parametrize("kind", list(Kind))
def test_dispatch_never_idles_with_ready_jobs(rng, kind):
    for _ in range(100):
        inst = random_instance(rng, n=(1, 6), m=(1, 4), loops=(1, 5))
        sched = dispatch_schedule(inst, DispatchRule(kind))
        assert sched.violations(inst) == []
        assert _unforced_idle_slots(inst, sched) == []
