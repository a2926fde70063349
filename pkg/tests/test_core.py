from fractions import Fraction

import pytest

from conftest import random_instance, random_sequence
from reentry.core import (
    Instance,
    InvalidSchedule,
    LoopRef,
    Schedule,
    evaluate_objective,
    extract_progressions,
    interchange_progressions,
    is_non_interruptive,
    progression_of,
    simulate_sequence,
    validate_instance,
)
from reentry.exact import Assignment, assignment_to_schedule


def L(j, k):
    return LoopRef(j - 1, k)


def test_validate_mixed_jobs(mixed_jobs):
    assert validate_instance(mixed_jobs) == []


def test_validate_rejects_zero_machines():
    problems = validate_instance(Instance.from_lists(0, [1]))
    assert any("m >= 1" in p for p in problems)


def test_validate_rejects_zero_weight():
    problems = validate_instance(Instance.from_lists(2, [1, 2], [1, 0]))
    assert problems == ["jobs[1].weight: must satisfy weight > 0"]


def test_validate_reports_all_violations():
    problems = validate_instance(Instance.from_lists(0, [0, 2], [1, -1]))
    assert len(problems) == 3


def test_simulate_mixed_jobs(mixed_jobs, mixed_seq):
    sched = simulate_sequence(mixed_jobs, mixed_seq)
    assert sched.job_completions == (12, 9, 10, 13, 17)
    assert sched.start(L(5, 4)) == 14
    assert [sched.start(r) for r in mixed_seq[:12]] == list(range(12))
    assert evaluate_objective(mixed_jobs, sched) == 150
    assert sched.first_idle() == 12


def test_simulate_single_job_chains_at_stride_m():
    inst = Instance.from_lists(2, [3], [5])
    sched = simulate_sequence(inst, [L(1, 1), L(1, 2), L(1, 3)])
    assert sched.starts == ((0, 2, 4),)
    assert sched.job_completions == (6,)
    assert evaluate_objective(inst, sched) == 30


def test_simulate_two_independent_jobs():
    inst = Instance.from_lists(2, [1, 1])
    sched = simulate_sequence(inst, [L(1, 1), L(2, 1)])
    assert sched.starts == ((0,), (1,))
    assert sched.job_completions == (2, 3)


@pytest.mark.parametrize(
    "seq",
    [
        [L(1, 2), L(1, 1)],
        [L(1, 1), L(1, 1)],
        [L(1, 1)],
        [L(1, 1), L(3, 1)],
    ],
)
def test_simulate_rejects_bad_sequences(seq):
    inst = Instance.from_lists(2, [2])
    with pytest.raises(InvalidSchedule):
        simulate_sequence(inst, seq)


def test_unit_jobs_lrl_objective_via_sequence(unit_jobs):
    pairs = [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (3, 2), (4, 1), (5, 1), (4, 2), (5, 2), (4, 3), (5, 3), (5, 4)]
    sched = simulate_sequence(unit_jobs, [L(j, k) for j, k in pairs])
    assert evaluate_objective(unit_jobs, sched) == 55
    assert is_non_interruptive(sched)


def test_evaluate_rejects_mismatch(mixed_jobs, mixed_seq):
    sched = simulate_sequence(mixed_jobs, mixed_seq)
    with pytest.raises(InvalidSchedule):
        evaluate_objective(Instance.from_lists(3, [2, 2]), sched)


def test_schedule_validation_catches_collisions_and_precedence():
    assert Schedule(2, ((0, 1),)).violations()  # loop 2 before loop 1 completes
    assert Schedule(2, ((0,), (0,))).violations()
    assert Schedule(2, ((0, 2), (1,))).violations() == []


def test_progression_of_job4_mixed_jobs(mixed_jobs, mixed_seq):
    sched = simulate_sequence(mixed_jobs, mixed_seq)
    pg = progression_of(mixed_jobs, sched, L(4, 1))
    assert pg.loops == (L(4, 1), L(3, 1), L(3, 2), L(4, 3))
    assert pg.w_last == 4


def test_progression_of_job5_loop2(mixed_jobs, mixed_seq):
    sched = simulate_sequence(mixed_jobs, mixed_seq)
    pg = progression_of(mixed_jobs, sched, L(5, 2))
    assert pg.loops == (L(5, 2), L(5, 3), L(5, 4))
    assert pg.w_last == 4


def test_extract_progressions_mixed_jobs(mixed_jobs, mixed_seq):
    sched = simulate_sequence(mixed_jobs, mixed_seq)
    pgs = extract_progressions(mixed_jobs, sched)
    assert [p.start for p in pgs] == [0, 1, 2]
    assert pgs[1].loops == (L(4, 1), L(3, 1), L(3, 2), L(4, 3))
    assert pgs[2].loops[-3:] == (L(5, 2), L(5, 3), L(5, 4))


def test_single_job_is_one_progression():
    inst = Instance.from_lists(3, [3], [7])
    sched = simulate_sequence(inst, [L(1, 1), L(1, 2), L(1, 3)])
    pgs = extract_progressions(inst, sched)
    assert len(pgs) == 1 and len(pgs[0].loops) == 3 and pgs[0].w_last == 7


def test_interchange_equal_last_weights_keeps_objective(mixed_jobs, mixed_seq):
    sched = simulate_sequence(mixed_jobs, mixed_seq)
    out = interchange_progressions(mixed_jobs, sched, L(3, 1), L(5, 2))
    assert evaluate_objective(mixed_jobs, out) == 150
    assert out.start(L(3, 1)) == 8 and out.start(L(4, 3)) == 14
    assert out.start(L(5, 2)) == 4 and out.start(L(5, 4)) == 10


def test_interchange_single_loop_jobs():
    # two unit-weight single-loop jobs in separate progressions
    inst = Instance.from_lists(2, [1, 1])
    sched = Schedule(2, ((0,), (1,)))
    out = interchange_progressions(inst, sched, L(1, 1), L(2, 1))
    assert out.starts == ((1,), (0,))
    assert evaluate_objective(inst, out) == evaluate_objective(inst, sched)


def test_interchange_preconditions(mixed_jobs, mixed_seq):
    sched = simulate_sequence(mixed_jobs, mixed_seq)
    with pytest.raises(InvalidSchedule):
        interchange_progressions(mixed_jobs, sched, L(5, 2), L(3, 1))
    with pytest.raises(InvalidSchedule):
        interchange_progressions(mixed_jobs, sched, L(4, 1), L(3, 2))


def test_non_interruptive_examples(mixed_jobs, mixed_seq):
    sched = simulate_sequence(mixed_jobs, mixed_seq)
    # job 4 starts at 1, 5, 10 while C_41 = 4
    assert sched.starts[3] == (1, 5, 10)
    assert not is_non_interruptive(sched)
    single = simulate_sequence(Instance.from_lists(4, [3]), [L(1, 1), L(1, 2), L(1, 3)])
    assert is_non_interruptive(single)


def test_property_simulation_invariants(rng):
    for _ in range(300):
        inst = random_instance(rng, n=(1, 6), m=(1, 4), loops=(1, 5))
        sched = simulate_sequence(inst, random_sequence(rng, inst))
        assert sched.violations(inst) == []
        for j, row in enumerate(sched.starts):
            for k in range(1, len(row) + 1):
                assert sched.completion(LoopRef(j, k)) == sched.start(LoopRef(j, k)) + inst.m


def test_property_resimulation_never_worse(rng):
    # any valid start map, compacted by re-timing its start order, is no worse
    for _ in range(200):
        inst = random_instance(rng, n=(1, 5), m=(1, 4), loops=(1, 4))
        sched = simulate_sequence(inst, random_sequence(rng, inst))
        spread = Schedule(inst.m, tuple(tuple(2 * s for s in row) for row in sched.starts))
        assert spread.violations(inst) == []
        again = simulate_sequence(inst, spread.loops_by_start())
        assert evaluate_objective(inst, again) <= evaluate_objective(inst, spread)


def test_property_progressions_partition(rng):
    for _ in range(300):
        inst = random_instance(rng, n=(1, 6), m=(1, 4), loops=(1, 5))
        sched = simulate_sequence(inst, random_sequence(rng, inst))
        pgs = extract_progressions(inst, sched)
        members = [r for p in pgs for r in p.loops]
        assert sorted(members) == sorted(inst.loop_refs())
        starts = {sched.start(r) for r in members}
        for p in pgs:
            s = [sched.start(r) for r in p.loops]
            assert all(b - a == inst.m for a, b in zip(s, s[1:]))
            assert s[-1] + inst.m not in starts
            # every intermediate multiple of m is occupied by a member
            assert set(s) == set(range(s[0], s[-1] + 1, inst.m))
            finals = [r for r in p.loops if r.k == inst.jobs[r.job].loops]
            assert p.w_last == sum((inst.jobs[r.job].weight for r in finals), Fraction(0))


def test_property_interchange_delta(rng):
    checked = 0
    while checked < 200:
        inst = random_instance(rng, n=(2, 6), m=(2, 4), loops=(1, 4))
        sched = simulate_sequence(inst, random_sequence(rng, inst))
        refs = inst.loop_refs()
        a, b = rng.sample(refs, 2)
        if sched.start(a) > sched.start(b):
            a, b = b, a
        pa = progression_of(inst, sched, a)
        if b in pa.loops:
            continue
        pb = progression_of(inst, sched, b)
        try:
            out = interchange_progressions(inst, sched, a, b)
        except InvalidSchedule:
            continue
        delta = sched.start(b) - sched.start(a)
        before = evaluate_objective(inst, sched)
        assert evaluate_objective(inst, out) == before + delta * (pa.w_last - pb.w_last)
        checked += 1


def test_property_non_interruptive_jobs_stay_in_one_progression(rng):
    for _ in range(200):
        inst = random_instance(rng, n=(1, 6), m=(1, 4), loops=(1, 5))
        a = Assignment(tuple(rng.randrange(inst.m) for _ in range(inst.n)))
        sched, _ = assignment_to_schedule(inst, a)
        assert is_non_interruptive(sched)
        owner = {}
        for idx, p in enumerate(extract_progressions(inst, sched)):
            for r in p.loops:
                owner[r] = idx
        for j, job in enumerate(inst.jobs):
            assert len({owner[LoopRef(j, k)] for k in range(1, job.loops + 1)}) == 1
