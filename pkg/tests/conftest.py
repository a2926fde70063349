import random

import pytest

from reentry.core import Instance, LoopRef

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_instance(rng, n=(1, 6), m=(1, 3), loops=(1, 4), weights=(1, 10)):
    count = rng.randint(*n)
    return Instance.from_lists(
        rng.randint(*m),
        [rng.randint(*loops) for _ in range(count)],
        [rng.randint(*weights) for _ in range(count)],
    )


def random_sequence(rng, inst):
    """A uniformly shuffled precedence-respecting loop sequence."""
    remaining = [job.loops for job in inst.jobs]
    done = [0] * inst.n
    seq = []
    while any(remaining):
        j = rng.choice([j for j in range(inst.n) if remaining[j]])
        done[j] += 1
        remaining[j] -= 1
        seq.append(LoopRef(j, done[j]))
    return seq


@pytest.fixture
def rng():
    return random.Random(20261019)


@pytest.fixture
def mixed_jobs():
    return Instance.from_lists(3, [2, 2, 2, 3, 4], [2, 1, 1, 3, 4])


@pytest.fixture
def mixed_seq():
    pairs = [(5, 1), (4, 1), (1, 1), (2, 1), (3, 1), (4, 2), (2, 2), (3, 2), (5, 2), (1, 2), (4, 3), (5, 3), (5, 4)]
    return [LoopRef(j - 1, k) for j, k in pairs]


@pytest.fixture
def rational_jobs():
    return Instance.from_lists(2, [2, 2, 6], ["2.2", "2.1", "6"])


@pytest.fixture
def unit_jobs():
    return Instance.from_lists(3, [2, 2, 2, 3, 4])
