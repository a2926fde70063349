from reentry.core import Instance, LoopRef, Schedule, simulate_sequence
from reentry.gantt import render_gantt, render_svg, render_text


def test_mixed_jobs_machine1_row(mixed_jobs, mixed_seq):
    text = render_text(mixed_jobs, simulate_sequence(mixed_jobs, mixed_seq))
    rows = text.splitlines()
    assert len(rows) == 4
    assert rows[1] == "M1 |541234235145··5··"
    assert rows[3] == "M3 |··541234235145··5"


def test_text_is_stable(mixed_jobs, mixed_seq):
    sched = simulate_sequence(mixed_jobs, mixed_seq)
    assert render_gantt(mixed_jobs, sched) == render_gantt(mixed_jobs, sched)


def test_empty_instance_header_only():
    assert render_text(Instance(2, ()), Schedule(2, ())) == "t  |"


def test_single_job_diagonal():
    inst = Instance.from_lists(2, [1])
    text = render_text(inst, simulate_sequence(inst, [LoopRef(0, 1)]))
    assert text.splitlines()[1:] == ["M1 |1·", "M2 |·1"]


def test_wide_job_ids_use_fixed_columns():
    inst = Instance.from_lists(1, [1] * 10)
    sched = simulate_sequence(inst, [LoopRef(j, 1) for j in range(10)])
    row = render_text(inst, sched).splitlines()[1]
    assert row == "M1 |" + "".join(str(j).rjust(2) for j in range(1, 11))


def test_svg_has_one_rect_per_cell(mixed_jobs, mixed_seq):
    svg = render_svg(mixed_jobs, simulate_sequence(mixed_jobs, mixed_seq))
    assert svg.startswith("<svg") and svg.endswith("</svg>")
    assert svg.count("<rect") == 13 * 3
