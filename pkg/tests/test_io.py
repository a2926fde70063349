import json
from fractions import Fraction

import pytest

from reentry.core import Instance, InvalidInstance
from reentry.io import (
    dumps_instance,
    format_decimal,
    format_exact,
    format_rational,
    instance_to_dict,
    loads_instance,
    parse_rational,
    read_instance,
    write_instance,
)


def test_parse_rational_forms():
    assert parse_rational("2.2") == Fraction(11, 5)
    assert parse_rational("1/3") == Fraction(1, 3)
    assert parse_rational("7") == 7
    assert parse_rational(4) == 4
    for bad in ("x", "nan", "inf", True, 1.5, None):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(11, 5)) == "2.2"
    assert format_rational(Fraction(1, 3)) == "1/3"
    assert format_rational(Fraction(-1, 8)) == "-0.125"
    assert format_rational(Fraction(6)) == "6"
    assert format_exact(Fraction(6)) == "6/1"


def test_format_decimal_rounds_half_away_from_zero():
    assert format_decimal(Fraction(1153, 1019), 6) == "1.131501"
    assert format_decimal(Fraction(1, 8), 2) == "0.13"
    assert format_decimal(Fraction(-1, 8), 2) == "-0.13"
    assert format_decimal(Fraction(5, 2), 0) == "3"


def test_mixed_jobs_file_round_trip(tmp_path, mixed_jobs):
    path = tmp_path / "mixed.json"
    write_instance(mixed_jobs, path)
    assert read_instance(path) == mixed_jobs
    data = json.loads(path.read_text())
    assert data == {"m": 3, "jobs": [{"loops": l, "weight": str(w)} for l, w in zip([2, 2, 2, 3, 4], [2, 1, 1, 3, 4])]}


def test_rational_weights_round_trip():
    inst = Instance.from_lists(2, [1, 2], ["2.2", "1/3"])
    text = dumps_instance(inst)
    assert '"weight": "2.2"' in text and '"weight": "1/3"' in text
    again = loads_instance(text)
    assert again == inst
    assert dumps_instance(again) == text


def test_canonical_layout():
    text = dumps_instance(Instance.from_lists(2, [1, 3], [1, "0.5"]))
    assert text == '{\n  "m": 2,\n  "jobs": [\n    {"loops": 1, "weight": "1"},\n    {"loops": 3, "weight": "0.5"}\n  ]\n}\n'


def test_canonical_text_is_a_fixpoint(rng):
    for _ in range(50):
        inst = Instance.from_lists(
            rng.randint(1, 5),
            [rng.randint(1, 9) for _ in range(3)],
            [Fraction(rng.randint(1, 50), rng.randint(1, 12)) for _ in range(3)],
        )
        text = dumps_instance(inst)
        assert dumps_instance(loads_instance(text)) == text
        assert instance_to_dict(loads_instance(text)) == json.loads(text)


def test_malformed_json():
    with pytest.raises(InvalidInstance) as info:
        loads_instance("{not json")
    assert "malformed JSON" in str(info.value)


@pytest.mark.parametrize(
    "data, field",
    [
        ({"m": "3", "jobs": []}, "m:"),
        ({"m": 2}, "jobs:"),
        ({"m": 2, "jobs": [{"loops": 1, "weight": "1"}, {"loops": 2.5, "weight": "1"}]}, "jobs[1].loops"),
        ({"m": 2, "jobs": [{"loops": 1, "weight": "abc"}]}, "jobs[0].weight"),
        ({"m": 2, "jobs": [{"loops": 1, "weight": "1/0"}]}, "jobs[0].weight"),
        ({"m": 2, "jobs": [{"loops": 0, "weight": "1"}]}, "jobs[0].loops"),
        ({"m": 0, "jobs": [{"loops": 1, "weight": "1"}]}, "m"),
        ([1, 2], "<root>"),
    ],
)
def test_field_paths_in_errors(data, field):
    with pytest.raises(InvalidInstance) as info:
        loads_instance(json.dumps(data))
    assert field in str(info.value)
