"""Instance files and exact number formatting.

Canonical instance file::

    {
      "m": 3,
      "jobs": [
        {"loops": 2, "weight": "2.2"},
        ...
      ]
    }

Weights are strings: a terminating decimal when the reduced denominator has
no prime factors other than 2 and 5, otherwise ``"p/q"``.
"""

from __future__ import annotations

import json
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from pathlib import Path

from .core import Instance, InvalidInstance, Job, validate_instance


def parse_rational(text: str | int) -> Fraction:
    """Parse ``"2.2"``, ``"1/3"``, ``"7"`` or an int exactly."""
    if isinstance(text, bool):
        raise ValueError("boolean is not a number")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"expected a string, got {type(text).__name__}")
    s = text.strip()
    if "/" in s:
        num, _, den = s.partition("/")
        return Fraction(int(num), int(den))
    try:
        d = Decimal(s)
    except InvalidOperation:
        raise ValueError(f"not a number: {text!r}") from None
    if not d.is_finite():
        raise ValueError(f"not a finite number: {text!r}")
    return Fraction(d)


def _is_terminating(q: int) -> bool:
    for p in (2, 5):
        while q % p == 0:
            q //= p
    return q == 1


def format_rational(x: Fraction) -> str:
    """Exact decimal when one exists, otherwise ``p/q``.

    >>> format_rational(Fraction(11, 5)), format_rational(Fraction(1, 3))
    ('2.2', '1/3')
    """
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    if not _is_terminating(x.denominator):
        return f"{x.numerator}/{x.denominator}"
    digits = 0
    while (x * 10**digits).denominator != 1:
        digits += 1
    scaled = abs(x.numerator * 10**digits // x.denominator)
    sign = "-" if x < 0 else ""
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def format_decimal(x: Fraction, places: int) -> str:
    """``x`` rounded half away from zero to a fixed number of places."""
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    scaled = abs(x) * 10**places
    q = int(scaled)
    if scaled - q >= Fraction(1, 2):
        q += 1
    whole, frac = divmod(q, 10**places)
    return f"{sign}{whole}.{frac:0{places}d}" if places else f"{sign}{whole}"


def format_exact(x: Fraction) -> str:
    """Always ``p/q``, as used in experiment CSVs."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def instance_from_dict(data) -> Instance:
    problems = []
    if not isinstance(data, dict):
        raise InvalidInstance(["<root>: expected a JSON object"])
    m = data.get("m")
    if not isinstance(m, int) or isinstance(m, bool):
        problems.append("m: expected an integer")
    jobs_raw = data.get("jobs")
    if not isinstance(jobs_raw, list):
        problems.append("jobs: expected a list")
        jobs_raw = []
    jobs = []
    for idx, item in enumerate(jobs_raw):
        if not isinstance(item, dict):
            problems.append(f"jobs[{idx}]: expected an object")
            continue
        loops = item.get("loops")
        if not isinstance(loops, int) or isinstance(loops, bool):
            problems.append(f"jobs[{idx}].loops: expected an integer")
            continue
        try:
            weight = parse_rational(item.get("weight"))
        except (ValueError, ZeroDivisionError) as exc:
            problems.append(f"jobs[{idx}].weight: {exc}")
            continue
        jobs.append(Job(loops, weight))
    if problems:
        raise InvalidInstance(problems)
    inst = Instance(m, tuple(jobs))
    problems = validate_instance(inst)
    if problems:
        raise InvalidInstance(problems)
    return inst


def instance_to_dict(inst: Instance) -> dict:
    return {
        "m": inst.m,
        "jobs": [{"loops": j.loops, "weight": format_rational(j.weight)} for j in inst.jobs],
    }


def dumps_instance(inst: Instance) -> str:
    lines = ["{", f'  "m": {inst.m},']
    if not inst.jobs:
        lines.append('  "jobs": []')
    else:
        lines.append('  "jobs": [')
        rows = [
            f'    {{"loops": {j.loops}, "weight": {json.dumps(format_rational(j.weight))}}}'
            for j in inst.jobs
        ]
        lines.append(",\n".join(rows))
        lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def loads_instance(text: str) -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInstance([f"<root>: malformed JSON ({exc})"]) from None
    return instance_from_dict(data)


def read_instance(path: str | Path) -> Instance:
    return loads_instance(Path(path).read_text(encoding="utf-8"))


def write_instance(inst: Instance, path: str | Path) -> None:
    Path(path).write_text(dumps_instance(inst), encoding="utf-8")
