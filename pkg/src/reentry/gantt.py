"""Text and SVG Gantt charts, one row per machine."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .core import Instance, Schedule

IDLE = "·"


def _grid(inst: Instance, sched: Schedule) -> list[list[int | None]]:
    horizon = sched.horizon
    rows: list[list[int | None]] = [[None] * horizon for _ in range(inst.m)]
    for j, starts in enumerate(sched.starts):
        for s in starts:
            for machine in range(inst.m):
                rows[machine][s + machine] = j + 1
    return rows


def render_text(inst: Instance, sched: Schedule) -> str:
    """Fixed-width chart; every time unit is one cell of equal width.

    >>> from reentry.core import Instance, simulate_sequence
    >>> inst = Instance.from_lists(2, [1])
    >>> print(render_text(inst, simulate_sequence(inst, [(0, 1)])))
    t  |01
    M1 |1·
    M2 |·1
    """
    width = len(str(inst.n)) if inst.n else 1
    label = max(len(f"M{inst.m}"), 2) + 1
    horizon = sched.horizon if inst.jobs else 0
    header = "t".ljust(label) + "|" + "".join(str(t % 10**width).rjust(width) for t in range(horizon))
    if not inst.jobs:
        return header
    lines = [header]
    for i, row in enumerate(_grid(inst, sched), start=1):
        cells = "".join((IDLE * width) if c is None else str(c).rjust(width) for c in row)
        lines.append(f"M{i}".ljust(label) + "|" + cells)
    return "\n".join(lines)


_PALETTE = (
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
    "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
)


def render_svg(inst: Instance, sched: Schedule, cell: int = 24) -> str:
    horizon = sched.horizon if inst.jobs else 0
    left, top = 3 * cell, cell
    width = left + cell * (horizon + 1)
    height = top + cell * (inst.m + 1)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'font-family="monospace" font-size="{cell // 2}">'
    ]
    for i in range(inst.m):
        y = top + i * cell
        parts.append(f'<text x="4" y="{y + cell * 2 // 3}">M{i + 1}</text>')
    if inst.jobs:
        for i, row in enumerate(_grid(inst, sched)):
            y = top + i * cell
            for t, c in enumerate(row):
                if c is None:
                    continue
                x = left + t * cell
                color = _PALETTE[(c - 1) % len(_PALETTE)]
                parts.append(
                    f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" '
                    f'fill="{color}" stroke="black"/>'
                )
                parts.append(
                    f'<text x="{x + cell // 2}" y="{y + cell * 2 // 3}" '
                    f'text-anchor="middle">{escape(str(c))}</text>'
                )
    axis_y = top + inst.m * cell
    parts.append(f'<line x1="{left}" y1="{axis_y}" x2="{left + horizon * cell}" y2="{axis_y}" stroke="black"/>')
    for t in range(horizon + 1):
        parts.append(f'<text x="{left + t * cell}" y="{axis_y + cell * 2 // 3}">{t}</text>')
    parts.append("</svg>")
    return "\n".join(parts)


def render_gantt(inst: Instance, sched: Schedule, format: str = "text") -> str:
    if format == "text":
        return render_text(inst, sched)
    if format == "svg":
        return render_svg(inst, sched)
    raise ValueError(f"unknown format {format!r}")
