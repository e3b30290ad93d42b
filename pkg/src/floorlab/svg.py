"""Self-contained SVG step plots of a :class:`~floorlab.partition.Partition`.

Output is a pure function of the partition, so identical inputs give
byte-identical files.  Each constancy interval is one horizontal segment
with a filled marker at its closed left end and a hollow marker at its
open right end.
"""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .partition import Partition
from .rational import format_rational

WIDTH, HEIGHT = 800, 600
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 70, 30, 40, 60
MAX_LABELS = 12


def _fmt(v: float) -> str:
    # fixed precision keeps coordinates reproducible across platforms
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _pick_labels(values: list, limit: int = MAX_LABELS) -> list:
    if len(values) <= limit:
        return values
    step = -(-(len(values) - 1) // (limit - 1))
    picked = values[::step]
    if picked[-1] != values[-1]:
        picked.append(values[-1])
    return picked


def render_svg(part: Partition, title: str | None = None) -> str:
    a, b = part.a, part.b
    ymin = part.intervals[0].value
    ymax = part.intervals[-1].value
    if ymax == ymin:
        ymax = ymin + 1
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def sx(x: Fraction) -> float:
        return MARGIN_LEFT + float((x - a) / (b - a)) * plot_w

    def sy(y: int) -> float:
        return MARGIN_TOP + plot_h - float(Fraction(y - ymin, ymax - ymin)) * plot_h

    if title is None:
        title = f"f_{part.n}(x) on [{format_rational(a)}, {format_rational(b)})"
    x0, x1 = MARGIN_LEFT, WIDTH - MARGIN_RIGHT
    y0, y1 = MARGIN_TOP + plot_h, MARGIN_TOP

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
        f'<text x="{WIDTH // 2}" y="24" text-anchor="middle" font-family="sans-serif" '
        f'font-size="16">{escape(title)}</text>',
        f'<line class="axis" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="#000000"/>',
        f'<line class="axis" x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="#000000"/>',
    ]

    xticks = _pick_labels([a] + part.breakpoints() + [b])
    for x in xticks:
        px = _fmt(sx(x))
        lines.append(f'<line class="tick" x1="{px}" y1="{y0}" x2="{px}" y2="{y0 + 5}" stroke="#000000"/>')
        lines.append(f'<text class="xlabel" x="{px}" y="{y0 + 20}" text-anchor="middle" '
                     f'font-family="sans-serif" font-size="11">{format_rational(x)}</text>')
    yticks = _pick_labels(sorted({iv.value for iv in part.intervals}))
    for y in yticks:
        py = _fmt(sy(y))
        lines.append(f'<line class="tick" x1="{x0 - 5}" y1="{py}" x2="{x0}" y2="{py}" stroke="#000000"/>')
        lines.append(f'<text class="ylabel" x="{x0 - 8}" y="{py}" text-anchor="end" '
                     f'dominant-baseline="middle" font-family="sans-serif" font-size="11">{y}</text>')

    for iv in part.intervals:
        xa, xb, py = _fmt(sx(iv.lo)), _fmt(sx(iv.hi)), _fmt(sy(iv.value))
        lines.append(f'<line class="step" x1="{xa}" y1="{py}" x2="{xb}" y2="{py}" '
                     f'stroke="#1f4e9c" stroke-width="2"/>')
        lines.append(f'<circle class="closed" cx="{xa}" cy="{py}" r="3" fill="#1f4e9c"/>')
        lines.append(f'<circle class="open" cx="{xb}" cy="{py}" r="3" fill="#ffffff" '
                     f'stroke="#1f4e9c" stroke-width="1.5"/>')

    lines.append("</svg>")
    return "\n".join(lines) + "\n"
