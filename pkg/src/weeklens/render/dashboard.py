"""Dashboard assembly: stack the ten chart blocks and emit standalone SVG.

The output is a static SVG 1.1 document with no scripting and no external
references; scrolling is the only interaction the design permits. Rendering
is deterministic: the same week, theme, and definition always produce
byte-identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from xml.sax.saxutils import escape

from ..model import SurveyDefinition, WeekDataset
from .charts import render_chart
from .marks import ChartBlock, Mark, layout_grid
from .theme import CHART_KINDS, DOC_RATIO_RANGE, FACET_BY_CHART, Theme, ThemeError, default_theme

WEEKDAYS = ("Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun")


def _fmt(v: float) -> str:
    if v == int(v):
        return str(int(v))
    return f"{v:.2f}".rstrip("0").rstrip(".")


def dashboard_height(theme: Theme) -> float:
    """Total document height; fixed by the theme, independent of the data."""
    h = theme.top_margin + theme.header_band
    prev_facet = None
    for kind in CHART_KINDS:
        facet = FACET_BY_CHART[kind]
        if prev_facet is not None:
            h += theme.facet_gap if facet != prev_facet else theme.block_gap
        h += theme.block_height(kind)
        prev_facet = facet
    return h + theme.bottom_margin


@dataclass
class RenderedDashboard:
    svg: str
    blocks: list[ChartBlock]
    width: float
    height: float

    def layout_json(self) -> dict:
        return {
            "width": self.width,
            "height": self.height,
            "blocks": [b.to_json() for b in self.blocks],
        }

    def layout_json_text(self) -> str:
        return json.dumps(self.layout_json(), separators=(",", ":")) + "\n"

    def count_marks(self, role: str) -> int:
        return sum(1 for b in self.blocks for m in b.all_marks() if m.role == role)


def _mark_svg(out: list[str], m: Mark, theme: Theme) -> None:
    if m.shape == "rect":
        stroke = f' stroke="{m.stroke}" stroke-width="0.8"' if m.stroke else ""
        out.append(
            f'<rect x="{_fmt(m.x)}" y="{_fmt(m.y)}" width="{_fmt(m.w)}" height="{_fmt(m.h)}" '
            f'fill="{m.fill}"{stroke}/>'
        )
    elif m.shape == "text":
        out.append(
            f'<text x="{_fmt(m.x)}" y="{_fmt(m.y)}" font-size="{_fmt(m.font)}" '
            f'text-anchor="{m.anchor}" fill="{m.fill}">{escape(m.text)}</text>'
        )
    elif m.shape == "circle":
        out.append(f'<circle cx="{_fmt(m.x)}" cy="{_fmt(m.y)}" r="{_fmt(m.w)}" fill="{m.fill}"/>')
    elif m.shape == "icon":
        out.append(
            f'<path transform="translate({_fmt(m.x)},{_fmt(m.y)}) scale({_fmt(m.w)})" '
            f'd="{theme.icon_path(m.icon)}" fill="none" stroke="{m.stroke}" stroke-width="1.2" '
            f'stroke-linecap="round" stroke-linejoin="round"/>'
        )
    elif m.shape == "line":
        out.append(
            f'<line x1="{_fmt(m.x)}" y1="{_fmt(m.y)}" x2="{_fmt(m.w)}" y2="{_fmt(m.h)}" '
            f'stroke="{m.stroke}" stroke-width="0.8"/>'
        )
    else:  # pragma: no cover - builder bug
        raise ValueError(f"unknown mark shape: {m.shape}")


def render_dashboard(
    week: WeekDataset,
    theme: Theme | None = None,
    definition: SurveyDefinition | None = None,
) -> RenderedDashboard:
    """Render the full vertically-aligned chart suite for one week."""
    theme = theme or default_theme()
    grid = layout_grid(theme)
    width = grid.canvas_width
    height = dashboard_height(theme)
    ratio = height / width
    lo, hi = DOC_RATIO_RANGE
    if not lo <= ratio <= hi:
        raise ThemeError(f"dashboard aspect ratio {ratio:.2f} outside {lo}..{hi}")

    blocks: list[ChartBlock] = []
    y = theme.top_margin + theme.header_band
    prev_facet = None
    for kind in CHART_KINDS:
        facet = FACET_BY_CHART[kind]
        if prev_facet is not None:
            y += theme.facet_gap if facet != prev_facet else theme.block_gap
        block = render_chart(kind, week, grid, theme, definition)
        block.y = y
        blocks.append(block)
        y += block.h
        prev_facet = facet

    out: list[str] = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}" '
        f'font-family="Helvetica, Arial, sans-serif">'
    )
    out.append(f'<rect x="0" y="0" width="{_fmt(width)}" height="{_fmt(height)}" fill="{theme.stripe_white}"/>')
    for d in range(7):
        left, right = grid.day_bounds[d]
        shade = theme.stripe_grey if grid.grey_stripe[d] else theme.stripe_white
        out.append(
            f'<rect x="{_fmt(left)}" y="0" width="{_fmt(right - left)}" height="{_fmt(height)}" '
            f'fill="{shade}"/>'
        )
    header_y = theme.top_margin + 13
    for d in range(7):
        day = week.day_date(d)
        label = f"{WEEKDAYS[day.weekday()]} {day.day}"
        out.append(
            f'<text x="{_fmt(grid.day_centers[d])}" y="{_fmt(header_y)}" '
            f'font-size="{_fmt(theme.font_header)}" text-anchor="middle" '
            f'fill="{theme.ink}">{escape(label)}</text>'
        )
    for block in blocks:
        out.append(f'<g transform="translate(0,{_fmt(block.y)})">')
        for mark in block.all_marks():
            _mark_svg(out, mark, theme)
        out.append("</g>")
    out.append("</svg>")
    return RenderedDashboard(svg="\n".join(out) + "\n", blocks=blocks, width=width, height=height)
