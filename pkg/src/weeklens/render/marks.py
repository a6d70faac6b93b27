"""Positioned-geometry model shared by every chart, plus the week grid.

All charts draw on one LayoutGrid: seven equal day columns, each split into
three sub-slots for the daily windows. Blocks keep their marks in block-local
coordinates (y measured from the block top); the dashboard assembler stacks
blocks and records each block's absolute offset.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .theme import Theme


@dataclass(slots=True)
class Mark:
    """One positioned visual element.

    x/y depend on shape: rect uses the top-left corner, text and icon the
    anchor point, circle the center (radius in w). `day`/`window` are set for
    slot-bound marks (-1 otherwise); `value` records the encoded magnitude so
    tests can check scale linearity without parsing the SVG.
    """

    role: str
    shape: str  # rect | text | circle | icon | line
    x: float
    y: float
    w: float = 0.0
    h: float = 0.0
    text: str = ""
    fill: str = ""
    stroke: str = ""
    font: float = 0.0
    anchor: str = "middle"
    day: int = -1
    window: int = -1
    value: Optional[float] = None
    icon: str = ""

    def to_json(self) -> dict:
        out: dict = {"role": self.role, "shape": self.shape, "x": self.x, "y": self.y}
        if self.shape in ("rect", "line"):
            out["w"] = self.w
            out["h"] = self.h
        if self.shape == "circle":
            out["r"] = self.w
        if self.text:
            out["text"] = self.text
        if self.icon:
            out["icon"] = self.icon
        if self.day >= 0:
            out["day"] = self.day
        if self.window >= 0:
            out["window"] = self.window
        if self.value is not None:
            out["value"] = self.value
        return out


@dataclass(slots=True)
class Frame:
    """One chart panel. Singleton blocks have a single frame covering the
    whole block; the emotions block stacks four."""

    frame_id: str
    title: str
    x: float
    y: float
    w: float
    h: float
    plot_x: float
    plot_y: float
    plot_w: float
    plot_h: float
    marks: list[Mark] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "id": self.frame_id,
            "title": self.title,
            "x": self.x,
            "y": self.y,
            "w": self.w,
            "h": self.h,
            "marks": [m.to_json() for m in self.marks],
        }


@dataclass(slots=True)
class ChartBlock:
    chart_id: str
    facet: str
    title: str
    x: float
    y: float
    w: float
    h: float
    frames: list[Frame] = field(default_factory=list)

    def all_marks(self):
        for frame in self.frames:
            yield from frame.marks

    def to_json(self) -> dict:
        return {
            "id": self.chart_id,
            "facet": self.facet,
            "title": self.title,
            "x": self.x,
            "y": self.y,
            "w": self.w,
            "h": self.h,
            "frames": [f.to_json() for f in self.frames],
        }


@dataclass(frozen=True)
class LayoutGrid:
    """Shared horizontal scaffolding: identical for every chart in a render."""

    margin_left: float
    day_width: float
    canvas_width: float
    day_centers: tuple[float, ...]
    day_bounds: tuple[tuple[float, float], ...]
    sub_centers: tuple[tuple[float, float, float], ...]
    sub_width: float
    grey_stripe: tuple[bool, ...]  # True where the day column gets the grey shade

    @property
    def content_left(self) -> float:
        return self.day_bounds[0][0]

    @property
    def content_right(self) -> float:
        return self.day_bounds[-1][1]


def layout_grid(theme: Theme) -> LayoutGrid:
    """Deterministic day/sub-slot geometry from the theme's unit sizes."""
    margin = theme.margin_left
    dw = theme.day_width
    centers = tuple(margin + (d + 0.5) * dw for d in range(7))
    bounds = tuple((margin + d * dw, margin + (d + 1) * dw) for d in range(7))
    sub = dw / 3.0
    sub_centers = tuple(
        tuple(margin + d * dw + (w + 0.5) * sub for w in range(3)) for d in range(7)
    )
    return LayoutGrid(
        margin_left=margin,
        day_width=dw,
        canvas_width=theme.canvas_width,
        day_centers=centers,
        day_bounds=bounds,
        sub_centers=sub_centers,  # type: ignore[arg-type]
        sub_width=sub,
        grey_stripe=tuple(d % 2 == 0 for d in range(7)),
    )
