"""Mark builders for the ten dashboard charts.

Shared rules, applied uniformly:

* Pending (future) slots draw nothing at all.
* A missed answer draws one grey '?' glyph centered on its column; a chart
  keyed to a once-a-day question uses the day column, a three-a-day chart the
  window sub-column.
* A supplied zero is a zero-height bar (or a lightest-ramp tile), never a
  glyph: absence of data and "nothing to report" must stay distinguishable.
* Bar heights are linear in the magnitude: value/10 of the plot height.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..model import (
    WINDOWS,
    CategorySet,
    Flag,
    Magnitude,
    OrdinalLevel,
    SleepRecord,
    SurveyDefinition,
    SurveyWindow,
    Text,
    WeekDataset,
    default_survey_definition,
    extract_sleep_record,
    likert_to_diverging,
)
from .marks import ChartBlock, Frame, LayoutGrid, Mark
from .theme import CHART_KINDS, FACET_BY_CHART, Theme, hsl_hex, magnitude_step


class _Sentinel:
    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name

    def __repr__(self) -> str:  # pragma: no cover
        return self.name


MISSING = _Sentinel("MISSING")
PENDING = _Sentinel("PENDING")

_BAR_FRACTION = 0.68  # bar/tile width as a share of the sub-slot width


def _lookup(week: WeekDataset, day: int, window: SurveyWindow, qid: str):
    slot = week.slot(day, window)
    if slot.state == "pending":
        return PENDING
    if slot.state == "missed":
        return MISSING
    value = slot.response.answers.get(qid)
    return MISSING if value is None else value


def format_duration(minutes: int) -> str:
    h, m = divmod(minutes, 60)
    return f"{h}h" if m == 0 else f"{h}h{m:02d}"


@dataclass(frozen=True)
class SleepBarSpan:
    """Sleep interval mapped onto the noon-to-noon axis (0 = previous noon)."""

    start_frac: float
    end_frac: float
    clipped: bool
    visible: bool
    duration_minutes: int
    label: str


def sleep_bar_span(rec: SleepRecord) -> SleepBarSpan:
    """Anchor wake to the record day and clip the bar to its noon-to-noon day.

    Waking after noon, or a sleep long enough to reach past the previous
    day's noon, crosses the calendar boundary: the bar is clipped and flagged.
    """
    duration = rec.duration_minutes
    wake_abs = 720 + rec.wake.minutes
    bed_abs = wake_abs - duration
    lo = max(bed_abs, 0)
    hi = min(wake_abs, 1440)
    clipped = bed_abs < 0 or wake_abs > 1440
    return SleepBarSpan(
        start_frac=lo / 1440.0,
        end_frac=hi / 1440.0,
        clipped=clipped,
        visible=lo < hi,
        duration_minutes=duration,
        label=format_duration(duration),
    )


@dataclass(frozen=True)
class SleepBarGeometry:
    day_index: int
    x: float
    width: float
    span: SleepBarSpan


def sleep_bar_geometry(rec: SleepRecord, grid: LayoutGrid, day_index: int) -> SleepBarGeometry:
    width = grid.day_width * 0.5
    return SleepBarGeometry(
        day_index=day_index,
        x=grid.day_centers[day_index] - width / 2,
        width=width,
        span=sleep_bar_span(rec),
    )


# ---------------------------------------------------------------------------
# Small shared pieces
# ---------------------------------------------------------------------------


def _glyph(x: float, y_center: float, theme: Theme, day: int, window: int) -> Mark:
    return Mark(
        role="missing-glyph",
        shape="text",
        x=x,
        y=y_center + theme.font_glyph * 0.35,
        text="?",
        fill=theme.missing_grey,
        font=theme.font_glyph,
        day=day,
        window=window,
    )


def _title(theme: Theme, grid: LayoutGrid, text: str, facet: str) -> Mark:
    return Mark(
        role="title",
        shape="text",
        x=grid.content_left,
        y=15.0,
        text=text,
        fill=theme.title_fill(facet),
        font=theme.font_title,
        anchor="start",
    )


def _y_hints(theme: Theme, grid: LayoutGrid, plot_y: float, plot_h: float, top: str, bottom: str) -> list[Mark]:
    return [
        Mark("axis-label", "text", grid.content_left - 4, plot_y + 4, text=top,
             fill=theme.muted_ink, font=theme.font_tiny, anchor="end"),
        Mark("axis-label", "text", grid.content_left - 4, plot_y + plot_h + 2, text=bottom,
             fill=theme.muted_ink, font=theme.font_tiny, anchor="end"),
    ]


def _legend(entries, grid: LayoutGrid, theme: Theme, stroke: str = "") -> list[Mark]:
    """Right-aligned legend row in the title band. entries: (shape, paint, label)."""
    marks: list[Mark] = []
    x = grid.content_right
    for shape, paint, label in reversed(entries):
        x -= len(label) * theme.font_tiny * 0.58
        marks.append(
            Mark("legend", "text", x, 14.0, text=label, fill=theme.muted_ink,
                 font=theme.font_tiny, anchor="start")
        )
        if shape == "rect":
            x -= 11
            marks.append(Mark("legend", "rect", x, 6.0, w=8, h=8, fill=paint))
        elif shape == "circle":
            x -= 11
            marks.append(Mark("legend", "circle", x + 4, 10.0, w=3.5, fill=paint))
        elif shape == "icon":
            x -= 12
            marks.append(Mark("legend", "icon", x + 5, 10.0, w=0.9, icon=paint,
                              stroke=stroke or theme.muted_ink))
        x -= 9
    return marks


def _magnitude_bars(
    week: WeekDataset,
    qid: str,
    grid: LayoutGrid,
    theme: Theme,
    plot_y: float,
    plot_h: float,
    fill: str,
) -> list[Mark]:
    """Three bars per day with per-sub-column '?' for missing answers."""
    marks: list[Mark] = []
    bar_w = grid.sub_width * _BAR_FRACTION
    for d in range(7):
        for w in WINDOWS:
            v = _lookup(week, d, w, qid)
            if v is PENDING:
                continue
            cx = grid.sub_centers[d][int(w)]
            if isinstance(v, Magnitude):
                h = v.value / 10.0 * plot_h
                marks.append(
                    Mark("bar", "rect", cx - bar_w / 2, plot_y + plot_h - h,
                         w=bar_w, h=h, fill=fill, day=d, window=int(w), value=float(v.value))
                )
            else:
                marks.append(_glyph(cx, plot_y + plot_h / 2, theme, d, int(w)))
    return marks


def _singleton(chart_id: str, title_text: str, theme: Theme, grid: LayoutGrid,
               plot_y: float, bottom_pad: float) -> tuple[ChartBlock, Frame]:
    facet = FACET_BY_CHART[chart_id]
    h = theme.block_height(chart_id)
    frame = Frame(
        frame_id=chart_id,
        title=title_text,
        x=0.0,
        y=0.0,
        w=grid.canvas_width,
        h=h,
        plot_x=grid.content_left,
        plot_y=plot_y,
        plot_w=grid.content_right - grid.content_left,
        plot_h=h - plot_y - bottom_pad,
    )
    frame.marks.append(_title(theme, grid, title_text, facet))
    block = ChartBlock(chart_id=chart_id, facet=facet, title=title_text,
                       x=0.0, y=0.0, w=grid.canvas_width, h=h, frames=[frame])
    return block, frame


# ---------------------------------------------------------------------------
# Chart builders
# ---------------------------------------------------------------------------


def _chart_sleep(week, grid, theme, definition) -> ChartBlock:
    block, frame = _singleton("sleep", "My sleep", theme, grid, plot_y=42.0, bottom_pad=12.0)
    ramp = theme.facet_ramp("sleep")
    py, ph = frame.plot_y, frame.plot_h
    frame.marks += _legend([("rect", ramp[i], lbl) for i, lbl in enumerate(("poor", "okay", "good", "great"))], grid, theme)
    for frac, lbl in ((0.0, "noon"), (0.5, "12am"), (1.0, "noon")):
        frame.marks.append(Mark("axis-label", "text", grid.content_left - 4, py + frac * ph + 2,
                                text=lbl, fill=theme.muted_ink, font=theme.font_tiny, anchor="end"))
    for d in range(7):
        slot = week.slot(d, SurveyWindow.MORNING)
        if slot.state == "pending":
            continue
        rec = extract_sleep_record(slot.response) if slot.state == "completed" else None
        if rec is None:
            frame.marks.append(_glyph(grid.day_centers[d], py + ph / 2, theme, d, -1))
            continue
        geo = sleep_bar_geometry(rec, grid, d)
        span = geo.span
        frame.marks.append(Mark("duration-label", "text", grid.day_centers[d], 36.0,
                                text=span.label, fill=theme.ink, font=theme.font_label,
                                day=d, value=float(span.duration_minutes)))
        if span.visible:
            frame.marks.append(
                Mark("sleep-bar", "rect", geo.x, py + span.start_frac * ph,
                     w=geo.width, h=(span.end_frac - span.start_frac) * ph,
                     fill=ramp[rec.quality], day=d, value=float(span.duration_minutes))
            )
        if span.clipped:
            frame.marks.append(Mark("clip-flag", "text", geo.x + geo.width + 3, py + 8,
                                    text="*", fill=theme.muted_ink, font=theme.font_label,
                                    anchor="start", day=d))
    return block


def _chart_symptom_intensity(week, grid, theme, definition) -> ChartBlock:
    block, frame = _singleton("symptom-intensity", "Symptom intensity", theme, grid,
                              plot_y=30.0, bottom_pad=14.0)
    fill = theme.facet_ramp("symptoms")[2]
    frame.marks += _y_hints(theme, grid, frame.plot_y, frame.plot_h, "10", "0")
    frame.marks += _magnitude_bars(week, "sym-intensity", grid, theme, frame.plot_y, frame.plot_h, fill)
    return block


_SHORT_SYMPTOM = {
    "stomach ache": "stomach",
    "headache": "headache",
    "low back pain": "back pain",
    "dizziness": "dizzy",
    "limb pain": "limb pain",
    "fast heartbeat": "heartbeat",
    "nausea": "nausea",
    "body weakness": "weakness",
}


def _chart_symptom_occurrence(week, grid, theme, definition) -> ChartBlock:
    block, frame = _singleton("symptom-occurrence", "When symptoms happened", theme, grid,
                              plot_y=44.0, bottom_pad=10.0)
    ramp = theme.facet_ramp("symptoms")
    q = definition.question("sym-types")
    categories = [c for c in (q.answer.labels if q is not None else ()) if c != "other"]
    frame.marks += _legend(
        [("rect", ramp[2], "had it"), ("rect", theme.absence_grey, "none"), ("icon", "check", "meds")],
        grid, theme, stroke=ramp[3],
    )

    # daily medication checks sit between the title and the tile rows
    for d in range(7):
        took = False
        seen = False
        for w in WINDOWS:
            v = _lookup(week, d, w, "sym-medication")
            if isinstance(v, Flag):
                seen = True
                took = took or v.value
        if seen and took:
            frame.marks.append(Mark("medication-check", "icon", grid.day_centers[d], 33.0,
                                    w=0.95, icon="check", stroke=ramp[3], day=d))

    rows = max(len(categories), 1)
    row_h = frame.plot_h / rows
    tile_w = grid.sub_width * _BAR_FRACTION
    tile_h = min(row_h * 0.72, 11.0)
    for i, cat in enumerate(categories):
        label = _SHORT_SYMPTOM.get(cat, cat[:9])
        cy = frame.plot_y + (i + 0.5) * row_h
        frame.marks.append(Mark("row-label", "text", grid.content_left - 3, cy + 2.2,
                                text=label, fill=theme.muted_ink, font=theme.font_tiny, anchor="end"))
    for d in range(7):
        for w in WINDOWS:
            v = _lookup(week, d, w, "sym-types")
            if v is PENDING:
                continue
            cx = grid.sub_centers[d][int(w)]
            if isinstance(v, CategorySet):
                chosen = set(v.values)
                for i, cat in enumerate(categories):
                    cy = frame.plot_y + (i + 0.5) * row_h
                    frame.marks.append(
                        Mark("tile", "rect", cx - tile_w / 2, cy - tile_h / 2, w=tile_w, h=tile_h,
                             fill=ramp[2] if cat in chosen else theme.absence_grey,
                             day=d, window=int(w), value=1.0 if cat in chosen else 0.0)
                    )
            else:
                frame.marks.append(_glyph(cx, frame.plot_y + frame.plot_h / 2, theme, d, int(w)))
    return block


def _chart_emotions(week, grid, theme, definition) -> ChartBlock:
    h = theme.block_height("emotions")
    block = ChartBlock(chart_id="emotions", facet="emotions", title="My emotions",
                       x=0.0, y=0.0, w=grid.canvas_width, h=h)
    header = Frame("emotions/header", "My emotions", 0.0, 0.0, grid.canvas_width,
                   theme.emotion_header, grid.content_left, 0.0,
                   grid.content_right - grid.content_left, 0.0)
    header.marks.append(_title(theme, grid, "My emotions", "emotions"))
    block.frames.append(header)

    y = theme.emotion_header
    for emotion, hue in theme.emotion_hues.items():
        fh = theme.emotion_frame_height
        frame = Frame(
            frame_id=f"emotions/{emotion}",
            title=emotion.capitalize(),
            x=0.0, y=y, w=grid.canvas_width, h=fh,
            plot_x=grid.content_left, plot_y=22.0,
            plot_w=grid.content_right - grid.content_left, plot_h=fh - 22.0 - 12.0,
        )
        frame.marks.append(Mark("frame-title", "text", grid.content_left, 12.0,
                                text=emotion.capitalize(), fill=hsl_hex(hue, 0.65, theme.title_lightness),
                                font=theme.font_label + 1, anchor="start"))
        fill = hsl_hex(hue, theme.ramp_saturations[2], theme.ramp_lightness)
        frame.marks += _y_hints(theme, grid, frame.plot_y, frame.plot_h, "10", "0")
        frame.marks += _magnitude_bars(week, f"emo-{emotion}", grid, theme, frame.plot_y, frame.plot_h, fill)
        block.frames.append(frame)
        y += fh + theme.emotion_frame_gap
    return block


def _chart_worry_target(week, grid, theme, definition) -> ChartBlock:
    block, frame = _singleton("worry-target", "What I was worried about", theme, grid,
                              plot_y=34.0, bottom_pad=12.0)
    accent = theme.facet_ramp("worries")[2]
    icon_y = frame.plot_y + 34.0
    for d in range(7):
        v = _lookup(week, d, SurveyWindow.MORNING, "worry-target")
        cx = grid.day_centers[d]
        if v is PENDING:
            continue
        if v is MISSING:
            frame.marks.append(_glyph(cx, icon_y + 8, theme, d, -1))
        elif isinstance(v, CategorySet) and v.values:
            target = v.values[0]
            frame.marks.append(Mark("worry-icon", "icon", cx, icon_y, w=2.3,
                                    icon=target, stroke=accent, day=d))
            frame.marks.append(Mark("worry-label", "text", cx, icon_y + 24.0, text=target,
                                    fill=theme.ink, font=theme.font_label, day=d))
        note = _lookup(week, d, SurveyWindow.MORNING, "worry-note")
        if isinstance(note, Text) and note.value:
            frame.marks.append(Mark("worry-caption", "text", cx, icon_y + 36.0,
                                    text=note.value[:24], fill=theme.muted_ink,
                                    font=theme.font_tiny, day=d))
    return block


def _worry_followup_flag(week, day: int, qid: str) -> Optional[bool]:
    """Combine afternoon/evening booleans; None when neither was answered."""
    seen = None
    for w in (SurveyWindow.AFTERNOON, SurveyWindow.EVENING):
        v = _lookup(week, day, w, qid)
        if isinstance(v, Flag):
            seen = (seen or False) or v.value
    return seen


def _chart_worry_levels(week, grid, theme, definition) -> ChartBlock:
    block, frame = _singleton("worry-levels", "How worried vs. how certain", theme, grid,
                              plot_y=40.0, bottom_pad=12.0)
    ramp = theme.facet_ramp("worries")
    frame.marks += _legend([("icon", "check", "happened"), ("icon", "avoid", "avoided")],
                           grid, theme, stroke=ramp[3])
    tile_w = grid.day_width * 0.56
    tile_h = 30.0
    rows = (("worried", "worry-level", frame.plot_y + 18.0), ("certain", "worry-certainty", frame.plot_y + 18.0 + tile_h + 8.0))
    for label, _, row_y in rows:
        frame.marks.append(Mark("row-label", "text", grid.content_left - 3, row_y + tile_h / 2 + 2,
                                text=label, fill=theme.muted_ink, font=theme.font_tiny, anchor="end"))
    for d in range(7):
        cx = grid.day_centers[d]
        happened = _worry_followup_flag(week, d, "worry-happened")
        if happened:
            frame.marks.append(Mark("happened-check", "icon", cx - 9, frame.plot_y + 4.0, w=0.9,
                                    icon="check", stroke=ramp[3], day=d))
        avoided = _worry_followup_flag(week, d, "worry-avoided")
        if avoided:
            frame.marks.append(Mark("avoid-glyph", "icon", cx + 9, frame.plot_y + 4.0, w=0.9,
                                    icon="avoid", stroke=ramp[3], day=d))

        values = []
        for _, qid, row_y in rows:
            v = _lookup(week, d, SurveyWindow.MORNING, qid)
            values.append((v, row_y))
        if all(not isinstance(v, Magnitude) for v, _ in values):
            if any(v is not PENDING for v, _ in values):
                mid = (rows[0][2] + rows[1][2] + tile_h) / 2
                frame.marks.append(_glyph(cx, mid, theme, d, -1))
            continue
        for v, row_y in values:
            if isinstance(v, Magnitude):
                frame.marks.append(Mark("tile", "rect", cx - tile_w / 2, row_y, w=tile_w, h=tile_h,
                                        fill=ramp[magnitude_step(v.value)], day=d,
                                        value=float(v.value)))
    return block


def _chart_expect_vs_reality(week, grid, theme, definition) -> ChartBlock:
    block, frame = _singleton("expect-vs-reality", "Problems: expected vs. actual", theme, grid,
                              plot_y=32.0, bottom_pad=16.0)
    ramp = theme.facet_ramp("worries")
    frame.marks += _legend([("circle", ramp[1], "expected"), ("rect", ramp[2], "actual")], grid, theme)
    frame.marks += _y_hints(theme, grid, frame.plot_y, frame.plot_h, "10", "0")
    py, ph = frame.plot_y, frame.plot_h
    bar_w = grid.sub_width * _BAR_FRACTION
    for d in range(7):
        v = _lookup(week, d, SurveyWindow.MORNING, "worry-expected")
        cx = grid.sub_centers[d][0]
        if v is not PENDING:
            if isinstance(v, Magnitude):
                frame.marks.append(Mark("expected-dot", "circle", cx, py + ph - v.value / 10.0 * ph,
                                        w=4.5, fill=ramp[1], day=d, window=0, value=float(v.value)))
            else:
                frame.marks.append(_glyph(cx, py + ph / 2, theme, d, 0))
        for w in (SurveyWindow.AFTERNOON, SurveyWindow.EVENING):
            v = _lookup(week, d, w, "worry-actual")
            if v is PENDING:
                continue
            cx = grid.sub_centers[d][int(w)]
            if isinstance(v, Magnitude):
                h = v.value / 10.0 * ph
                frame.marks.append(Mark("bar", "rect", cx - bar_w / 2, py + ph - h, w=bar_w, h=h,
                                        fill=ramp[2], day=d, window=int(w), value=float(v.value)))
            else:
                frame.marks.append(_glyph(cx, py + ph / 2, theme, d, int(w)))
    return block


_SHORT_REASON = {"medical appointment": "medical", "home-schooled": "home"}


def _chart_school(week, grid, theme, definition) -> ChartBlock:
    block, frame = _singleton("school", "Going to school", theme, grid, plot_y=34.0, bottom_pad=12.0)
    accent = theme.facet_ramp("school")[2]
    icon_y = frame.plot_y + 34.0
    for d in range(7):
        cx = grid.day_centers[d]
        attended = _lookup(week, d, SurveyWindow.AFTERNOON, "school-attended")
        if attended is PENDING:
            continue
        if isinstance(attended, Flag):
            if attended.value:
                icon, label = "school", "went"
            else:
                reason = _lookup(week, d, SurveyWindow.AFTERNOON, "school-reason")
                if isinstance(reason, CategorySet) and reason.values:
                    icon = reason.values[0]
                    label = _SHORT_REASON.get(icon, icon)
                else:
                    icon, label = "dot", "missed"
            frame.marks.append(Mark("school-icon", "icon", cx, icon_y, w=2.3, icon=icon,
                                    stroke=accent, day=d))
            frame.marks.append(Mark("school-label", "text", cx, icon_y + 24.0, text=label,
                                    fill=theme.ink, font=theme.font_label, day=d))
        else:
            frame.marks.append(_glyph(cx, icon_y + 8, theme, d, -1))
    return block


def _chart_peer_worry(week, grid, theme, definition) -> ChartBlock:
    block, frame = _singleton("peer-worry", "Worry about hanging out", theme, grid,
                              plot_y=30.0, bottom_pad=14.0)
    fill = theme.facet_ramp("peers")[2]
    frame.marks += _y_hints(theme, grid, frame.plot_y, frame.plot_h, "10", "0")
    frame.marks += _magnitude_bars(week, "peer-worry", grid, theme, frame.plot_y, frame.plot_h, fill)
    return block


def _chart_peer_quality(week, grid, theme, definition) -> ChartBlock:
    block, frame = _singleton("peer-quality", "Getting along with friends", theme, grid,
                              plot_y=36.0, bottom_pad=30.0)
    fill = theme.facet_ramp("peers")[2]
    frame.marks += _legend(
        [("rect", theme.no_interaction_light, "hung out"), ("rect", theme.no_interaction_dark, "didn't")],
        grid, theme,
    )
    py, ph = frame.plot_y, frame.plot_h
    baseline = py + ph / 2
    half = ph / 2
    bar_w = grid.sub_width * _BAR_FRACTION
    frame.marks.append(Mark("axis-line", "line", grid.content_left, baseline,
                            w=grid.content_right, h=baseline, stroke="#cccccc"))
    frame.marks += _y_hints(theme, grid, py, ph, "+2", "-2")
    row_y = py + ph + 8.0
    tile_h = 10.0
    for d in range(7):
        for w in WINDOWS:
            quality = _lookup(week, d, w, "peer-quality")
            occurred = _lookup(week, d, w, "peer-occurred")
            if quality is PENDING and occurred is PENDING:
                continue
            cx = grid.sub_centers[d][int(w)]
            has_quality = isinstance(quality, OrdinalLevel)
            has_occurred = isinstance(occurred, Flag)
            if not has_quality and not has_occurred:
                frame.marks.append(_glyph(cx, baseline, theme, d, int(w)))
                continue
            if has_quality:
                signed = likert_to_diverging(quality.index + 1)
                h = abs(signed) / 2.0 * half
                y = baseline - h if signed > 0 else baseline
                frame.marks.append(Mark("bar", "rect", cx - bar_w / 2, y, w=bar_w, h=h,
                                        fill=fill, day=d, window=int(w), value=float(signed)))
            if has_occurred:
                frame.marks.append(
                    Mark("tile", "rect", cx - bar_w / 2, row_y, w=bar_w, h=tile_h,
                         fill=theme.no_interaction_light if occurred.value else theme.no_interaction_dark,
                         day=d, window=int(w), value=1.0 if occurred.value else 0.0)
                )
    return block


_BUILDERS = {
    "sleep": _chart_sleep,
    "symptom-intensity": _chart_symptom_intensity,
    "symptom-occurrence": _chart_symptom_occurrence,
    "emotions": _chart_emotions,
    "worry-target": _chart_worry_target,
    "worry-levels": _chart_worry_levels,
    "expect-vs-reality": _chart_expect_vs_reality,
    "school": _chart_school,
    "peer-worry": _chart_peer_worry,
    "peer-quality": _chart_peer_quality,
}

_default_definition: Optional[SurveyDefinition] = None


def _builtin_definition() -> SurveyDefinition:
    global _default_definition
    if _default_definition is None:
        _default_definition = default_survey_definition()
    return _default_definition


def render_chart(
    kind: str,
    week: WeekDataset,
    grid: LayoutGrid,
    theme: Theme,
    definition: Optional[SurveyDefinition] = None,
) -> ChartBlock:
    """Build one chart's positioned marks; `kind` must be one of CHART_KINDS."""
    builder = _BUILDERS.get(kind)
    if builder is None:
        raise ValueError(f"unknown chart kind {kind!r}; expected one of {CHART_KINDS}")
    return builder(week, grid, theme, definition or _builtin_definition())
