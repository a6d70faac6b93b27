"""Deterministic SVG rendering of the one-week dashboard."""

from .charts import (
    SleepBarGeometry,
    SleepBarSpan,
    format_duration,
    render_chart,
    sleep_bar_geometry,
    sleep_bar_span,
)
from .dashboard import RenderedDashboard, dashboard_height, render_dashboard
from .marks import ChartBlock, Frame, LayoutGrid, Mark, layout_grid
from .theme import (
    CHART_KINDS,
    FACET_BY_CHART,
    Theme,
    ThemeError,
    contrast_ratio,
    default_theme,
    magnitude_step,
    theme_from_json,
    theme_to_json,
    validate_theme,
)

__all__ = [
    "CHART_KINDS",
    "FACET_BY_CHART",
    "ChartBlock",
    "Frame",
    "LayoutGrid",
    "Mark",
    "RenderedDashboard",
    "SleepBarGeometry",
    "SleepBarSpan",
    "Theme",
    "ThemeError",
    "contrast_ratio",
    "dashboard_height",
    "default_theme",
    "format_duration",
    "layout_grid",
    "magnitude_step",
    "render_chart",
    "render_dashboard",
    "sleep_bar_geometry",
    "sleep_bar_span",
    "theme_from_json",
    "theme_to_json",
    "validate_theme",
]
