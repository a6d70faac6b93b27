"""Dashboard theme: hues, ramps, greys, geometry, and icon artwork.

Colour policy: every facet owns one hue (School and Peers share purple) and
magnitude ramps vary only saturation at that fixed hue. The four emotions get
their own hues because colour distinguishes the small multiples within that
facet. Greys carry meaning too, so the theme checks that the symptom-absence
grey keeps enough luminance contrast against both background stripe shades.
"""

from __future__ import annotations

import colorsys
from dataclasses import dataclass, field, asdict
from typing import Mapping

CHART_KINDS = (
    "sleep",
    "symptom-intensity",
    "symptom-occurrence",
    "emotions",
    "worry-target",
    "worry-levels",
    "expect-vs-reality",
    "school",
    "peer-worry",
    "peer-quality",
)

FACET_BY_CHART = {
    "sleep": "sleep",
    "symptom-intensity": "symptoms",
    "symptom-occurrence": "symptoms",
    "emotions": "emotions",
    "worry-target": "worries",
    "worry-levels": "worries",
    "expect-vs-reality": "worries",
    "school": "school",
    "peer-worry": "peers",
    "peer-quality": "peers",
}

MIN_EMOTION_HUE_SEPARATION = 30.0
MIN_GREY_CONTRAST = 1.2
BLOCK_RATIO_RANGE = (2.0, 3.0)
DOC_RATIO_RANGE = (4.0, 6.0)


def hsl_hex(hue: float, saturation: float, lightness: float) -> str:
    r, g, b = colorsys.hls_to_rgb((hue % 360.0) / 360.0, lightness, saturation)
    return "#{:02x}{:02x}{:02x}".format(round(r * 255), round(g * 255), round(b * 255))


def relative_luminance(hex_color: str) -> float:
    """WCAG relative luminance of an sRGB hex colour."""
    raw = hex_color.lstrip("#")
    channels = [int(raw[i : i + 2], 16) / 255.0 for i in (0, 2, 4)]
    linear = [c / 12.92 if c <= 0.04045 else ((c + 0.055) / 1.055) ** 2.4 for c in channels]
    return 0.2126 * linear[0] + 0.7152 * linear[1] + 0.0722 * linear[2]


def contrast_ratio(a: str, b: str) -> float:
    la, lb = relative_luminance(a), relative_luminance(b)
    hi, lo = max(la, lb), min(la, lb)
    return (hi + 0.05) / (lo + 0.05)


def hue_distance(a: float, b: float) -> float:
    d = abs(a - b) % 360.0
    return min(d, 360.0 - d)


# Stroked outline glyphs in a 10x10 box centered on the origin. Crude on
# purpose: each icon always appears next to a text label.
_ICONS = {
    "check": "M -4 0 L -1.5 3 L 4 -3.5",
    "avoid": "M -1.1 2.2 A 1.1 1.1 0 1 0 -1.09 2.19 M -4 2.5 Q -4 -2.5 0 -2.5 Q 4 -2.5 4 1.6 M 4 1.6 L 2.7 -0.4 M 4 1.6 L 5.3 -0.6",
    "dot": "M 0 -2 A 2 2 0 1 0 0.01 -2",
    "family": "M -2 -1.4 A 1.5 1.5 0 1 0 -1.99 -1.41 M 2.2 -1 A 1.2 1.2 0 1 0 2.21 -1.01 M -4 4 Q -2 1.2 0 4 M 0.6 4 Q 2.2 1.8 3.8 4",
    "friends": "M -2 -1.8 A 1.4 1.4 0 1 0 -1.99 -1.81 M 2 -1.8 A 1.4 1.4 0 1 0 2.01 -1.81 M -4 4 Q -2 1 0 4 M 0 4 Q 2 1 4 4",
    "strangers": "M 0 -2.2 A 1.7 1.7 0 1 0 0.01 -2.21 M -3 4 Q 0 0.8 3 4",
    "school": "M -4 3.5 L -4 -1 L 0 -4 L 4 -1 L 4 3.5 Z M -1 3.5 L -1 0.5 L 1 0.5 L 1 3.5",
    "sports": "M 0 -3.2 A 3.2 3.2 0 1 0 0.01 -3.21 M -3.2 0 L 3.2 0 M 0 -3.2 Q 1.8 0 0 3.2",
    "health": "M 0 3.4 L -3.2 0.2 A 1.8 1.8 0 1 1 0 -1.4 A 1.8 1.8 0 1 1 3.2 0.2 Z",
    "weekend": "M -3 -2 L 3 -2 L 2.4 3 L -2.4 3 Z M 3 -1.4 Q 4.8 -0.8 3.4 1",
    "holiday": "M 0 -4 L 1.1 -1.3 L 4 -1 L 1.8 0.8 L 2.5 3.8 L 0 2.2 L -2.5 3.8 L -1.8 0.8 L -4 -1 L -1.1 -1.3 Z",
    "vacation": "M 0 -2 A 2 2 0 1 0 0.01 -2.01 M 0 -4.4 L 0 -3.4 M 0 3.4 L 0 4.4 M -4.4 0 L -3.4 0 M 3.4 0 L 4.4 0 M -3 -3 L -2.3 -2.3 M 2.3 2.3 L 3 3 M 3 -3 L 2.3 -2.3 M -2.3 2.3 L -3 3",
    "pain": "M 1 -4 L -2.2 0.6 L -0.2 0.6 L -1 4 L 2.4 -0.6 L 0.4 -0.6 Z",
    "sick": "M -0.8 -4 L -0.8 0.8 A 1.9 1.9 0 1 0 0.8 0.8 L 0.8 -4 Z M 0 1.6 L 0 -2.2",
    "medical appointment": "M -1.1 -4 L 1.1 -4 L 1.1 -1.1 L 4 -1.1 L 4 1.1 L 1.1 1.1 L 1.1 4 L -1.1 4 L -1.1 1.1 L -4 1.1 L -4 -1.1 L -1.1 -1.1 Z",
    "home-schooled": "M -4 3.5 L -4 -1 L 0 -4 L 4 -1 L 4 3.5 Z M 0 0.4 A 1.1 1.1 0 1 0 0.01 0.39",
    "online": "M -3.4 -3 L 3.4 -3 L 3.4 1 L -3.4 1 Z M -5 3 L 5 3 L 3.4 1 L -3.4 1 Z",
}


@dataclass(frozen=True)
class Theme:
    # hue per facet (role colours) and per emotion (small-multiple colours)
    facet_hues: Mapping[str, float] = field(
        default_factory=lambda: {
            "sleep": 140.0,
            "symptoms": 5.0,
            "worries": 215.0,
            "school": 275.0,
            "peers": 275.0,
        }
    )
    emotion_hues: Mapping[str, float] = field(
        default_factory=lambda: {"worried": 175.0, "angry": 45.0, "happy": 255.0, "sad": 330.0}
    )
    ramp_saturations: tuple[float, float, float, float] = (0.25, 0.5, 0.75, 1.0)
    ramp_lightness: float = 0.44
    title_lightness: float = 0.32

    stripe_grey: str = "#e0e0e0"
    stripe_white: str = "#ffffff"
    absence_grey: str = "#bdbdbd"
    no_interaction_dark: str = "#8f8f8f"
    no_interaction_light: str = "#d9d9d9"
    missing_grey: str = "#9e9e9e"
    ink: str = "#333333"
    muted_ink: str = "#666666"

    font_title: float = 11.0
    font_label: float = 7.0
    font_tiny: float = 6.0
    font_glyph: float = 11.0
    font_header: float = 9.0

    margin_left: float = 44.0
    margin_right: float = 16.0
    day_width: float = 60.0

    block_heights: Mapping[str, float] = field(
        default_factory=lambda: {
            "sleep": 196.0,
            "symptom-intensity": 168.0,
            "symptom-occurrence": 176.0,
            "worry-target": 164.0,
            "worry-levels": 164.0,
            "expect-vs-reality": 164.0,
            "school": 164.0,
            "peer-worry": 168.0,
            "peer-quality": 184.0,
        }
    )
    emotion_frame_height: float = 164.0
    emotion_header: float = 24.0
    emotion_frame_gap: float = 6.0

    title_band: float = 24.0
    block_gap: float = 8.0
    facet_gap: float = 18.0
    top_margin: float = 14.0
    bottom_margin: float = 16.0
    header_band: float = 22.0

    icons: Mapping[str, str] = field(default_factory=lambda: dict(_ICONS))

    @property
    def canvas_width(self) -> float:
        return self.margin_left + 7 * self.day_width + self.margin_right

    def ramp(self, hue: float) -> tuple[str, ...]:
        return tuple(hsl_hex(hue, s, self.ramp_lightness) for s in self.ramp_saturations)

    def facet_ramp(self, facet: str) -> tuple[str, ...]:
        return self.ramp(self.facet_hues[facet])

    def facet_accent(self, facet: str) -> str:
        return self.facet_ramp(facet)[2]

    def title_fill(self, facet: str) -> str:
        if facet == "emotions":
            return self.ink
        return hsl_hex(self.facet_hues[facet], 0.65, self.title_lightness)

    def icon_path(self, icon_id: str) -> str:
        return self.icons.get(icon_id, self.icons["dot"])

    def block_height(self, chart_id: str) -> float:
        if chart_id == "emotions":
            return self.emotion_header + 4 * self.emotion_frame_height + 3 * self.emotion_frame_gap
        return self.block_heights[chart_id]


class ThemeError(ValueError):
    pass


def validate_theme(theme: Theme) -> None:
    """Enforce the visual-encoding contracts a theme must satisfy."""
    sats = theme.ramp_saturations
    if not all(a < b for a, b in zip(sats, sats[1:])):
        raise ThemeError("saturation ramp must be strictly increasing")

    for grey in (theme.stripe_grey, theme.stripe_white):
        ratio = contrast_ratio(theme.absence_grey, grey)
        if ratio < MIN_GREY_CONTRAST:
            raise ThemeError(
                f"absence grey {theme.absence_grey} vs stripe {grey}: contrast {ratio:.2f} "
                f"below {MIN_GREY_CONTRAST}"
            )

    hues = list(theme.emotion_hues.values())
    for i, a in enumerate(hues):
        for b in hues[i + 1 :]:
            if hue_distance(a, b) < MIN_EMOTION_HUE_SEPARATION:
                raise ThemeError(f"emotion hues {a} and {b} are too close to distinguish")

    lo, hi = BLOCK_RATIO_RANGE
    width = theme.canvas_width
    heights = dict(theme.block_heights)
    heights["emotion frame"] = theme.emotion_frame_height
    for name, h in heights.items():
        ratio = width / h
        if not lo <= ratio <= hi:
            raise ThemeError(f"{name} block ratio {ratio:.2f} outside {lo}..{hi}")


def magnitude_step(value: int) -> int:
    """Bucket a 0..10 magnitude into the 4 saturation-ramp steps."""
    return (value * 4) // 11


_DEFAULT: Theme | None = None


def default_theme() -> Theme:
    global _DEFAULT
    if _DEFAULT is None:
        theme = Theme()
        validate_theme(theme)
        _DEFAULT = theme
    return _DEFAULT


def theme_to_json(theme: Theme) -> dict:
    out = asdict(theme)
    out["facet_hues"] = dict(theme.facet_hues)
    out["emotion_hues"] = dict(theme.emotion_hues)
    out["block_heights"] = dict(theme.block_heights)
    out["icons"] = dict(theme.icons)
    out["ramp_saturations"] = list(theme.ramp_saturations)
    return out


def theme_from_json(obj: dict) -> Theme:
    defaults = Theme()
    kwargs: dict = {}
    for key in obj:
        if not hasattr(defaults, key):
            raise ThemeError(f"unknown theme field: {key}")
        kwargs[key] = obj[key]
    if "ramp_saturations" in kwargs:
        kwargs["ramp_saturations"] = tuple(kwargs["ramp_saturations"])
    if "icons" in kwargs:
        icons = dict(_ICONS)
        icons.update(kwargs["icons"])
        kwargs["icons"] = icons
    theme = Theme(**kwargs)
    validate_theme(theme)
    return theme
