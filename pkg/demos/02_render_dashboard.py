"""Render the one-week dashboard, complete and gap-ridden.

Run:  python3 demos/02_render_dashboard.py
Writes dashboard_full.svg and dashboard_gaps.svg to the working directory.
"""

from datetime import date, datetime

from weeklens.model import build_week_dataset
from weeklens.render import render_dashboard
from weeklens.synth import ComplianceProfile, SyntheticPersona, generate_week

monday = date(2024, 3, 4)
after_week = datetime(2024, 3, 11, 0, 0)

# A fully compliant week: ten charts, no '?' anywhere.
full = generate_week(7, SyntheticPersona(), ComplianceProfile.full(), monday, participant="DEMO")
week = build_week_dataset(full, monday, after_week)
dash = render_dashboard(week)
print(f"{len(dash.blocks)} chart blocks, {dash.width:.0f}x{dash.height:.0f} "
      f"(1:{dash.height / dash.width:.1f} tall)")
for block in dash.blocks:
    print(f"  {block.facet:<9} {block.chart_id:<19} {block.title}")
print("missing glyphs:", dash.count_marks("missing-glyph"))
with open("dashboard_full.svg", "w", encoding="utf-8") as fh:
    fh.write(dash.svg)

# The same persona with binge-then-silence compliance: the tail of the week
# shows a grey '?' in every applicable chart column. Supplied zeros stay
# zero-height bars; only absent answers earn a glyph.
binge = generate_week(7, SyntheticPersona(), ComplianceProfile.binger(3), monday, participant="DEMO")
gappy = build_week_dataset(binge, monday, after_week)
dash2 = render_dashboard(gappy)
print("\nwith a binger week:", dash2.count_marks("missing-glyph"), "glyphs")
with open("dashboard_gaps.svg", "w", encoding="utf-8") as fh:
    fh.write(dash2.svg)

# Rendering is deterministic: same data, same bytes, every time.
assert render_dashboard(week).svg == dash.svg
print("\nwrote dashboard_full.svg and dashboard_gaps.svg (byte-stable)")
