"""Append-only storage, revisions, exports, and forensic timelines.

Run:  python3 demos/05_store_and_forensics.py
"""

import tempfile
from datetime import date, datetime, time, timedelta, timezone
from pathlib import Path

from weeklens.model import EmaResponse, Magnitude, SurveyWindow
from weeklens.scheduling import make_study_plan
from weeklens.store import EventRecord, Store, export_csv, forensic_report, import_csv

monday = date(2024, 3, 4)


def response(day_offset: int, window: SurveyWindow, happy: int) -> EmaResponse:
    day = monday + timedelta(days=day_offset)
    return EmaResponse(
        participant="P001",
        date=day,
        window=window,
        submitted_at=datetime.combine(day, time(9, 0), tzinfo=timezone.utc),
        answers={"emo-happy": Magnitude(happy)},
    )


with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "study.log"
    store = Store(path)

    # Resubmissions never overwrite: every revision stays on disk.
    print("first write  -> revision", store.put_response(response(0, SurveyWindow.MORNING, 4)))
    print("second write -> revision", store.put_response(response(0, SurveyWindow.MORNING, 8)))
    print("revisions on disk:", [r.revision for r in store.responses("P001")])

    # The latest revision wins when the week is assembled.
    week = store.get_week("P001", monday, datetime(2024, 3, 12, tzinfo=timezone.utc))
    print("rendered value:", week.slot(0, SurveyWindow.MORNING).response.answers["emo-happy"].value)

    # CSV export is loss-free: export -> import reproduces the store.
    csv_text = export_csv(store)
    print("\ncsv export:")
    for line in csv_text.splitlines():
        print("  ", line)
    assert len(import_csv(csv_text)) == len(store.responses())

    # Interaction events feed the forensic report. A dashboard-enabled week
    # with zero DashboardViewed events gets flagged: that exact blind spot
    # (did they ever see it?) is what post-study analysis needs answered.
    plan = make_study_plan(1, monday)  # BA: week one is the dashboard week
    store.put_plan(plan)
    store.put_event(EventRecord("P001", datetime.combine(monday, time(9, 1), tzinfo=timezone.utc),
                                "SurveyOpened", "morning"))
    store.put_event(EventRecord("P001", datetime.combine(monday, time(9, 4), tzinfo=timezone.utc),
                                "ResponseSubmitted", "2024-03-04/morning rev2"))
    report = forensic_report(store, "P001", monday)
    print("\n" + report.to_text())
    store.close()
