"""Walk through the survey schema and the 21-slot week.

Run:  python3 demos/01_survey_and_week.py
"""

from datetime import date, datetime, time, timedelta, timezone

from weeklens.model import (
    Clock,
    ClockTime,
    EmaResponse,
    Magnitude,
    OrdinalLevel,
    SurveyWindow,
    build_week_dataset,
    default_survey_definition,
    sleep_duration,
    validate_response,
)

# --- the instrument ---------------------------------------------------------
# Three survey windows a day; different facets are asked at different times.

definition = default_survey_definition()
print(f"survey v{definition.version}: {len(definition.questions)} questions")
for window in SurveyWindow:
    qids = [q.qid for q in definition.questions_for(window)]
    print(f"  {window.label:<9} asks {len(qids)}: {', '.join(qids[:6])}, ...")

# Sleep is only asked in the morning; worry follow-ups only later in the day.
assert definition.question("sleep-quality").asked_in == frozenset({SurveyWindow.MORNING})

# --- answering --------------------------------------------------------------

monday = date(2024, 3, 4)
morning = EmaResponse(
    participant="DEMO",
    date=monday,
    window=SurveyWindow.MORNING,
    submitted_at=datetime.combine(monday, time(8, 5), tzinfo=timezone.utc),
    answers={
        "sleep-bed": Clock(ClockTime.parse("23:30")),
        "sleep-wake": Clock(ClockTime.parse("07:15")),
        "sleep-quality": OrdinalLevel(2),  # "good"
        "sym-intensity": Magnitude(3),
        "emo-happy": Magnitude(7),
        # everything else skipped: partial responses are valid by design
    },
)
print("\nvalidation of a partial response:", validate_response(definition, morning) or "ok")

slept = sleep_duration(ClockTime.parse("23:30"), ClockTime.parse("07:15"))
print(f"slept {slept} minutes ({slept // 60}h{slept % 60:02d})")

# An answer in the wrong window is caught, named, and explained.
evening_sleep = EmaResponse(
    participant="DEMO",
    date=monday,
    window=SurveyWindow.EVENING,
    submitted_at=datetime.combine(monday, time(18, 0), tzinfo=timezone.utc),
    answers={"sleep-quality": OrdinalLevel(1)},
)
for err in validate_response(definition, evening_sleep):
    print("caught:", err.qid, err.code)

# --- the week ---------------------------------------------------------------
# Mid-week, slots split three ways: completed, missed (window closed with no
# response), pending (window not closed yet). The distinction drives the
# dashboard's missing-data glyphs: only true misses earn a '?'.

wednesday_lunch = datetime.combine(monday + timedelta(days=2), time(13, 0))
week = build_week_dataset([morning], monday, wednesday_lunch)
print("\nmid-week slot counts:", week.counts())
for d in range(3):
    states = [week.slot(d, w).state[0].upper() for w in SurveyWindow]
    print(f"  day {d}: {' '.join(states)}   (C=completed M=missed P=pending)")
