"""Study plans, reminder computation, and idempotent delivery.

Run:  python3 demos/04_scheduling_and_reminders.py
"""

from datetime import date, datetime, time, timedelta, timezone

from weeklens.model import EmaResponse, Magnitude, SurveyWindow
from weeklens.scheduling import RecordingNotifier, ReminderPolicy, due_reminders, make_study_plan

monday = date(2024, 3, 4)

# A-B crossover with a washout week in the middle; order alternates by index.
for index in (0, 1):
    plan = make_study_plan(index, monday, tz="America/Vancouver")
    kinds = " -> ".join(w.kind for w in plan.weeks)
    print(f"participant {plan.participant} ({plan.order}): {kinds}")

plan = make_study_plan(0, monday, tz="America/Vancouver")
policy = ReminderPolicy()  # morning 07-12, afternoon 12-17, evening 17-22; nudge at +60

# The scheduler only *computes* what is due; delivery is a pluggable stub.
notifier = RecordingNotifier()
emitted: set[str] = set()


def tick(now: datetime, responses=()) -> None:
    events = due_reminders(plan, policy, responses, now, emitted)
    for event in events:
        notifier.deliver(event)
        emitted.add(event.key)
    stamp = now.strftime("%a %H:%M")
    what = ", ".join(f"{e.kind}/{e.channel}" for e in events) or "nothing"
    print(f"  tick {stamp}: {what}")


print("\nMonday morning, no response yet:")
tick(datetime.combine(monday, time(7, 0)))   # window opens: one reminder per channel
tick(datetime.combine(monday, time(7, 30)))  # same log: nothing new
tick(datetime.combine(monday, time(8, 0)))   # +60 nudge fires once

print("\nafter the participant responds, nudges stop:")
answered = [EmaResponse(
    participant=plan.participant,
    date=monday + timedelta(days=1),
    window=SurveyWindow.MORNING,
    submitted_at=datetime.combine(monday + timedelta(days=1), time(7, 40), tzinfo=timezone.utc),
    answers={"emo-happy": Magnitude(6)},
)]
tick(datetime.combine(monday + timedelta(days=1), time(8, 0)), answered)

print("\nwashout week is silent at every hour:")
washout_day = monday + timedelta(days=9)
for hour in (7, 12, 17):
    tick(datetime.combine(washout_day, time(hour, 0)))

print(f"\ndelivered total: {len(notifier.delivered)} (idempotent across ticks)")
