"""Study plans, reminder computation, and compliance metrics.

A plan is a three-week A-B crossover: one week survey-only, one week
survey-plus-dashboard, separated by a washout week with no surveys and no
reminders. Condition order alternates with participant index so any even
number of enrollees is counterbalanced.

Reminder computation is pure: callers pass the responses so far plus the log
of already-emitted reminder keys, and get back exactly the events that are
newly due. Delivery is someone else's job (see Notifier).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import date, datetime, timedelta
from typing import Iterable, Literal, Optional, Protocol
from zoneinfo import ZoneInfo

from .model import (
    DEFAULT_WINDOW_HOURS,
    WINDOWS,
    ClockTime,
    EmaResponse,
    SurveyWindow,
    WeekDataset,
    WindowHours,
    local_wall_clock,
    window_close_at,
    window_open_at,
)

WeekKind = Literal["ema-only", "ema-plus-viz", "washout"]
PlanOrder = Literal["AB", "BA"]

DEFAULT_WEEK_START_WEEKDAY = 0  # Monday; a forced weekend start hurts compliance


@dataclass(frozen=True)
class ConditionWeek:
    kind: WeekKind
    week_start: date

    def contains(self, day: date) -> bool:
        return self.week_start <= day < self.week_start + timedelta(days=7)


@dataclass(frozen=True)
class StudyPlan:
    participant: str
    order: PlanOrder
    weeks: tuple[ConditionWeek, ConditionWeek, ConditionWeek]
    timezone: str = "UTC"

    def __post_init__(self) -> None:
        if self.weeks[1].kind != "washout":
            raise ValueError("middle week must be the washout")
        for a, b in zip(self.weeks, self.weeks[1:]):
            if b.week_start != a.week_start + timedelta(days=7):
                raise ValueError("plan weeks must be consecutive")

    @property
    def tzinfo(self) -> ZoneInfo:
        return ZoneInfo(self.timezone)

    def week_for(self, day: date) -> Optional[ConditionWeek]:
        for week in self.weeks:
            if week.contains(day):
                return week
        return None

    def viz_weeks(self) -> tuple[ConditionWeek, ...]:
        return tuple(w for w in self.weeks if w.kind == "ema-plus-viz")


def make_study_plan(
    participant_index: int,
    start_date: date,
    tz: str = "UTC",
    *,
    participant: Optional[str] = None,
    week_start_weekday: int = DEFAULT_WEEK_START_WEEKDAY,
) -> StudyPlan:
    """Deterministic counterbalancing: even indices run A-B, odd run B-A."""
    if start_date.weekday() != week_start_weekday:
        raise ValueError(
            f"start date {start_date} falls on weekday {start_date.weekday()}, "
            f"expected {week_start_weekday}"
        )
    order: PlanOrder = "AB" if participant_index % 2 == 0 else "BA"
    first: WeekKind = "ema-only" if order == "AB" else "ema-plus-viz"
    last: WeekKind = "ema-plus-viz" if order == "AB" else "ema-only"
    weeks = (
        ConditionWeek(first, start_date),
        ConditionWeek("washout", start_date + timedelta(days=7)),
        ConditionWeek(last, start_date + timedelta(days=14)),
    )
    if participant is None:
        participant = f"P{participant_index:03d}"
    return StudyPlan(participant=participant, order=order, weeks=weeks, timezone=tz)


# ---------------------------------------------------------------------------
# Reminders
# ---------------------------------------------------------------------------

Channel = Literal["text", "email"]
ReminderKind = Literal["open", "nudge"]


@dataclass(frozen=True)
class ReminderPolicy:
    hours: WindowHours = DEFAULT_WINDOW_HOURS
    nudge_offsets_minutes: tuple[int, ...] = (60,)
    channels: tuple[Channel, ...] = ("text", "email")

    def __post_init__(self) -> None:
        if not self.channels:
            raise ValueError("reminder policy needs at least one channel")
        for w in WINDOWS:
            span = self.hours.close[w].minutes - self.hours.open[w].minutes
            for off in self.nudge_offsets_minutes:
                if not 0 < off < span:
                    raise ValueError(f"nudge offset {off} falls outside the {w.label} window")


@dataclass(frozen=True)
class ReminderEvent:
    participant: str
    due_at: datetime  # participant-local wall clock
    window: SurveyWindow
    channel: Channel
    kind: ReminderKind

    @property
    def key(self) -> str:
        """Stable identity used for the caller-side emission log."""
        return f"{self.participant}|{self.due_at.isoformat()}|{self.window.label}|{self.channel}|{self.kind}"


def due_reminders(
    plan: StudyPlan,
    policy: ReminderPolicy,
    responses: Iterable[EmaResponse],
    now: datetime,
    emitted: Iterable[str] = (),
) -> list[ReminderEvent]:
    """Events that should fire at `now`, in participant-local time.

    An event is due once its scheduled time has passed but the slot's window
    has not yet closed, the slot has no response, the week is not washout,
    and its key is absent from the emission log. Re-invoking with the updated
    log therefore never duplicates an event.
    """
    local_now = local_wall_clock(now, plan.tzinfo)
    today = local_now.date()
    week = plan.week_for(today)
    if week is None or week.kind == "washout":
        return []

    completed = {(r.date, r.window) for r in responses if r.participant == plan.participant}
    emitted_keys = set(emitted)
    out: list[ReminderEvent] = []
    for w in WINDOWS:
        if (today, w) in completed:
            continue
        open_dt = window_open_at(today, w, policy.hours)
        close_dt = window_close_at(today, w, policy.hours)
        due_times = [("open", open_dt)] + [
            ("nudge", open_dt + timedelta(minutes=off)) for off in policy.nudge_offsets_minutes
        ]
        for kind, due_at in due_times:
            if not due_at <= local_now < close_dt:
                continue
            for channel in policy.channels:
                event = ReminderEvent(plan.participant, due_at, w, channel, kind)  # type: ignore[arg-type]
                if event.key not in emitted_keys:
                    out.append(event)
    return out


class Notifier(Protocol):
    """Outbound delivery contract; real SMS/email gateways live elsewhere."""

    def deliver(self, event: ReminderEvent) -> None: ...


@dataclass
class RecordingNotifier:
    """In-repo stub: remembers events and optionally echoes them to a sink."""

    sink: Optional[object] = None  # any object with .write(str)
    delivered: list[ReminderEvent] = field(default_factory=list)

    def deliver(self, event: ReminderEvent) -> None:
        self.delivered.append(event)
        if self.sink is not None:
            self.sink.write(
                f"[{event.channel}] {event.participant} {event.kind} reminder "
                f"for {event.window.label} at {event.due_at.isoformat()}\n"
            )


# ---------------------------------------------------------------------------
# Compliance
# ---------------------------------------------------------------------------


def compliance_rate(
    week: WeekDataset,
    now: Optional[datetime] = None,
    *,
    hours: WindowHours = DEFAULT_WINDOW_HOURS,
) -> float:
    """Completed / closed slots. Before anything closes, compliance is vacuously 1.

    With `now` supplied, closure is recomputed against it (pending slots whose
    window has since closed count as missed); otherwise the dataset's own
    states are trusted.
    """
    completed = sum(1 for s in week.slots if s.state == "completed")
    if now is None:
        missed = sum(1 for s in week.slots if s.state == "missed")
    else:
        local_now = local_wall_clock(now, None)
        missed = 0
        for d in range(7):
            for w in WINDOWS:
                slot = week.slot(d, w)
                if slot.state != "completed" and local_now >= window_close_at(week.day_date(d), w, hours):
                    missed += 1
    closed = completed + missed
    if closed == 0:
        return 1.0
    return completed / closed


Profile = Literal["full", "minimal-completer", "binger", "sparse"]


@dataclass(frozen=True)
class ProfileThresholds:
    # A binger front-loads: most completions early, then a silent tail.
    binger_front_fraction: float = 0.8
    binger_silent_tail_slots: int = 7
    minimal_max_per_day: int = 2


def classify_profile(week: WeekDataset, thresholds: ProfileThresholds = ProfileThresholds()) -> Profile:
    """Compliance-pattern vocabulary for fully elapsed weeks."""
    if any(s.state == "pending" for s in week.slots):
        raise ValueError("cannot classify a week that has not fully elapsed")

    done = [i for i, s in enumerate(week.slots) if s.state == "completed"]
    n = len(week.slots)
    if len(done) == n:
        return "full"

    if done:
        in_front = sum(1 for i in done if i * 2 < n)
        tail = week.slots[n - thresholds.binger_silent_tail_slots :]
        if in_front >= thresholds.binger_front_fraction * len(done) and all(
            s.state == "missed" for s in tail
        ):
            return "binger"

    per_day = [sum(1 for w in WINDOWS if week.slot(d, w).state == "completed") for d in range(7)]
    if all(c >= 1 for c in per_day) and all(c <= thresholds.minimal_max_per_day for c in per_day):
        return "minimal-completer"

    return "sparse"


# ---------------------------------------------------------------------------
# JSON wire format
# ---------------------------------------------------------------------------


def plan_to_json(plan: StudyPlan) -> dict:
    return {
        "participant": plan.participant,
        "order": plan.order,
        "weeks": [{"kind": w.kind, "week_start": w.week_start.isoformat()} for w in plan.weeks],
        "timezone": plan.timezone,
    }


def plan_from_json(obj: dict) -> StudyPlan:
    weeks = tuple(
        ConditionWeek(kind=w["kind"], week_start=date.fromisoformat(w["week_start"]))
        for w in obj["weeks"]
    )
    if len(weeks) != 3:
        raise ValueError("plan must have exactly 3 weeks")
    return StudyPlan(
        participant=str(obj["participant"]),
        order=obj["order"],
        weeks=weeks,  # type: ignore[arg-type]
        timezone=str(obj.get("timezone", "UTC")),
    )


def policy_to_json(policy: ReminderPolicy) -> dict:
    return {
        "window_open": {w.label: str(policy.hours.open[w]) for w in WINDOWS},
        "window_close": {w.label: str(policy.hours.close[w]) for w in WINDOWS},
        "nudge_offsets_minutes": list(policy.nudge_offsets_minutes),
        "channels": list(policy.channels),
    }


def policy_from_json(obj: dict) -> ReminderPolicy:
    hours = WindowHours(
        open={SurveyWindow.from_label(k): ClockTime.parse(v) for k, v in obj["window_open"].items()},
        close={SurveyWindow.from_label(k): ClockTime.parse(v) for k, v in obj["window_close"].items()},
    )
    return ReminderPolicy(
        hours=hours,
        nudge_offsets_minutes=tuple(obj.get("nudge_offsets_minutes", (60,))),
        channels=tuple(obj.get("channels", ("text", "email"))),
    )
