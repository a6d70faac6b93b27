from __future__ import annotations

import random
from datetime import date, datetime, time, timedelta

import pytest

from helpers import (
    AFTERNOON,
    EVENING,
    MORNING,
    WEEK_START,
    make_response,
    oracle_slot_states,
)
from weeklens.model import Magnitude, Slot, WeekDataset, build_week_dataset
from weeklens.scheduling import (
    ReminderPolicy,
    classify_profile,
    compliance_rate,
    due_reminders,
    make_study_plan,
    plan_from_json,
    plan_to_json,
    policy_from_json,
    policy_to_json,
)

POLICY = ReminderPolicy()


# ---------------------------------------------------------------------------
# study plans
# ---------------------------------------------------------------------------


def test_counterbalanced_order():
    assert make_study_plan(0, WEEK_START).order == "AB"
    assert make_study_plan(1, WEEK_START).order == "BA"


def test_washout_is_always_the_middle_week():
    for i in range(10):
        plan = make_study_plan(i, WEEK_START)
        assert plan.weeks[1].kind == "washout"
        assert plan.weeks[0].kind != plan.weeks[2].kind


def test_ab_means_ema_only_first():
    ab = make_study_plan(0, WEEK_START)
    assert [w.kind for w in ab.weeks] == ["ema-only", "washout", "ema-plus-viz"]
    ba = make_study_plan(1, WEEK_START)
    assert [w.kind for w in ba.weeks] == ["ema-plus-viz", "washout", "ema-only"]


def test_weeks_are_consecutive():
    plan = make_study_plan(4, WEEK_START)
    assert plan.weeks[1].week_start == WEEK_START + timedelta(days=7)
    assert plan.weeks[2].week_start == WEEK_START + timedelta(days=14)


def test_even_ranges_balance():
    for start in range(5):
        for length in (2, 4, 10):
            orders = [make_study_plan(i, WEEK_START).order for i in range(start, start + length)]
            assert orders.count("AB") == orders.count("BA")


def test_misaligned_start_rejected():
    with pytest.raises(ValueError):
        make_study_plan(0, WEEK_START + timedelta(days=1))  # a Tuesday


def test_plan_json_round_trip():
    plan = make_study_plan(3, WEEK_START, tz="America/Vancouver")
    assert plan_from_json(plan_to_json(plan)) == plan


def test_policy_json_round_trip():
    assert policy_from_json(policy_to_json(POLICY)) == POLICY


# ---------------------------------------------------------------------------
# reminders
# ---------------------------------------------------------------------------


def _monday(hour: int, minute: int = 0) -> datetime:
    return datetime.combine(WEEK_START, time(hour, minute))


def test_open_reminder_per_channel():
    plan = make_study_plan(0, WEEK_START)
    events = due_reminders(plan, POLICY, [], _monday(7))
    assert {(e.window, e.kind, e.channel) for e in events} == {
        (MORNING, "open", "text"),
        (MORNING, "open", "email"),
    }


def test_nudge_after_offset():
    plan = make_study_plan(0, WEEK_START)
    events = due_reminders(plan, POLICY, [], _monday(8, 30))
    kinds = {(e.kind, e.channel) for e in events}
    assert ("open", "text") in kinds and ("nudge", "text") in kinds
    assert all(e.window == MORNING for e in events)


def test_completed_slot_suppresses_reminders():
    plan = make_study_plan(0, WEEK_START)
    done = [make_response(participant=plan.participant, answers={"emo-happy": Magnitude(5)})]
    assert due_reminders(plan, POLICY, done, _monday(8, 30)) == []


def test_emission_log_idempotence():
    plan = make_study_plan(0, WEEK_START)
    first = due_reminders(plan, POLICY, [], _monday(8, 30))
    emitted = {e.key for e in first}
    assert due_reminders(plan, POLICY, [], _monday(8, 30), emitted) == []
    # a later tick re-emits nothing old, and nothing new inside the same window
    assert due_reminders(plan, POLICY, [], _monday(9, 0), emitted) == []


def test_washout_week_is_silent():
    plan = make_study_plan(0, WEEK_START)
    washout_day = WEEK_START + timedelta(days=9)
    for hour in (7, 8, 12, 13, 17, 21):
        assert due_reminders(plan, POLICY, [], datetime.combine(washout_day, time(hour, 0))) == []


def test_outside_study_is_silent():
    plan = make_study_plan(0, WEEK_START)
    assert due_reminders(plan, POLICY, [], _monday(8) - timedelta(days=3)) == []
    assert due_reminders(plan, POLICY, [], _monday(8) + timedelta(days=30)) == []


def test_reminder_soundness_fuzz():
    plan = make_study_plan(0, WEEK_START)
    rnd = random.Random(11)
    for _ in range(300):
        offset = timedelta(days=rnd.randrange(-2, 24), minutes=rnd.randrange(0, 1440))
        now = datetime.combine(WEEK_START, time(0, 0)) + offset
        for e in due_reminders(plan, POLICY, [], now):
            day = e.due_at.date()
            week = plan.week_for(day)
            assert week is not None and week.kind != "washout"
            opens = datetime.combine(day, POLICY.hours.open[e.window].as_time())
            closes = datetime.combine(day, POLICY.hours.close[e.window].as_time())
            assert opens <= e.due_at < closes


def test_policy_validation():
    with pytest.raises(ValueError):
        ReminderPolicy(channels=())
    with pytest.raises(ValueError):
        ReminderPolicy(nudge_offsets_minutes=(600,))  # outside every window span


# ---------------------------------------------------------------------------
# compliance
# ---------------------------------------------------------------------------


def _week_with(completed: int, missed: int) -> WeekDataset:
    slots = []
    for i in range(21):
        if i < completed:
            d, w = divmod(i, 3)
            r = make_response(day=WEEK_START + timedelta(days=d), window=(MORNING, AFTERNOON, EVENING)[w])
            slots.append(Slot("completed", r))
        elif i < completed + missed:
            slots.append(Slot("missed"))
        else:
            slots.append(Slot("pending"))
    return WeekDataset(participant="P000", week_start=WEEK_START, slots=tuple(slots))


def test_compliance_arithmetic():
    week = _week_with(14, 7)
    assert compliance_rate(week) == pytest.approx(14 / 21)


def test_compliance_vacuous_before_start():
    week = _week_with(0, 0)
    assert compliance_rate(week) == 1.0


def test_compliance_against_oracle_random_weeks():
    rnd = random.Random(5)
    for _ in range(300):
        responses = []
        for d in range(7):
            for w in (MORNING, AFTERNOON, EVENING):
                if rnd.random() < 0.5:
                    responses.append(make_response(day=WEEK_START + timedelta(days=d), window=w))
        now = datetime.combine(WEEK_START, time(0, 0)) + timedelta(minutes=rnd.randrange(0, 11 * 1440))
        week = build_week_dataset(responses, WEEK_START, now, participant="P000")
        # independent: recount from the oracle's slot states
        states = oracle_slot_states(responses, WEEK_START, now)
        done = states.count("completed")
        closed = done + states.count("missed")
        expected = 1.0 if closed == 0 else done / closed
        assert compliance_rate(week) == pytest.approx(expected)
        assert compliance_rate(week, now) == pytest.approx(expected)


def test_compliance_monotone_in_missed():
    # holding completions fixed, more misses never raise the rate
    for completed in (0, 5, 13):
        rates = [compliance_rate(_week_with(completed, m)) for m in range(0, 21 - completed)]
        assert all(a >= b for a, b in zip(rates, rates[1:]))


# ---------------------------------------------------------------------------
# profiles
# ---------------------------------------------------------------------------


def _elapsed_week(completed_slots: set[tuple[int, int]]) -> WeekDataset:
    slots = []
    for d in range(7):
        for wi, w in enumerate((MORNING, AFTERNOON, EVENING)):
            if (d, wi) in completed_slots:
                r = make_response(day=WEEK_START + timedelta(days=d), window=w)
                slots.append(Slot("completed", r))
            else:
                slots.append(Slot("missed"))
    return WeekDataset(participant="P000", week_start=WEEK_START, slots=tuple(slots))


def test_classify_full():
    week = _elapsed_week({(d, w) for d in range(7) for w in range(3)})
    assert classify_profile(week) == "full"


def test_classify_binger():
    week = _elapsed_week({(d, w) for d in range(3) for w in range(3)})
    assert classify_profile(week) == "binger"


def test_classify_minimal_completer():
    week = _elapsed_week({(d, 0) for d in range(7)})
    assert classify_profile(week) == "minimal-completer"


def test_classify_sparse():
    week = _elapsed_week({(0, 0), (5, 1)})  # a late completion rules out binger
    assert classify_profile(week) == "sparse"


def test_classify_requires_elapsed_week():
    pending = _week_with(3, 0)
    with pytest.raises(ValueError):
        classify_profile(pending)


def test_classify_total_over_random_elapsed_weeks():
    rnd = random.Random(3)
    for _ in range(200):
        done = {(d, w) for d in range(7) for w in range(3) if rnd.random() < rnd.random()}
        week = _elapsed_week(done)
        assert classify_profile(week) in {"full", "binger", "minimal-completer", "sparse"}
