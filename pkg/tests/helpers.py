"""Shared test fixtures and independent oracles.

The oracles here deliberately re-derive expectations from first principles
(hard-coded window tables, brute-force counting) instead of calling the code
paths they are checking.
"""

from __future__ import annotations

import random
from dataclasses import replace
from datetime import date, datetime, time, timedelta, timezone

from weeklens.model import (
    Clock,
    EmaResponse,
    SurveyWindow,
    WeekDataset,
)
from weeklens.synth import ComplianceProfile, SyntheticPersona, generate_week

WEEK_START = date(2024, 3, 4)  # a Monday

# Independent copy of the deployment's daily window table (clock hours).
WINDOW_OPEN = {0: 7, 1: 12, 2: 17}
WINDOW_CLOSE = {0: 12, 1: 17, 2: 22}

MORNING, AFTERNOON, EVENING = SurveyWindow.MORNING, SurveyWindow.AFTERNOON, SurveyWindow.EVENING


def make_response(
    participant: str = "P000",
    day: date = WEEK_START,
    window: SurveyWindow = MORNING,
    answers: dict | None = None,
    revision: int = 1,
    hour: int | None = None,
) -> EmaResponse:
    hour = hour if hour is not None else WINDOW_OPEN[int(window)] + 1
    return EmaResponse(
        participant=participant,
        date=day,
        window=window,
        submitted_at=datetime.combine(day, time(hour, 0), tzinfo=timezone.utc),
        answers=answers or {},
        revision=revision,
    )


def full_week_responses(seed: int = 7, participant: str = "P000") -> list[EmaResponse]:
    return generate_week(
        seed, SyntheticPersona(), ComplianceProfile.full(), WEEK_START, participant=participant
    )


def slot_close_dt(week_start: date, day: int, window: int) -> datetime:
    return datetime.combine(week_start + timedelta(days=day), time(WINDOW_CLOSE[window], 0))


def oracle_slot_states(responses, week_start: date, now: datetime) -> list[str]:
    """Brute-force slot resolution against the hard-coded window table."""
    states = []
    for d in range(7):
        day = week_start + timedelta(days=d)
        for w in range(3):
            if any(r.date == day and int(r.window) == w for r in responses):
                states.append("completed")
            elif now >= slot_close_dt(week_start, d, w):
                states.append("missed")
            else:
                states.append("pending")
    return states


def random_masked_week(
    base: list[EmaResponse], rnd: random.Random, week_start: date = WEEK_START
) -> list[EmaResponse]:
    """Random missingness: drop whole slots, then drop questions inside slots."""
    slot_rate = rnd.random()
    question_rate = rnd.random() * 0.6
    out = []
    for r in base:
        if rnd.random() < slot_rate:
            continue
        answers = {qid: v for qid, v in r.answers.items() if rnd.random() >= question_rate}
        out.append(replace(r, answers=answers))
    return out


def _slot(week: WeekDataset, d: int, w: SurveyWindow):
    return week.slot(d, w)


def _has(week: WeekDataset, d: int, w: SurveyWindow, qid: str) -> bool:
    slot = week.slot(d, w)
    return slot.state == "completed" and qid in slot.response.answers


def _answer(week: WeekDataset, d: int, w: SurveyWindow, qid: str):
    return week.slot(d, w).response.answers.get(qid)


def expected_glyph_counts(week: WeekDataset) -> dict[str, int]:
    """Spec-derived '?' accounting per chart, independent of the renderer.

    Pending slots never yield glyphs; a missed slot (or a dropped answer in a
    completed slot) yields one glyph per applicable chart unit.
    """
    counts = {k: 0 for k in (
        "sleep", "symptom-intensity", "symptom-occurrence", "emotions", "worry-target",
        "worry-levels", "expect-vs-reality", "school", "peer-worry", "peer-quality",
    )}

    def closed(d: int, w: SurveyWindow) -> bool:
        return week.slot(d, w).state != "pending"

    for d in range(7):
        # once-a-day charts keyed to the morning survey
        if closed(d, MORNING):
            sleep_ok = (
                _has(week, d, MORNING, "sleep-bed")
                and _has(week, d, MORNING, "sleep-wake")
                and isinstance(_answer(week, d, MORNING, "sleep-bed"), Clock)
                and isinstance(_answer(week, d, MORNING, "sleep-wake"), Clock)
                and _answer(week, d, MORNING, "sleep-bed").value
                != _answer(week, d, MORNING, "sleep-wake").value
            )
            if not sleep_ok:
                counts["sleep"] += 1
            if not _has(week, d, MORNING, "worry-target"):
                counts["worry-target"] += 1
            if not (_has(week, d, MORNING, "worry-level") or _has(week, d, MORNING, "worry-certainty")):
                counts["worry-levels"] += 1
            if not _has(week, d, MORNING, "worry-expected"):
                counts["expect-vs-reality"] += 1
        if closed(d, AFTERNOON):
            if not _has(week, d, AFTERNOON, "school-attended"):
                counts["school"] += 1
        for w in (AFTERNOON, EVENING):
            if closed(d, w) and not _has(week, d, w, "worry-actual"):
                counts["expect-vs-reality"] += 1
        for w in (MORNING, AFTERNOON, EVENING):
            if not closed(d, w):
                continue
            if not _has(week, d, w, "sym-intensity"):
                counts["symptom-intensity"] += 1
            if not _has(week, d, w, "sym-types"):
                counts["symptom-occurrence"] += 1
            for emotion in ("worried", "angry", "happy", "sad"):
                if not _has(week, d, w, f"emo-{emotion}"):
                    counts["emotions"] += 1
            if not _has(week, d, w, "peer-worry"):
                counts["peer-worry"] += 1
            if not (_has(week, d, w, "peer-quality") or _has(week, d, w, "peer-occurred")):
                counts["peer-quality"] += 1
    return counts


def expected_total_glyphs(week: WeekDataset) -> int:
    return sum(expected_glyph_counts(week).values())


def mark_center_x(mark) -> float:
    if mark.shape == "rect":
        return mark.x + mark.w / 2
    return mark.x
