"""Synthetic participant weeks: plausible signals, deliberate gaps.

The generator exists to stress the rest of the system, so it produces the
two things real deployments produced: discoverable cross-facet structure
(poor sleep pushing symptom intensity up, good peer days lifting mood) and
ragged compliance (whole missed slots plus per-question dropouts).

Everything is driven by numpy's seeded generators; seeds split through
SeedSequence so cohorts are reproducible member-by-member. Fixtures are
shared by regenerating from the recorded seed, not by freezing bytes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import date, datetime, time, timedelta, timezone
from typing import Literal, Optional

import numpy as np

from .model import (
    DEFAULT_WINDOW_HOURS,
    MINUTES_PER_DAY,
    SCHOOL_MISS_REASONS,
    SYMPTOM_CATEGORIES,
    WINDOWS,
    WORRY_TARGETS,
    AnswerValue,
    CategorySet,
    Clock,
    ClockTime,
    EmaResponse,
    Flag,
    Magnitude,
    OrdinalLevel,
    SurveyWindow,
    Text,
)
from .scheduling import StudyPlan, make_study_plan

_OTHER_SYMPTOM_NOTES = ("growing pains", "sore eyes", "toothache")
_WORRY_NOTES = (
    "math test tomorrow",
    "tryouts this week",
    "argument with a friend",
    "doctor visit coming up",
    "group project due",
)

NON_OTHER_SYMPTOMS = tuple(c for c in SYMPTOM_CATEGORIES if c != "other")


@dataclass(frozen=True)
class SyntheticPersona:
    """Latent behaviour model for one simulated participant."""

    bed_minutes: int = 1380  # 23:00
    wake_minutes: int = 420  # 07:00
    sleep_jitter_minutes: float = 45.0
    symptom_propensity: tuple[float, ...] = field(
        default_factory=lambda: (0.5, 0.6, 0.2, 0.15, 0.3, 0.1, 0.25, 0.2)
    )
    sleep_symptom_coupling: float = 0.6  # inverted sleep quality -> intensity
    symptom_worry_coupling: float = 0.5  # intensity -> worry magnitudes
    peer_happy_coupling: float = 0.6  # signed peer quality -> happy
    noise_scale: float = 1.0
    seed: int = 0  # seed this persona was derived from, for provenance

    def __post_init__(self) -> None:
        if len(self.symptom_propensity) != len(NON_OTHER_SYMPTOMS):
            raise ValueError(
                f"persona needs one propensity per non-'other' symptom "
                f"({len(NON_OTHER_SYMPTOMS)}), got {len(self.symptom_propensity)}"
            )
        for name in ("sleep_symptom_coupling", "symptom_worry_coupling", "peer_happy_coupling"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {v}")


ProfileKind = Literal["full", "minimal-completer", "binger", "random"]


@dataclass(frozen=True)
class ComplianceProfile:
    kind: ProfileKind
    active_days: int = 3  # binger only
    probability: float = 0.6  # random only

    def __post_init__(self) -> None:
        if self.kind == "binger" and not 1 <= self.active_days <= 6:
            raise ValueError("binger active_days must be in 1..6")
        if self.kind == "random" and not 0.0 <= self.probability <= 1.0:
            raise ValueError("random probability must be in [0, 1]")

    @classmethod
    def full(cls) -> "ComplianceProfile":
        return cls("full")

    @classmethod
    def minimal(cls) -> "ComplianceProfile":
        return cls("minimal-completer")

    @classmethod
    def binger(cls, active_days: int) -> "ComplianceProfile":
        return cls("binger", active_days=active_days)

    @classmethod
    def random(cls, probability: float) -> "ComplianceProfile":
        return cls("random", probability=probability)


def _clamp10(x: float) -> int:
    return int(min(10, max(0, round(x))))


@dataclass
class _DayState:
    bed: int
    wake: int
    quality: int
    intensity: float
    worry_target: str
    worry_note: Optional[str]
    worry_level: int
    certainty: int
    expected: int
    happened: bool
    avoided: bool
    actual: int
    attended: bool
    reason: Optional[str]


def _latent_days(rng: np.random.Generator, persona: SyntheticPersona, week_start: date) -> list[_DayState]:
    days = []
    noise = persona.noise_scale
    for d in range(7):
        bed = int(persona.bed_minutes + rng.normal(0, persona.sleep_jitter_minutes)) % MINUTES_PER_DAY
        wake = int(persona.wake_minutes + rng.normal(0, persona.sleep_jitter_minutes)) % MINUTES_PER_DAY
        if bed == wake:
            wake = (wake + 30) % MINUTES_PER_DAY
        duration = (wake - bed) % MINUTES_PER_DAY
        q_score = 3.4 - abs(duration - 510) / 75.0 + rng.normal(0, 0.5) * noise
        quality = int(min(3, max(0, round(q_score))))
        intensity = 2.0 + persona.sleep_symptom_coupling * 2.0 * (3 - quality) + rng.normal(0, 0.8) * noise

        worry_level = _clamp10(3 + persona.symptom_worry_coupling * (intensity - 3) + rng.normal(0, 1) * noise)
        certainty = _clamp10(worry_level - 1 + rng.normal(0, 1.2) * noise)
        expected = _clamp10(worry_level + rng.normal(0, 1) * noise)
        weekday = (week_start + timedelta(days=d)).weekday()
        is_weekend = weekday >= 5
        if is_weekend:
            attended, reason = False, "weekend"
        elif rng.random() < 0.82:
            attended, reason = True, None
        else:
            attended = False
            reason = str(rng.choice([r for r in SCHOOL_MISS_REASONS if r != "weekend"]))
        days.append(
            _DayState(
                bed=bed,
                wake=wake,
                quality=quality,
                intensity=intensity,
                worry_target=str(rng.choice(WORRY_TARGETS)),
                worry_note=str(rng.choice(_WORRY_NOTES)) if rng.random() < 0.35 else None,
                worry_level=worry_level,
                certainty=certainty,
                expected=expected,
                happened=bool(rng.random() < 0.2 + certainty / 25.0),
                avoided=bool(rng.random() < 0.4),
                actual=_clamp10(expected - 1.5 + rng.normal(0, 1.5) * noise),
                attended=attended,
                reason=reason,
            )
        )
    return days


def _answered_slots(rng: np.random.Generator, profile: ComplianceProfile) -> set[tuple[int, int]]:
    if profile.kind == "full":
        return {(d, int(w)) for d in range(7) for w in WINDOWS}
    if profile.kind == "binger":
        return {(d, int(w)) for d in range(profile.active_days) for w in WINDOWS}
    if profile.kind == "minimal-completer":
        out = set()
        for d in range(7):
            count = 1 + int(rng.random() < 0.35)
            picks = rng.choice(3, size=count, replace=False)
            out.update((d, int(p)) for p in picks)
        return out
    # random
    return {(d, int(w)) for d in range(7) for w in WINDOWS if rng.random() < profile.probability}


def _slot_answers(
    rng: np.random.Generator,
    persona: SyntheticPersona,
    state: _DayState,
    window: SurveyWindow,
) -> dict[str, AnswerValue]:
    noise = persona.noise_scale
    answers: dict[str, AnswerValue] = {}

    if window == SurveyWindow.MORNING:
        answers["sleep-bed"] = Clock(ClockTime(state.bed))
        answers["sleep-wake"] = Clock(ClockTime(state.wake))
        answers["sleep-quality"] = OrdinalLevel(state.quality)
        answers["worry-target"] = CategorySet((state.worry_target,))
        if state.worry_note is not None:
            answers["worry-note"] = Text(state.worry_note)
        answers["worry-level"] = Magnitude(state.worry_level)
        answers["worry-certainty"] = Magnitude(state.certainty)
        answers["worry-expected"] = Magnitude(state.expected)
    else:
        answers["worry-happened"] = Flag(state.happened)
        answers["worry-avoided"] = Flag(state.avoided)
        answers["worry-actual"] = Magnitude(state.actual)

    if window == SurveyWindow.AFTERNOON:
        answers["school-attended"] = Flag(state.attended)
        if not state.attended and state.reason is not None:
            answers["school-reason"] = CategorySet((state.reason,))

    intensity = _clamp10(state.intensity + rng.normal(0, 0.6) * noise)
    chosen = []
    for cat, propensity in zip(NON_OTHER_SYMPTOMS, persona.symptom_propensity):
        p = min(0.95, propensity * (0.25 + intensity / 15.0))
        if rng.random() < p:
            chosen.append(cat)
    if rng.random() < 0.05:
        chosen.append("other")
        answers["sym-other-note"] = Text(str(rng.choice(_OTHER_SYMPTOM_NOTES)))
    answers["sym-types"] = CategorySet(tuple(chosen))
    answers["sym-intensity"] = Magnitude(intensity)
    answers["sym-worry"] = Magnitude(_clamp10(persona.symptom_worry_coupling * intensity + rng.normal(0, 1) * noise))
    answers["sym-medication"] = Flag(bool(rng.random() < 0.15 + intensity / 40.0))

    occurred = bool(rng.random() < 0.75)
    answers["peer-occurred"] = Flag(occurred)
    signed = 0
    if occurred:
        level = int(min(4, max(0, round(2.2 + rng.normal(0, 1.1)))))
        answers["peer-quality"] = OrdinalLevel(level)
        signed = level - 2
    answers["peer-worry"] = Magnitude(_clamp10(3 - signed + rng.normal(0, 1) * noise))

    answers["emo-worried"] = Magnitude(_clamp10(2 + persona.symptom_worry_coupling * intensity * 0.6 + rng.normal(0, 1) * noise))
    answers["emo-angry"] = Magnitude(_clamp10(2.2 + rng.normal(0, 1.4) * noise))
    answers["emo-happy"] = Magnitude(_clamp10(4.5 + persona.peer_happy_coupling * signed + rng.normal(0, 1) * noise))
    answers["emo-sad"] = Magnitude(_clamp10(2.2 + rng.normal(0, 1.4) * noise))
    return answers


def generate_week(
    seed: int,
    persona: SyntheticPersona,
    profile: ComplianceProfile,
    week_start: date,
    *,
    participant: str = "synthetic",
    question_dropout: Optional[float] = None,
) -> list[EmaResponse]:
    """Deterministic week of responses for one participant.

    `question_dropout` is the per-question skip probability inside an
    answered slot; it defaults to 0.05 except for the full profile, which
    answers everything unless told otherwise.
    """
    if question_dropout is None:
        question_dropout = 0.0 if profile.kind == "full" else 0.05
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    days = _latent_days(rng, persona, week_start)
    answered = _answered_slots(rng, profile)

    out: list[EmaResponse] = []
    hours = DEFAULT_WINDOW_HOURS
    for d in range(7):
        for w in WINDOWS:
            if (d, int(w)) not in answered:
                continue
            answers = _slot_answers(rng, persona, days[d], w)
            if question_dropout > 0.0:
                answers = {qid: v for qid, v in answers.items() if rng.random() >= question_dropout}
            day = week_start + timedelta(days=d)
            open_min = hours.open[w].minutes
            span = hours.close[w].minutes - open_min
            submitted_min = open_min + int(rng.integers(0, span))
            submitted = datetime.combine(
                day, time(submitted_min // 60, submitted_min % 60), tzinfo=timezone.utc
            )
            out.append(
                EmaResponse(
                    participant=participant,
                    date=day,
                    window=w,
                    submitted_at=submitted,
                    answers=answers,
                )
            )
    return out


# ---------------------------------------------------------------------------
# Cohorts
# ---------------------------------------------------------------------------

DEFAULT_COHORT_START = date(2024, 3, 4)  # a Monday


@dataclass(frozen=True)
class CohortMember:
    participant: str
    plan: StudyPlan
    persona: SyntheticPersona
    profile: ComplianceProfile
    responses: tuple[EmaResponse, ...]


def _draw_persona(rng: np.random.Generator, seed: int) -> SyntheticPersona:
    return SyntheticPersona(
        bed_minutes=int(1290 + rng.integers(0, 150)),
        wake_minutes=int(360 + rng.integers(0, 120)),
        sleep_jitter_minutes=float(25 + rng.random() * 50),
        symptom_propensity=tuple(float(p) for p in rng.uniform(0.05, 0.7, size=len(NON_OTHER_SYMPTOMS))),
        sleep_symptom_coupling=float(rng.uniform(0.3, 0.9)),
        symptom_worry_coupling=float(rng.uniform(0.3, 0.9)),
        peer_happy_coupling=float(rng.uniform(0.3, 0.9)),
        noise_scale=float(rng.uniform(0.6, 1.4)),
        seed=seed,
    )


def _draw_profile(rng: np.random.Generator, index: int) -> ComplianceProfile:
    wheel = index % 4
    if wheel == 0:
        return ComplianceProfile.full()
    if wheel == 1:
        return ComplianceProfile.minimal()
    if wheel == 2:
        return ComplianceProfile.binger(int(rng.integers(2, 5)))
    return ComplianceProfile.random(float(rng.uniform(0.45, 0.9)))


def generate_cohort(
    n: int,
    seed: int,
    *,
    start_date: date = DEFAULT_COHORT_START,
    tz: str = "UTC",
) -> list[CohortMember]:
    """n participants with counterbalanced plans and two generated EMA weeks."""
    if n < 1:
        raise ValueError("cohort size must be >= 1")
    members = []
    children = np.random.SeedSequence(seed).spawn(n)
    for i, child in enumerate(children):
        rng = np.random.default_rng(child)
        member_seed = int(rng.integers(0, 2**31 - 1))
        persona = _draw_persona(rng, member_seed)
        profile = _draw_profile(rng, i)
        plan = make_study_plan(i, start_date, tz)
        responses: list[EmaResponse] = []
        for week_index, week in enumerate(plan.weeks):
            if week.kind == "washout":
                continue
            responses.extend(
                generate_week(
                    member_seed + week_index,
                    persona,
                    profile,
                    week.week_start,
                    participant=plan.participant,
                )
            )
        members.append(
            CohortMember(
                participant=plan.participant,
                plan=plan,
                persona=persona,
                profile=profile,
                responses=tuple(responses),
            )
        )
    return members


def persona_to_json(p: SyntheticPersona) -> dict:
    return {
        "bed_minutes": p.bed_minutes,
        "wake_minutes": p.wake_minutes,
        "sleep_jitter_minutes": p.sleep_jitter_minutes,
        "symptom_propensity": list(p.symptom_propensity),
        "sleep_symptom_coupling": p.sleep_symptom_coupling,
        "symptom_worry_coupling": p.symptom_worry_coupling,
        "peer_happy_coupling": p.peer_happy_coupling,
        "noise_scale": p.noise_scale,
        "seed": p.seed,
    }


def profile_to_json(p: ComplianceProfile) -> dict:
    out: dict = {"kind": p.kind}
    if p.kind == "binger":
        out["active_days"] = p.active_days
    if p.kind == "random":
        out["probability"] = p.probability
    return out
