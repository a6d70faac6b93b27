"""Core EMA data model: survey schema, answer values, and the 21-slot week.

A study week is 7 days x 3 daily response windows. Each (day, window) pair
is one survey slot; a slot is Completed, Missed, or Pending depending on
submitted responses and the clock. Answers are typed against the survey
definition, and partial responses are valid by design: missingness is
represented downstream, never rejected here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from datetime import date, datetime, time, timedelta, tzinfo
from enum import Enum, IntEnum
from typing import Iterable, Literal, Optional, Union

MINUTES_PER_DAY = 1440


class Facet(Enum):
    SLEEP = "sleep"
    SYMPTOMS = "symptoms"
    EMOTIONS = "emotions"
    WORRIES = "worries"
    SCHOOL = "school"
    PEERS = "peers"

    @property
    def hue_role(self) -> str:
        return _FACET_HUE_ROLE[self]


# School and Peers deliberately share purple; Emotions is per-chart coloured.
_FACET_HUE_ROLE = {
    Facet.SLEEP: "green",
    Facet.SYMPTOMS: "red",
    Facet.EMOTIONS: "multicolour",
    Facet.WORRIES: "blue",
    Facet.SCHOOL: "purple",
    Facet.PEERS: "purple",
}


class SurveyWindow(IntEnum):
    """The three daily response windows, ordered morning < afternoon < evening."""

    MORNING = 0
    AFTERNOON = 1
    EVENING = 2

    @property
    def label(self) -> str:
        return self.name.lower()

    @classmethod
    def from_label(cls, label: str) -> "SurveyWindow":
        try:
            return cls[label.upper()]
        except KeyError:
            raise ValueError(f"unknown survey window: {label!r}") from None


WINDOWS = (SurveyWindow.MORNING, SurveyWindow.AFTERNOON, SurveyWindow.EVENING)
SLOTS_PER_WEEK = 7 * len(WINDOWS)


@dataclass(frozen=True)
class ClockTime:
    """Minutes since local midnight, 0..1439. Arithmetic wraps modulo one day."""

    minutes: int

    def __post_init__(self) -> None:
        if not 0 <= self.minutes < MINUTES_PER_DAY:
            raise ValueError(f"clock minutes out of range: {self.minutes}")

    @classmethod
    def at(cls, hour: int, minute: int = 0) -> "ClockTime":
        return cls(hour * 60 + minute)

    @classmethod
    def parse(cls, text: str) -> "ClockTime":
        hh, _, mm = text.partition(":")
        return cls.at(int(hh), int(mm))

    def __str__(self) -> str:
        return f"{self.minutes // 60:02d}:{self.minutes % 60:02d}"

    def as_time(self) -> time:
        return time(self.minutes // 60, self.minutes % 60)


def sleep_duration(bed: ClockTime, wake: ClockTime) -> int:
    """Minutes asleep on a wrap-around clock; a zero-length night is rejected.

    bed == wake is ambiguous (no sleep, or a full day) and raises ValueError.
    """
    if bed == wake:
        raise ValueError("bed and wake times are equal; sleep duration is ambiguous")
    return (wake.minutes - bed.minutes) % MINUTES_PER_DAY


def likert_to_diverging(level: int) -> int:
    """Map a 1..5 Likert level onto the signed -2..+2 diverging scale."""
    if not 1 <= level <= 5:
        raise ValueError(f"likert level out of range 1..5: {level}")
    return level - 3


# ---------------------------------------------------------------------------
# Answer kinds (question schema) and answer values (responses)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuantSequential:
    """Bounded integer magnitude scale, e.g. 0..10 intensity sliders."""

    lo: int = 0
    hi: int = 10

    def __post_init__(self) -> None:
        if self.lo >= self.hi:
            raise ValueError(f"quantitative scale needs lo < hi, got {self.lo}..{self.hi}")


@dataclass(frozen=True)
class QuantCyclic:
    """A clock-time answer (minutes since midnight)."""


@dataclass(frozen=True)
class OrdinalSequential:
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.labels) < 2:
            raise ValueError("ordinal scale needs at least 2 levels")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("ordinal labels must be distinct")


@dataclass(frozen=True)
class OrdinalDiverging:
    """Five ordered levels centered on a neutral midpoint."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != 5:
            raise ValueError("diverging scale must have exactly 5 levels")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("diverging labels must be distinct")


@dataclass(frozen=True)
class Categorical:
    labels: tuple[str, ...]
    multi: bool = False

    def __post_init__(self) -> None:
        if not self.labels:
            raise ValueError("categorical label set must be non-empty")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("categorical labels must be duplicate-free")


@dataclass(frozen=True)
class Binary:
    pass


@dataclass(frozen=True)
class FreeText:
    pass


AnswerKind = Union[
    QuantSequential, QuantCyclic, OrdinalSequential, OrdinalDiverging, Categorical, Binary, FreeText
]


@dataclass(frozen=True)
class Magnitude:
    value: int


@dataclass(frozen=True)
class Clock:
    value: ClockTime


@dataclass(frozen=True)
class OrdinalLevel:
    index: int


@dataclass(frozen=True)
class CategorySet:
    values: tuple[str, ...]


@dataclass(frozen=True)
class Flag:
    value: bool


@dataclass(frozen=True)
class Text:
    value: str


AnswerValue = Union[Magnitude, Clock, OrdinalLevel, CategorySet, Flag, Text]


def check_answer(kind: AnswerKind, value: AnswerValue) -> Optional[str]:
    """Return a violation code ("wrong-variant" / "out-of-range") or None if valid."""
    if isinstance(kind, QuantSequential):
        if not isinstance(value, Magnitude):
            return "wrong-variant"
        if not kind.lo <= value.value <= kind.hi:
            return "out-of-range"
    elif isinstance(kind, QuantCyclic):
        if not isinstance(value, Clock):
            return "wrong-variant"
    elif isinstance(kind, (OrdinalSequential, OrdinalDiverging)):
        if not isinstance(value, OrdinalLevel):
            return "wrong-variant"
        if not 0 <= value.index < len(kind.labels):
            return "out-of-range"
    elif isinstance(kind, Categorical):
        if not isinstance(value, CategorySet):
            return "wrong-variant"
        if len(value.values) != len(set(value.values)):
            return "out-of-range"
        if any(v not in kind.labels for v in value.values):
            return "out-of-range"
        if not kind.multi and len(value.values) > 1:
            return "out-of-range"
    elif isinstance(kind, Binary):
        if not isinstance(value, Flag):
            return "wrong-variant"
    elif isinstance(kind, FreeText):
        if not isinstance(value, Text):
            return "wrong-variant"
    else:  # pragma: no cover - exhaustive over AnswerKind
        raise TypeError(f"unknown answer kind: {kind!r}")
    return None


# ---------------------------------------------------------------------------
# Survey definition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Question:
    qid: str
    facet: Facet
    prompt: str
    answer: AnswerKind
    asked_in: frozenset[SurveyWindow]
    required: bool = True

    def __post_init__(self) -> None:
        if not self.asked_in:
            raise ValueError(f"question {self.qid} must be asked in at least one window")


@dataclass(frozen=True)
class SurveyDefinition:
    questions: tuple[Question, ...]
    version: str

    def __post_init__(self) -> None:
        qids = [q.qid for q in self.questions]
        if len(set(qids)) != len(qids):
            raise ValueError("duplicate qid in survey definition")

    def question(self, qid: str) -> Optional[Question]:
        return self._by_qid.get(qid)

    @property
    def _by_qid(self) -> dict[str, Question]:
        cached = self.__dict__.get("_qid_cache")
        if cached is None:
            cached = {q.qid: q for q in self.questions}
            object.__setattr__(self, "_qid_cache", cached)
        return cached

    def questions_for(self, window: SurveyWindow) -> tuple[Question, ...]:
        return tuple(q for q in self.questions if window in q.asked_in)


SLEEP_QUALITY_LABELS = ("poor", "okay", "good", "great")

SYMPTOM_CATEGORIES = (
    "stomach ache",
    "headache",
    "low back pain",
    "dizziness",
    "limb pain",
    "fast heartbeat",
    "nausea",
    "body weakness",
    "other",
)

EMOTIONS = ("worried", "angry", "happy", "sad")

WORRY_TARGETS = ("family", "friends", "strangers", "school", "sports", "health")

SCHOOL_MISS_REASONS = (
    "weekend",
    "holiday",
    "vacation",
    "pain",
    "sick",
    "medical appointment",
    "home-schooled",
    "online",
)

PEER_QUALITY_LABELS = ("very poorly", "poorly", "okay", "well", "very well")

_ALL = frozenset(WINDOWS)
_MORNING = frozenset({SurveyWindow.MORNING})
_AFTERNOON = frozenset({SurveyWindow.AFTERNOON})
_FOLLOWUP = frozenset({SurveyWindow.AFTERNOON, SurveyWindow.EVENING})

DEFINITION_VERSION = "1"


def default_survey_definition() -> SurveyDefinition:
    """The built-in instrument: 23 encoded items plus two free-text notes.

    Window restrictions are part of the instrument: sleep items only in the
    morning, the worry setup in the morning with follow-ups later in the day,
    school attendance in the afternoon, and everything else at every window.
    """
    scale = QuantSequential(0, 10)
    q = [
        Question("sleep-bed", Facet.SLEEP, "What time did you go to sleep last night?", QuantCyclic(), _MORNING),
        Question("sleep-wake", Facet.SLEEP, "What time did you wake up today?", QuantCyclic(), _MORNING),
        Question(
            "sleep-quality",
            Facet.SLEEP,
            "How well did you sleep?",
            OrdinalSequential(SLEEP_QUALITY_LABELS),
            _MORNING,
        ),
        Question(
            "sym-types",
            Facet.SYMPTOMS,
            "Which physical symptoms do you have right now?",
            Categorical(SYMPTOM_CATEGORIES, multi=True),
            _ALL,
        ),
        Question(
            "sym-other-note",
            Facet.SYMPTOMS,
            "If other, what symptom?",
            FreeText(),
            _ALL,
            required=False,
        ),
        Question("sym-intensity", Facet.SYMPTOMS, "How intense are your symptoms right now?", scale, _ALL),
        Question("sym-worry", Facet.SYMPTOMS, "How worried are you about your symptoms?", scale, _ALL),
        Question("sym-medication", Facet.SYMPTOMS, "Did you take medication since the last survey?", Binary(), _ALL),
        Question("emo-worried", Facet.EMOTIONS, "How worried do you feel right now?", scale, _ALL),
        Question("emo-angry", Facet.EMOTIONS, "How angry do you feel right now?", scale, _ALL),
        Question("emo-happy", Facet.EMOTIONS, "How happy do you feel right now?", scale, _ALL),
        Question("emo-sad", Facet.EMOTIONS, "How sad do you feel right now?", scale, _ALL),
        Question(
            "worry-target",
            Facet.WORRIES,
            "What are you most worried about today?",
            Categorical(WORRY_TARGETS),
            _MORNING,
        ),
        Question(
            "worry-note",
            Facet.WORRIES,
            "In a few words, what is the worry?",
            FreeText(),
            _MORNING,
            required=False,
        ),
        Question("worry-level", Facet.WORRIES, "How worried are you about it?", scale, _MORNING),
        Question("worry-certainty", Facet.WORRIES, "How certain are you it will happen?", scale, _MORNING),
        Question("worry-expected", Facet.WORRIES, "How bad do you expect it to be?", scale, _MORNING),
        Question("worry-happened", Facet.WORRIES, "Did the thing you were worried about happen?", Binary(), _FOLLOWUP),
        Question("worry-avoided", Facet.WORRIES, "Did you try to avoid it?", Binary(), _FOLLOWUP),
        Question("worry-actual", Facet.WORRIES, "How bad was it actually?", scale, _FOLLOWUP),
        Question("school-attended", Facet.SCHOOL, "Did you go to school today?", Binary(), _AFTERNOON),
        Question(
            "school-reason",
            Facet.SCHOOL,
            "If not, why not?",
            Categorical(SCHOOL_MISS_REASONS),
            _AFTERNOON,
            required=False,
        ),
        Question("peer-worry", Facet.PEERS, "How worried are you about interacting with friends?", scale, _ALL),
        Question(
            "peer-quality",
            Facet.PEERS,
            "How did getting along with your friends go?",
            OrdinalDiverging(PEER_QUALITY_LABELS),
            _ALL,
            required=False,
        ),
        Question("peer-occurred", Facet.PEERS, "Did you interact with friends since the last survey?", Binary(), _ALL),
    ]
    return SurveyDefinition(questions=tuple(q), version=DEFINITION_VERSION)


# ---------------------------------------------------------------------------
# Responses and the 21-slot week
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EmaResponse:
    """One submitted survey for one (participant, date, window) slot.

    Answers may cover any subset of the window's questions. submitted_at must
    carry an explicit UTC offset; revisions are assigned by the datastore and
    grow monotonically per slot.
    """

    participant: str
    date: date
    window: SurveyWindow
    submitted_at: datetime
    answers: dict[str, AnswerValue] = field(default_factory=dict)
    revision: int = 1

    def __post_init__(self) -> None:
        if self.submitted_at.tzinfo is None:
            raise ValueError("submitted_at must carry an explicit timezone offset")


@dataclass(frozen=True)
class ValidationError:
    qid: str
    code: Literal["out-of-range", "wrong-window", "unknown-qid", "wrong-variant"]
    message: str


def validate_response(definition: SurveyDefinition, response: EmaResponse) -> list[ValidationError]:
    """Check every supplied answer against its question; empty list means valid.

    Missing answers are never an error: partiality is a first-class state.
    """
    errors: list[ValidationError] = []
    for qid, value in response.answers.items():
        question = definition.question(qid)
        if question is None:
            errors.append(ValidationError(qid, "unknown-qid", f"{qid} is not in the survey definition"))
            continue
        if response.window not in question.asked_in:
            errors.append(
                ValidationError(
                    qid,
                    "wrong-window",
                    f"{qid} is not asked in the {response.window.label} window",
                )
            )
            continue
        code = check_answer(question.answer, value)
        if code is not None:
            errors.append(ValidationError(qid, code, f"{qid}: answer {value!r} violates {question.answer!r}"))
    return errors


@dataclass(frozen=True)
class WindowHours:
    """Local open/close clock times for each daily window."""

    open: dict[SurveyWindow, ClockTime]
    close: dict[SurveyWindow, ClockTime]

    def __post_init__(self) -> None:
        prev_close = None
        for w in WINDOWS:
            o, c = self.open[w], self.close[w]
            if o.minutes >= c.minutes:
                raise ValueError(f"{w.label} window must open before it closes")
            if prev_close is not None and o.minutes < prev_close:
                raise ValueError("windows must be ordered and non-overlapping")
            prev_close = c.minutes


DEFAULT_WINDOW_HOURS = WindowHours(
    open={
        SurveyWindow.MORNING: ClockTime.at(7),
        SurveyWindow.AFTERNOON: ClockTime.at(12),
        SurveyWindow.EVENING: ClockTime.at(17),
    },
    close={
        SurveyWindow.MORNING: ClockTime.at(12),
        SurveyWindow.AFTERNOON: ClockTime.at(17),
        SurveyWindow.EVENING: ClockTime.at(22),
    },
)

SlotState = Literal["completed", "missed", "pending"]


@dataclass(frozen=True)
class Slot:
    state: SlotState
    response: Optional[EmaResponse] = None


@dataclass(frozen=True)
class WeekDataset:
    """Exactly 21 slots: day-major, window-minor, covering week_start..+6."""

    participant: str
    week_start: date
    slots: tuple[Slot, ...]

    def __post_init__(self) -> None:
        if len(self.slots) != SLOTS_PER_WEEK:
            raise ValueError(f"a week has {SLOTS_PER_WEEK} slots, got {len(self.slots)}")

    def slot(self, day: int, window: SurveyWindow) -> Slot:
        return self.slots[day * 3 + int(window)]

    def day_date(self, day: int) -> date:
        return self.week_start + timedelta(days=day)

    def counts(self) -> dict[SlotState, int]:
        out: dict[SlotState, int] = {"completed": 0, "missed": 0, "pending": 0}
        for s in self.slots:
            out[s.state] += 1
        return out


def local_wall_clock(now: datetime, tz: Optional[tzinfo]) -> datetime:
    """Reduce `now` to a naive participant-local wall-clock time.

    Naive datetimes are taken as already-local; aware ones are converted to
    `tz` (UTC when unspecified) and stripped.
    """
    if now.tzinfo is None:
        return now
    from datetime import timezone as _tzmod

    return now.astimezone(tz or _tzmod.utc).replace(tzinfo=None)


def window_close_at(day: date, window: SurveyWindow, hours: WindowHours = DEFAULT_WINDOW_HOURS) -> datetime:
    return datetime.combine(day, hours.close[window].as_time())


def window_open_at(day: date, window: SurveyWindow, hours: WindowHours = DEFAULT_WINDOW_HOURS) -> datetime:
    return datetime.combine(day, hours.open[window].as_time())


def _response_order_key(r: EmaResponse) -> tuple:
    # Total order so the winner is independent of input permutation.
    return (r.revision, r.submitted_at, json.dumps(answers_to_json(r.answers), sort_keys=True))


def build_week_dataset(
    responses: Iterable[EmaResponse],
    week_start: date,
    now: datetime,
    *,
    hours: WindowHours = DEFAULT_WINDOW_HOURS,
    tz: Optional[tzinfo] = None,
    participant: Optional[str] = None,
) -> WeekDataset:
    """Assemble the canonical week: latest revision wins, closed slots without
    a response are Missed, not-yet-closed slots are Pending.

    Responses outside [week_start, week_start+7) are ignored. All responses
    must belong to one participant.
    """
    responses = list(responses)
    seen = {r.participant for r in responses}
    if len(seen) > 1:
        raise ValueError(f"responses span multiple participants: {sorted(seen)}")
    if participant is None:
        participant = next(iter(seen)) if seen else ""
    elif seen and participant not in seen:
        raise ValueError(f"responses belong to {next(iter(seen))!r}, not {participant!r}")

    by_slot: dict[tuple[date, SurveyWindow], list[EmaResponse]] = {}
    week_end = week_start + timedelta(days=7)
    for r in responses:
        if week_start <= r.date < week_end:
            by_slot.setdefault((r.date, r.window), []).append(r)

    local_now = local_wall_clock(now, tz)
    slots: list[Slot] = []
    for d in range(7):
        day = week_start + timedelta(days=d)
        for w in WINDOWS:
            candidates = by_slot.get((day, w))
            if candidates:
                slots.append(Slot("completed", max(candidates, key=_response_order_key)))
            elif local_now >= window_close_at(day, w, hours):
                slots.append(Slot("missed"))
            else:
                slots.append(Slot("pending"))
    return WeekDataset(participant=participant, week_start=week_start, slots=tuple(slots))


@dataclass(frozen=True)
class SleepRecord:
    """One night's sleep as reported in the morning survey of `day`."""

    day: date
    bed: ClockTime
    wake: ClockTime
    quality: int  # 0=poor .. 3=great

    def __post_init__(self) -> None:
        if not 0 <= self.quality <= 3:
            raise ValueError(f"sleep quality out of range 0..3: {self.quality}")
        sleep_duration(self.bed, self.wake)  # rejects bed == wake

    @property
    def duration_minutes(self) -> int:
        return sleep_duration(self.bed, self.wake)


def extract_sleep_record(response: EmaResponse) -> Optional[SleepRecord]:
    """Pull a SleepRecord out of a morning response, or None if times are absent."""
    bed = response.answers.get("sleep-bed")
    wake = response.answers.get("sleep-wake")
    quality = response.answers.get("sleep-quality")
    if not isinstance(bed, Clock) or not isinstance(wake, Clock):
        return None
    if bed.value == wake.value:
        return None
    level = quality.index if isinstance(quality, OrdinalLevel) else 0
    return SleepRecord(day=response.date, bed=bed.value, wake=wake.value, quality=level)


# ---------------------------------------------------------------------------
# JSON wire format
# ---------------------------------------------------------------------------

_KIND_TAGS: dict[type, str] = {
    QuantSequential: "quant-sequential",
    QuantCyclic: "quant-cyclic",
    OrdinalSequential: "ordinal-sequential",
    OrdinalDiverging: "ordinal-diverging",
    Categorical: "categorical",
    Binary: "binary",
    FreeText: "free-text",
}


def answer_kind_to_json(kind: AnswerKind) -> dict:
    tag = _KIND_TAGS[type(kind)]
    out: dict = {"kind": tag}
    if isinstance(kind, QuantSequential):
        out.update(lo=kind.lo, hi=kind.hi)
    elif isinstance(kind, (OrdinalSequential, OrdinalDiverging)):
        out["labels"] = list(kind.labels)
    elif isinstance(kind, Categorical):
        out.update(labels=list(kind.labels), multi=kind.multi)
    return out


def answer_kind_from_json(obj: dict) -> AnswerKind:
    tag = obj.get("kind")
    if tag == "quant-sequential":
        return QuantSequential(int(obj["lo"]), int(obj["hi"]))
    if tag == "quant-cyclic":
        return QuantCyclic()
    if tag == "ordinal-sequential":
        return OrdinalSequential(tuple(obj["labels"]))
    if tag == "ordinal-diverging":
        return OrdinalDiverging(tuple(obj["labels"]))
    if tag == "categorical":
        return Categorical(tuple(obj["labels"]), bool(obj.get("multi", False)))
    if tag == "binary":
        return Binary()
    if tag == "free-text":
        return FreeText()
    raise ValueError(f"unknown answer kind tag: {tag!r}")


def answer_value_to_json(value: AnswerValue) -> dict:
    if isinstance(value, Magnitude):
        return {"kind": "magnitude", "value": value.value}
    if isinstance(value, Clock):
        return {"kind": "clock", "minutes": value.value.minutes}
    if isinstance(value, OrdinalLevel):
        return {"kind": "ordinal", "level": value.index}
    if isinstance(value, CategorySet):
        return {"kind": "categories", "values": list(value.values)}
    if isinstance(value, Flag):
        return {"kind": "flag", "value": value.value}
    if isinstance(value, Text):
        return {"kind": "text", "value": value.value}
    raise TypeError(f"unknown answer value: {value!r}")


def answer_value_from_json(obj: dict) -> AnswerValue:
    tag = obj.get("kind")
    if tag == "magnitude":
        return Magnitude(int(obj["value"]))
    if tag == "clock":
        return Clock(ClockTime(int(obj["minutes"])))
    if tag == "ordinal":
        return OrdinalLevel(int(obj["level"]))
    if tag == "categories":
        return CategorySet(tuple(obj["values"]))
    if tag == "flag":
        return Flag(bool(obj["value"]))
    if tag == "text":
        return Text(str(obj["value"]))
    raise ValueError(f"unknown answer value tag: {tag!r}")


def answers_to_json(answers: dict[str, AnswerValue]) -> dict[str, dict]:
    return {qid: answer_value_to_json(v) for qid, v in sorted(answers.items())}


def answers_from_json(obj: dict) -> dict[str, AnswerValue]:
    return {qid: answer_value_from_json(v) for qid, v in obj.items()}


def response_to_json(r: EmaResponse) -> dict:
    return {
        "participant": r.participant,
        "date": r.date.isoformat(),
        "window": r.window.label,
        "submitted_at": r.submitted_at.isoformat(),
        "answers": answers_to_json(r.answers),
        "revision": r.revision,
    }


def response_from_json(obj: dict) -> EmaResponse:
    submitted = datetime.fromisoformat(obj["submitted_at"])
    return EmaResponse(
        participant=str(obj["participant"]),
        date=date.fromisoformat(obj["date"]),
        window=SurveyWindow.from_label(obj["window"]),
        submitted_at=submitted,
        answers=answers_from_json(obj.get("answers", {})),
        revision=int(obj.get("revision", 1)),
    )


def question_to_json(q: Question) -> dict:
    return {
        "qid": q.qid,
        "facet": q.facet.value,
        "prompt": q.prompt,
        "answer": answer_kind_to_json(q.answer),
        "asked_in": [w.label for w in sorted(q.asked_in)],
        "required": q.required,
    }


def question_from_json(obj: dict) -> Question:
    return Question(
        qid=str(obj["qid"]),
        facet=Facet(obj["facet"]),
        prompt=str(obj["prompt"]),
        answer=answer_kind_from_json(obj["answer"]),
        asked_in=frozenset(SurveyWindow.from_label(w) for w in obj["asked_in"]),
        required=bool(obj.get("required", True)),
    )


def definition_to_json(d: SurveyDefinition) -> dict:
    return {"version": d.version, "questions": [question_to_json(q) for q in d.questions]}


def definition_from_json(obj: dict) -> SurveyDefinition:
    return SurveyDefinition(
        questions=tuple(question_from_json(q) for q in obj["questions"]),
        version=str(obj["version"]),
    )


def with_revision(r: EmaResponse, revision: int) -> EmaResponse:
    return replace(r, revision=revision)
