from __future__ import annotations

import random
from datetime import date, datetime, time, timedelta, timezone

import pytest
from hypothesis import given, strategies as st

from helpers import (
    AFTERNOON,
    EVENING,
    MORNING,
    WEEK_START,
    make_response,
    oracle_slot_states,
)
from weeklens.model import (
    CategorySet,
    Clock,
    ClockTime,
    EmaResponse,
    Facet,
    Flag,
    Magnitude,
    OrdinalLevel,
    Text,
    build_week_dataset,
    default_survey_definition,
    definition_from_json,
    definition_to_json,
    likert_to_diverging,
    response_from_json,
    response_to_json,
    sleep_duration,
    validate_response,
)

DEF = default_survey_definition()


# ---------------------------------------------------------------------------
# survey definition
# ---------------------------------------------------------------------------

ALL = frozenset({MORNING, AFTERNOON, EVENING})
EXPECTED_WINDOWS = {
    "sleep-bed": {MORNING},
    "sleep-wake": {MORNING},
    "sleep-quality": {MORNING},
    "worry-target": {MORNING},
    "worry-note": {MORNING},
    "worry-level": {MORNING},
    "worry-certainty": {MORNING},
    "worry-expected": {MORNING},
    "worry-happened": {AFTERNOON, EVENING},
    "worry-avoided": {AFTERNOON, EVENING},
    "worry-actual": {AFTERNOON, EVENING},
    "school-attended": {AFTERNOON},
    "school-reason": {AFTERNOON},
}


def test_window_restrictions_hold_per_question():
    for q in DEF.questions:
        expected = EXPECTED_WINDOWS.get(q.qid, set(ALL))
        assert set(q.asked_in) == expected, q.qid


def test_symptom_type_categories():
    q = DEF.question("sym-types")
    assert len(q.answer.labels) == 9
    assert q.answer.multi is True
    assert "other" in q.answer.labels


def test_worry_followup_windows():
    q = DEF.question("worry-happened")
    assert set(q.asked_in) == {AFTERNOON, EVENING}


def test_worry_target_single_answer():
    q = DEF.question("worry-target")
    assert q.answer.multi is False
    assert set(q.answer.labels) == {"family", "friends", "strangers", "school", "sports", "health"}


def test_peer_quality_is_five_level_diverging():
    q = DEF.question("peer-quality")
    assert len(q.answer.labels) == 5


def test_facet_hue_roles():
    assert Facet.SLEEP.hue_role == "green"
    assert Facet.SYMPTOMS.hue_role == "red"
    assert Facet.EMOTIONS.hue_role == "multicolour"
    assert Facet.WORRIES.hue_role == "blue"
    assert Facet.SCHOOL.hue_role == "purple"
    assert Facet.PEERS.hue_role == "purple"


def test_definition_json_round_trip():
    assert definition_from_json(definition_to_json(DEF)) == DEF


# ---------------------------------------------------------------------------
# clock arithmetic
# ---------------------------------------------------------------------------


def test_sleep_duration_examples():
    assert sleep_duration(ClockTime.parse("23:00"), ClockTime.parse("07:00")) == 480
    assert sleep_duration(ClockTime.parse("01:00"), ClockTime.parse("09:00")) == 480
    assert sleep_duration(ClockTime.parse("22:30"), ClockTime.parse("06:45")) == 495


def test_sleep_duration_rejects_equal_times():
    with pytest.raises(ValueError):
        sleep_duration(ClockTime(600), ClockTime(600))


def test_sleep_duration_random_pairs_against_step_oracle():
    # independent oracle: walk the clock forward one minute at a time
    rnd = random.Random(42)
    for _ in range(300):
        bed, wake = rnd.randrange(1440), rnd.randrange(1440)
        if bed == wake:
            continue
        steps, cursor = 0, bed
        while cursor != wake:
            cursor = (cursor + 1) % 1440
            steps += 1
        assert sleep_duration(ClockTime(bed), ClockTime(wake)) == steps


@given(st.integers(0, 1439), st.integers(0, 1439))
def test_sleep_duration_complement(bed, wake):
    if bed == wake:
        return
    b, w = ClockTime(bed), ClockTime(wake)
    assert sleep_duration(b, w) + sleep_duration(w, b) == 1440


def test_clock_time_bounds():
    with pytest.raises(ValueError):
        ClockTime(1440)
    with pytest.raises(ValueError):
        ClockTime(-1)


def test_likert_to_diverging_exhaustive():
    assert [likert_to_diverging(v) for v in (1, 2, 3, 4, 5)] == [-2, -1, 0, 1, 2]
    values = [likert_to_diverging(v) for v in range(1, 6)]
    assert all(a < b for a, b in zip(values, values[1:]))  # strictly increasing
    assert likert_to_diverging(3) == 0
    assert likert_to_diverging(1) == -likert_to_diverging(5)
    for bad in (0, 6, -1):
        with pytest.raises(ValueError):
            likert_to_diverging(bad)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def test_out_of_range_magnitude():
    r = make_response(answers={"emo-happy": Magnitude(11)})
    errors = validate_response(DEF, r)
    assert [e.code for e in errors] == ["out-of-range"]
    assert errors[0].qid == "emo-happy"


def test_wrong_window_sleep_in_evening():
    r = make_response(window=EVENING, answers={"sleep-quality": OrdinalLevel(2)})
    errors = validate_response(DEF, r)
    assert [e.code for e in errors] == ["wrong-window"]


def test_partial_response_is_valid():
    r = make_response(answers={"emo-sad": Magnitude(3), "sym-intensity": Magnitude(0), "peer-worry": Magnitude(1)})
    assert validate_response(DEF, r) == []


def test_unknown_qid():
    r = make_response(answers={"nonsense": Magnitude(1)})
    assert [e.code for e in validate_response(DEF, r)] == ["unknown-qid"]


def test_wrong_variant():
    r = make_response(answers={"sleep-bed": Magnitude(5)})
    assert [e.code for e in validate_response(DEF, r)] == ["wrong-variant"]


def test_categorical_rules():
    bad_label = make_response(answers={"sym-types": CategorySet(("gremlins",))})
    assert [e.code for e in validate_response(DEF, bad_label)] == ["out-of-range"]
    multi_on_single = make_response(answers={"worry-target": CategorySet(("family", "school"))})
    assert [e.code for e in validate_response(DEF, multi_on_single)] == ["out-of-range"]
    multi_ok = make_response(answers={"sym-types": CategorySet(("headache", "nausea"))})
    assert validate_response(DEF, multi_ok) == []
    empty_ok = make_response(answers={"sym-types": CategorySet(())})
    assert validate_response(DEF, empty_ok) == []


def test_submitted_at_requires_offset():
    with pytest.raises(ValueError):
        EmaResponse(
            participant="P000",
            date=WEEK_START,
            window=MORNING,
            submitted_at=datetime(2024, 3, 4, 8, 0),  # naive
        )


# ---------------------------------------------------------------------------
# week assembly
# ---------------------------------------------------------------------------


def _one_per_slot():
    out = []
    for d in range(7):
        for w in (MORNING, AFTERNOON, EVENING):
            out.append(
                make_response(day=WEEK_START + timedelta(days=d), window=w,
                              answers={"emo-happy": Magnitude(d)})
            )
    return out


def test_full_compliance_week():
    week = build_week_dataset(_one_per_slot(), WEEK_START, datetime(2024, 3, 12, 0, 0))
    assert week.counts() == {"completed": 21, "missed": 0, "pending": 0}


def test_empty_week_mid_day_three_matches_oracle():
    now = datetime(2024, 3, 6, 13, 30)  # Wednesday 13:30, mid-afternoon window
    week = build_week_dataset([], WEEK_START, now, participant="P000")
    states = [s.state for s in week.slots]
    assert states == oracle_slot_states([], WEEK_START, now)
    # days 0-1 fully closed; Wednesday morning closed, afternoon open
    assert states[:7] == ["missed"] * 7
    assert states[7] == "pending"  # Wednesday afternoon (still open)
    assert week.counts()["missed"] == 7


def test_latest_revision_wins():
    first = make_response(day=WEEK_START + timedelta(days=2), window=MORNING,
                          answers={"emo-happy": Magnitude(1)}, revision=1)
    second = make_response(day=WEEK_START + timedelta(days=2), window=MORNING,
                           answers={"emo-happy": Magnitude(9)}, revision=2)
    week = build_week_dataset([first, second], WEEK_START, datetime(2024, 3, 12, 0, 0))
    slot = week.slot(2, MORNING)
    assert slot.state == "completed"
    assert slot.response.answers["emo-happy"] == Magnitude(9)


def test_permutation_invariance():
    responses = _one_per_slot()
    extra = make_response(day=WEEK_START, window=MORNING, answers={"emo-sad": Magnitude(5)}, revision=2)
    responses.append(extra)
    now = datetime(2024, 3, 12, 0, 0)
    base = build_week_dataset(responses, WEEK_START, now)
    rnd = random.Random(9)
    for _ in range(10):
        shuffled = responses[:]
        rnd.shuffle(shuffled)
        assert build_week_dataset(shuffled, WEEK_START, now) == base


def test_mixed_participants_rejected():
    responses = [make_response(participant="P000"), make_response(participant="P001", window=AFTERNOON)]
    with pytest.raises(ValueError):
        build_week_dataset(responses, WEEK_START, datetime(2024, 3, 12, 0, 0))


def test_out_of_week_responses_ignored():
    stray = make_response(day=WEEK_START + timedelta(days=9))
    week = build_week_dataset([stray], WEEK_START, datetime(2024, 3, 12, 0, 0), participant="P000")
    assert week.counts()["completed"] == 0


def test_slot_algebra_randomized_small():
    rnd = random.Random(7)
    base = _one_per_slot()
    for _ in range(100):
        responses = [r for r in base if rnd.random() < 0.5]
        now = datetime(2024, 3, 3, 0, 0) + timedelta(minutes=rnd.randrange(0, 12 * 24 * 60))
        week = build_week_dataset(responses, WEEK_START, now, participant="P000")
        counts = week.counts()
        assert sum(counts.values()) == 21
        assert [s.state for s in week.slots] == oracle_slot_states(responses, WEEK_START, now)
        if now >= datetime(2024, 3, 10, 22, 0):
            assert counts["pending"] == 0


def test_aware_now_converted_with_tz():
    from zoneinfo import ZoneInfo

    # 18:00 UTC on Monday = 10:00 local in Vancouver: morning window still open
    now = datetime(2024, 3, 4, 18, 0, tzinfo=timezone.utc)
    week = build_week_dataset([], WEEK_START, now, tz=ZoneInfo("America/Vancouver"), participant="P000")
    assert week.slot(0, MORNING).state == "pending"
    # same instant interpreted as UTC wall clock: morning closed
    week_utc = build_week_dataset([], WEEK_START, now, participant="P000")
    assert week_utc.slot(0, MORNING).state == "missed"


def test_response_json_round_trip():
    r = make_response(
        answers={
            "sleep-bed": Clock(ClockTime.parse("23:15")),
            "sleep-quality": OrdinalLevel(2),
            "sym-types": CategorySet(("headache", "other")),
            "sym-other-note": Text('it\'s a "weird" ache, really'),
            "sym-medication": Flag(True),
            "emo-happy": Magnitude(0),
        }
    )
    assert response_from_json(response_to_json(r)) == r


def test_wire_payloads_validate_against_shipped_schemas(full_responses):
    import json
    from pathlib import Path

    import jsonschema

    schema_dir = Path(__file__).parent.parent / "docs" / "schemas"
    response_schema = json.loads((schema_dir / "ema-response.schema.json").read_text())
    definition_schema = json.loads((schema_dir / "survey-definition.schema.json").read_text())
    for r in full_responses:
        jsonschema.validate(response_to_json(r), response_schema)
    jsonschema.validate(definition_to_json(DEF), definition_schema)
