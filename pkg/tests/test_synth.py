from __future__ import annotations

import json
from datetime import datetime, timedelta

import numpy as np
import pytest

from helpers import AFTERNOON, EVENING, MORNING, WEEK_START
from weeklens.model import (
    OrdinalLevel,
    build_week_dataset,
    default_survey_definition,
    response_to_json,
    validate_response,
)
from weeklens.scheduling import classify_profile
from weeklens.synth import (
    ComplianceProfile,
    SyntheticPersona,
    generate_cohort,
    generate_week,
)

DEF = default_survey_definition()
NOW_AFTER = datetime(2024, 3, 12, 0, 0)


def _serialize(responses) -> bytes:
    return json.dumps([response_to_json(r) for r in responses]).encode("utf-8")


def test_full_profile_answers_everything():
    responses = generate_week(3, SyntheticPersona(), ComplianceProfile.full(), WEEK_START,
                              question_dropout=0.0)
    assert len(responses) == 21
    for r in responses:
        for q in DEF.questions_for(r.window):
            if q.required:
                assert q.qid in r.answers, (r.window, q.qid)


def test_determinism_byte_streams():
    for profile in (ComplianceProfile.full(), ComplianceProfile.minimal(),
                    ComplianceProfile.binger(3), ComplianceProfile.random(0.6)):
        a = generate_week(11, SyntheticPersona(), profile, WEEK_START)
        b = generate_week(11, SyntheticPersona(), profile, WEEK_START)
        assert _serialize(a) == _serialize(b)


def test_different_seeds_differ():
    a = generate_week(1, SyntheticPersona(), ComplianceProfile.full(), WEEK_START)
    b = generate_week(2, SyntheticPersona(), ComplianceProfile.full(), WEEK_START)
    assert _serialize(a) != _serialize(b)


def test_every_response_validates():
    for seed, profile in ((5, ComplianceProfile.full()), (6, ComplianceProfile.minimal()),
                          (7, ComplianceProfile.binger(2)), (8, ComplianceProfile.random(0.7))):
        for r in generate_week(seed, SyntheticPersona(), profile, WEEK_START):
            assert validate_response(DEF, r) == [], (seed, profile.kind)


def test_binger_reproduces_classifier_vocabulary():
    responses = generate_week(9, SyntheticPersona(), ComplianceProfile.binger(3), WEEK_START)
    days = {r.date for r in responses}
    assert days == {WEEK_START + timedelta(days=d) for d in range(3)}
    week = build_week_dataset(responses, WEEK_START, NOW_AFTER)
    assert classify_profile(week) == "binger"


def test_minimal_completer_reproduces_classifier_vocabulary():
    responses = generate_week(10, SyntheticPersona(), ComplianceProfile.minimal(), WEEK_START)
    week = build_week_dataset(responses, WEEK_START, NOW_AFTER)
    assert classify_profile(week) == "minimal-completer"


def test_full_profile_classifies_full():
    responses = generate_week(12, SyntheticPersona(), ComplianceProfile.full(), WEEK_START)
    week = build_week_dataset(responses, WEEK_START, NOW_AFTER)
    assert classify_profile(week) == "full"


def test_question_dropout_produces_partial_responses():
    responses = generate_week(13, SyntheticPersona(), ComplianceProfile.random(1.0), WEEK_START,
                              question_dropout=0.3)
    asked = sum(len([q for q in DEF.questions_for(r.window) if q.required]) for r in responses)
    answered = sum(len(r.answers) for r in responses)
    assert answered < asked


def test_submitted_at_falls_inside_window():
    open_hours = {MORNING: (7, 12), AFTERNOON: (12, 17), EVENING: (17, 22)}
    for r in generate_week(14, SyntheticPersona(), ComplianceProfile.full(), WEEK_START):
        lo, hi = open_hours[r.window]
        assert lo <= r.submitted_at.hour < hi
        assert r.submitted_at.tzinfo is not None


def test_coupled_sleep_symptom_signal():
    # zero noise, strong coupling: inverted sleep quality must track intensity
    persona = SyntheticPersona(noise_scale=0.0, sleep_symptom_coupling=0.9,
                               sleep_jitter_minutes=150.0)
    responses = generate_week(21, persona, ComplianceProfile.full(), WEEK_START,
                              question_dropout=0.0)
    inverted_quality, intensity = [], []
    for d in range(7):
        day = WEEK_START + timedelta(days=d)
        morning = next(r for r in responses if r.date == day and r.window == MORNING)
        q = morning.answers["sleep-quality"]
        assert isinstance(q, OrdinalLevel)
        inverted_quality.append(3 - q.index)
        todays = [r.answers["sym-intensity"].value for r in responses if r.date == day]
        intensity.append(float(np.mean(todays)))
    assert np.std(inverted_quality) > 0, "need quality variance for the correlation to exist"
    r = float(np.corrcoef(inverted_quality, intensity)[0, 1])
    assert r > 0.5


def test_cohort_counterbalancing_and_reproducibility():
    cohort = generate_cohort(44, seed=7)
    orders = [m.plan.order for m in cohort]
    assert orders.count("AB") == 22 and orders.count("BA") == 22
    assert [m.participant for m in cohort[:3]] == ["P000", "P001", "P002"]

    single = generate_cohort(1, seed=7)
    assert single[0].plan.order == "AB"

    again = generate_cohort(44, seed=7)
    assert [_serialize(m.responses) for m in again] == [_serialize(m.responses) for m in cohort]


def test_cohort_members_have_no_washout_responses():
    cohort = generate_cohort(6, seed=3)
    for m in cohort:
        washout = m.plan.weeks[1]
        for r in m.responses:
            assert not washout.contains(r.date)
        assert all(validate_response(DEF, r) == [] for r in m.responses)


def test_profile_validation():
    with pytest.raises(ValueError):
        ComplianceProfile.binger(0)
    with pytest.raises(ValueError):
        ComplianceProfile.binger(7)
    with pytest.raises(ValueError):
        ComplianceProfile.random(1.5)
    with pytest.raises(ValueError):
        SyntheticPersona(sleep_symptom_coupling=1.5)
    with pytest.raises(ValueError):
        SyntheticPersona(symptom_propensity=(0.5,))
