"""HTTP service: survey delivery, response intake, dashboard, exports.

Authentication is a bearer study code (the participant's opaque identifier);
there are no accounts and no other personal fields anywhere in the API. The
dashboard is only served for weeks whose study condition includes it, which
keeps the crossover design honest at the API boundary.

Every successful survey fetch, submission, and dashboard view appends one
event record, so post-hoc forensics can reconstruct what a participant
actually saw and did.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from datetime import date, datetime, timedelta, timezone
from pathlib import Path
from typing import Callable, Optional

from fastapi import Depends, FastAPI, Header, HTTPException, Query, Request
from fastapi.responses import JSONResponse, Response

from .model import (
    WINDOWS,
    SurveyDefinition,
    default_survey_definition,
    definition_from_json,
    definition_to_json,
    local_wall_clock,
    question_to_json,
    response_from_json,
    validate_response,
    window_close_at,
    window_open_at,
)
from .render import Theme, default_theme, render_dashboard, theme_from_json
from .scheduling import ReminderPolicy, StudyPlan, plan_from_json, policy_from_json
from .store import EventRecord, Store

ENV_LISTEN = "WEEKLENS_LISTEN"
ENV_DATA = "WEEKLENS_DATA"


@dataclass
class ServiceConfig:
    listen: str = "127.0.0.1:8787"
    data_file: str = "weeklens-data.log"
    survey_definition: str = "builtin"  # path or "builtin"
    reminder_policy: str | dict = "builtin"
    week_start_weekday: int = 0
    theme: str = "builtin"
    study_codes: list[str] = field(default_factory=list)
    plans: str | list | None = None
    web_root: Optional[str] = None

    def __post_init__(self) -> None:
        if len(set(self.study_codes)) != len(self.study_codes):
            raise ValueError("study codes must be unique")

    @property
    def host_port(self) -> tuple[str, int]:
        host, _, port = self.listen.rpartition(":")
        return host or "127.0.0.1", int(port)


def load_config(path: str | os.PathLike) -> ServiceConfig:
    """Read a config file, honouring the listen/data env-var overrides."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    cfg = ServiceConfig(**raw)
    cfg.listen = os.environ.get(ENV_LISTEN, cfg.listen)
    cfg.data_file = os.environ.get(ENV_DATA, cfg.data_file)
    # fail fast on unreadable companion files
    for candidate in (cfg.survey_definition, cfg.theme):
        if candidate != "builtin" and not Path(candidate).is_file():
            raise FileNotFoundError(f"config references missing file: {candidate}")
    if isinstance(cfg.plans, str) and not Path(cfg.plans).is_file():
        raise FileNotFoundError(f"config references missing plans file: {cfg.plans}")
    return cfg


def _load_definition(cfg: ServiceConfig) -> SurveyDefinition:
    if cfg.survey_definition == "builtin":
        return default_survey_definition()
    return definition_from_json(json.loads(Path(cfg.survey_definition).read_text(encoding="utf-8")))


def _load_theme(cfg: ServiceConfig) -> Theme:
    if cfg.theme == "builtin":
        return default_theme()
    return theme_from_json(json.loads(Path(cfg.theme).read_text(encoding="utf-8")))


def _load_policy(cfg: ServiceConfig) -> ReminderPolicy:
    if cfg.reminder_policy == "builtin":
        return ReminderPolicy()
    if isinstance(cfg.reminder_policy, dict):
        return policy_from_json(cfg.reminder_policy)
    return policy_from_json(json.loads(Path(cfg.reminder_policy).read_text(encoding="utf-8")))


def load_plans(cfg: ServiceConfig) -> list[StudyPlan]:
    if cfg.plans is None:
        return []
    if isinstance(cfg.plans, str):
        raw = json.loads(Path(cfg.plans).read_text(encoding="utf-8"))
    else:
        raw = cfg.plans
    return [plan_from_json(p) for p in raw]


def utc_now() -> datetime:
    return datetime.now(timezone.utc)


def create_app(
    config: ServiceConfig,
    store: Store,
    clock: Callable[[], datetime] = utc_now,
) -> FastAPI:
    """Build the API around an open store; `clock` is injectable for tests."""
    definition = _load_definition(config)
    theme = _load_theme(config)
    policy = _load_policy(config)
    codes = set(config.study_codes)
    app = FastAPI(title="weeklens", version="0.1.0", docs_url=None, redoc_url=None)

    from fastapi.exceptions import RequestValidationError

    @app.exception_handler(RequestValidationError)
    async def _bad_request(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"errors": [{"message": str(exc.errors())}]})

    def authed(authorization: Optional[str] = Header(default=None)) -> str:
        code = None
        if authorization is not None and authorization.startswith("Bearer "):
            code = authorization.removeprefix("Bearer ").strip()
        if code is None or code not in codes:
            masked = (code or "")[:4] + "…" if code else "missing"
            store.put_event(EventRecord("unknown", clock(), "LoginFailed", detail=masked))
            raise HTTPException(status_code=401, detail="unknown study code")
        return code

    def plan_for(participant: str) -> StudyPlan:
        plan = store.plan(participant)
        if plan is None:
            raise HTTPException(status_code=404, detail="no study plan on file")
        return plan

    @app.get("/api/survey/current")
    def survey_current(participant: str = Depends(authed)):
        plan = plan_for(participant)
        local_now = local_wall_clock(clock(), plan.tzinfo)
        week = plan.week_for(local_now.date())
        if week is not None and week.kind == "washout":
            raise HTTPException(status_code=409, detail="washout week: no surveys scheduled")

        today = local_now.date()
        for w in WINDOWS:
            if window_open_at(today, w, policy.hours) <= local_now < window_close_at(today, w, policy.hours):
                if week is None:
                    break  # outside the study: nothing to ask
                store.put_event(
                    EventRecord(participant, clock(), "SurveyOpened", detail=f"{today} {w.label}")
                )
                return {
                    "status": "open",
                    "window": w.label,
                    "date": today.isoformat(),
                    "closes_at": window_close_at(today, w, policy.hours).isoformat(),
                    "definition_version": definition.version,
                    "questions": [question_to_json(q) for q in definition.questions_for(w)],
                }

        next_open = _next_window_open(plan, policy, local_now)
        store.put_event(EventRecord(participant, clock(), "SurveyOpened", detail="no-window"))
        return {
            "status": "no-window-open",
            "next_open": next_open.isoformat() if next_open else None,
        }

    @app.post("/api/responses")
    def submit_response(body: dict, participant: str = Depends(authed)):
        try:
            response = response_from_json(body)
        except (KeyError, ValueError, TypeError) as exc:
            return JSONResponse(status_code=400, content={"errors": [{"message": f"malformed response: {exc}"}]})
        if response.participant != participant:
            return JSONResponse(
                status_code=400,
                content={"errors": [{"message": "participant does not match study code"}]},
            )
        errors = validate_response(definition, response)
        if errors:
            return JSONResponse(
                status_code=400,
                content={"errors": [{"qid": e.qid, "code": e.code, "message": e.message} for e in errors]},
            )
        revision = store.put_response(response)
        store.put_event(
            EventRecord(
                participant,
                clock(),
                "ResponseSubmitted",
                detail=f"{response.date.isoformat()}/{response.window.label} rev{revision}",
            )
        )
        return {"revision": revision}

    def _gated_week(participant: str, week: str) -> date:
        try:
            week_start = date.fromisoformat(week)
        except ValueError:
            raise HTTPException(status_code=400, detail="week must be YYYY-MM-DD") from None
        plan = plan_for(participant)
        for cw in plan.weeks:
            if cw.week_start == week_start and cw.kind == "ema-plus-viz":
                return week_start
        raise HTTPException(status_code=403, detail="dashboard is not available for this week")

    @app.get("/api/dashboard.svg")
    def dashboard_svg(week: str = Query(...), participant: str = Depends(authed)):
        week_start = _gated_week(participant, week)
        dataset = store.get_week(participant, week_start, clock())
        rendered = render_dashboard(dataset, theme, definition)
        store.put_event(EventRecord(participant, clock(), "DashboardViewed", detail=week))
        return Response(
            content=rendered.svg,
            media_type="image/svg+xml",
            headers={"Cache-Control": "no-store"},
        )

    @app.get("/api/dashboard/layout.json")
    def dashboard_layout(week: str = Query(...), participant: str = Depends(authed)):
        week_start = _gated_week(participant, week)
        dataset = store.get_week(participant, week_start, clock())
        rendered = render_dashboard(dataset, theme, definition)
        return JSONResponse(content=rendered.layout_json(), headers={"Cache-Control": "no-store"})

    @app.get("/api/definition")
    def get_definition(participant: str = Depends(authed)):
        return definition_to_json(definition)

    if config.web_root:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=config.web_root, html=True), name="web")

    return app


def _next_window_open(plan: StudyPlan, policy: ReminderPolicy, local_now: datetime) -> Optional[datetime]:
    """Earliest upcoming window-open inside a surveyed (non-washout) week."""
    for offset in range(0, 22):  # covers the whole 3-week plan from any point
        day = local_now.date() + timedelta(days=offset)
        week = plan.week_for(day)
        if week is None or week.kind == "washout":
            continue
        for w in WINDOWS:
            opens = window_open_at(day, w, policy.hours)
            if opens > local_now:
                return opens
    return None
