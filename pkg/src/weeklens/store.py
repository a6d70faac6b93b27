"""Durable single-file store for responses, plans, and interaction events.

The on-disk format is an append-only log of framed JSON records:

    [4-byte big-endian payload length][4-byte big-endian CRC32][payload]

A record is only trusted if its full frame is present and the CRC matches;
scanning stops at the first short or corrupt frame, so a write interrupted by
a crash simply vanishes instead of poisoning the file. Nothing is ever
rewritten in place, which keeps the full revision history of every slot
available for audit.

Scale target is a single desk-size study (tens of participants), so the
index lives in memory and is rebuilt by one sequential scan at open.
"""

from __future__ import annotations

import csv
import io
import json
import os
import struct
import threading
import zlib
from dataclasses import dataclass, field
from datetime import date, datetime, timedelta
from pathlib import Path
from typing import Literal, Optional

from .model import (
    EmaResponse,
    SurveyWindow,
    WeekDataset,
    WindowHours,
    DEFAULT_WINDOW_HOURS,
    answer_value_from_json,
    answer_value_to_json,
    build_week_dataset,
    response_from_json,
    response_to_json,
    with_revision,
)
from .scheduling import StudyPlan, plan_from_json, plan_to_json

_FRAME_HEADER = struct.Struct(">II")  # payload length, crc32

EventKind = Literal[
    "ResponseSubmitted", "DashboardViewed", "SurveyOpened", "ReminderSent", "LoginFailed"
]

EVENT_KINDS: tuple[EventKind, ...] = (
    "ResponseSubmitted",
    "DashboardViewed",
    "SurveyOpened",
    "ReminderSent",
    "LoginFailed",
)


@dataclass(frozen=True)
class EventRecord:
    participant: str
    at: datetime
    kind: EventKind
    detail: str = ""

    def __post_init__(self) -> None:
        if self.kind not in EVENT_KINDS:
            raise ValueError(f"unknown event kind: {self.kind}")
        if self.at.tzinfo is None:
            raise ValueError("event timestamps must carry a timezone offset")


def event_to_json(e: EventRecord) -> dict:
    return {"participant": e.participant, "at": e.at.isoformat(), "kind": e.kind, "detail": e.detail}


def event_from_json(obj: dict) -> EventRecord:
    return EventRecord(
        participant=str(obj["participant"]),
        at=datetime.fromisoformat(obj["at"]),
        kind=obj["kind"],
        detail=str(obj.get("detail", "")),
    )


class StorageError(Exception):
    """A write could not be made durable; never swallowed."""


class UnknownParticipantError(KeyError):
    pass


def _encode_frame(payload: bytes) -> bytes:
    return _FRAME_HEADER.pack(len(payload), zlib.crc32(payload)) + payload


def scan_frames(raw: bytes) -> list[bytes]:
    """Decode every complete, checksummed frame; ignore a torn tail."""
    out = []
    pos = 0
    total = len(raw)
    while pos + _FRAME_HEADER.size <= total:
        length, crc = _FRAME_HEADER.unpack_from(raw, pos)
        start = pos + _FRAME_HEADER.size
        end = start + length
        if end > total:
            break  # torn write: header present, payload incomplete
        payload = raw[start:end]
        if zlib.crc32(payload) != crc:
            break  # corrupt or interleaved tail; trust nothing past here
        out.append(payload)
        pos = end
    return out


class Store:
    """Embedded event-log store. One writer at a time; reads are snapshots."""

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self._lock = threading.RLock()
        self._responses: list[EmaResponse] = []
        self._events: list[EventRecord] = []
        self._plans: dict[str, StudyPlan] = {}
        self._participants: set[str] = set()
        # revision counter per (participant, date, window)
        self._revisions: dict[tuple[str, date, SurveyWindow], int] = {}
        self._load()
        self._fh = open(self.path, "ab")

    def close(self) -> None:
        with self._lock:
            self._fh.close()

    def __enter__(self) -> "Store":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    # -- loading ------------------------------------------------------------

    def _load(self) -> None:
        if not self.path.exists():
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self.path.touch()
            return
        raw = self.path.read_bytes()
        for payload in scan_frames(raw):
            self._apply(json.loads(payload.decode("utf-8")))

    def _apply(self, record: dict) -> None:
        t = record.get("t")
        if t == "response":
            r = response_from_json(record["body"])
            self._responses.append(r)
            self._participants.add(r.participant)
            key = (r.participant, r.date, r.window)
            self._revisions[key] = max(self._revisions.get(key, 0), r.revision)
        elif t == "event":
            self._events.append(event_from_json(record["body"]))
        elif t == "plan":
            plan = plan_from_json(record["body"])
            self._plans[plan.participant] = plan
            self._participants.add(plan.participant)
        else:
            raise StorageError(f"unknown record type in log: {t!r}")

    def _append(self, record: dict) -> None:
        payload = json.dumps(record, separators=(",", ":"), sort_keys=True).encode("utf-8")
        frame = _encode_frame(payload)
        try:
            self._fh.write(frame)
            self._fh.flush()
            os.fsync(self._fh.fileno())
        except OSError as exc:
            raise StorageError(f"append to {self.path} failed: {exc}") from exc

    # -- writes -------------------------------------------------------------

    def put_response(self, r: EmaResponse) -> int:
        """Append a response; returns the assigned revision (1 + last for its slot)."""
        with self._lock:
            key = (r.participant, r.date, r.window)
            revision = self._revisions.get(key, 0) + 1
            stored = with_revision(r, revision)
            self._append({"t": "response", "body": response_to_json(stored)})
            self._responses.append(stored)
            self._participants.add(r.participant)
            self._revisions[key] = revision
            return revision

    def put_event(self, e: EventRecord) -> None:
        with self._lock:
            self._append({"t": "event", "body": event_to_json(e)})
            self._events.append(e)

    def put_plan(self, plan: StudyPlan) -> None:
        with self._lock:
            self._append({"t": "plan", "body": plan_to_json(plan)})
            self._plans[plan.participant] = plan
            self._participants.add(plan.participant)

    # -- reads --------------------------------------------------------------

    def participants(self) -> list[str]:
        with self._lock:
            return sorted(self._participants)

    def plan(self, participant: str) -> Optional[StudyPlan]:
        with self._lock:
            return self._plans.get(participant)

    def responses(self, participant: Optional[str] = None) -> list[EmaResponse]:
        with self._lock:
            if participant is None:
                return list(self._responses)
            return [r for r in self._responses if r.participant == participant]

    def events(self, participant: Optional[str] = None) -> list[EventRecord]:
        with self._lock:
            if participant is None:
                return list(self._events)
            return [e for e in self._events if e.participant == participant]

    def get_week(
        self,
        participant: str,
        week_start: date,
        now: datetime,
        *,
        hours: WindowHours = DEFAULT_WINDOW_HOURS,
    ) -> WeekDataset:
        with self._lock:
            if participant not in self._participants:
                raise UnknownParticipantError(participant)
            rows = [r for r in self._responses if r.participant == participant]
            plan = self._plans.get(participant)
        tz = plan.tzinfo if plan is not None else None
        return build_week_dataset(rows, week_start, now, hours=hours, tz=tz, participant=participant)


# ---------------------------------------------------------------------------
# Exports
# ---------------------------------------------------------------------------

CSV_HEADER = ["participant", "date", "window", "qid", "revision", "value", "submitted_at"]


def export_csv(
    store: Store,
    participant: Optional[str] = None,
    date_range: Optional[tuple[date, date]] = None,
) -> str:
    """One row per stored answer, RFC 4180 quoted, in a fixed deterministic order."""
    rows = []
    for r in store.responses(participant):
        if date_range is not None and not date_range[0] <= r.date <= date_range[1]:
            continue
        for qid, value in r.answers.items():
            rows.append(
                (
                    r.participant,
                    r.date.isoformat(),
                    r.window.label,
                    qid,
                    r.revision,
                    json.dumps(answer_value_to_json(value), sort_keys=True),
                    r.submitted_at.isoformat(),
                )
            )
    rows.sort(key=lambda row: (row[0], row[1], SurveyWindow.from_label(row[2]), row[3], row[4]))
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_MINIMAL, lineterminator="\r\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)
    return buf.getvalue()


def export_json(
    store: Store,
    participant: Optional[str] = None,
    date_range: Optional[tuple[date, date]] = None,
) -> str:
    """JSON export mirroring the CSV content (whole responses, all revisions)."""
    rows = []
    for r in store.responses(participant):
        if date_range is not None and not date_range[0] <= r.date <= date_range[1]:
            continue
        rows.append(response_to_json(r))
    rows.sort(key=lambda o: (o["participant"], o["date"], SurveyWindow.from_label(o["window"]), o["revision"]))
    return json.dumps({"responses": rows}, indent=2, sort_keys=True) + "\n"


def import_csv(text: str) -> list[EmaResponse]:
    """Rebuild responses from an export; inverse of export_csv up to ordering."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != CSV_HEADER:
        raise ValueError(f"unexpected CSV header: {header}")
    grouped: dict[tuple[str, str, str, int, str], dict[str, object]] = {}
    for row in reader:
        participant, day, window, qid, revision, value, submitted = row
        key = (participant, day, window, int(revision), submitted)
        grouped.setdefault(key, {})[qid] = answer_value_from_json(json.loads(value))
    out = []
    for (participant, day, window, revision, submitted), answers in sorted(grouped.items()):
        out.append(
            EmaResponse(
                participant=participant,
                date=date.fromisoformat(day),
                window=SurveyWindow.from_label(window),
                submitted_at=datetime.fromisoformat(submitted),
                answers=answers,  # type: ignore[arg-type]
                revision=revision,
            )
        )
    return out


# ---------------------------------------------------------------------------
# Forensics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TimelineEntry:
    at: datetime
    kind: EventKind
    detail: str


@dataclass
class ForensicReport:
    """Per-day event timeline for one participant-week, with view-gap flags."""

    participant: str
    week_start: date
    week_kind: Optional[str]
    days: dict[date, list[TimelineEntry]] = field(default_factory=dict)
    counts: dict[str, int] = field(default_factory=dict)
    never_viewed_dashboard: bool = False

    def to_text(self) -> str:
        lines = [f"forensic report: {self.participant} week of {self.week_start.isoformat()}"]
        lines.append(f"  condition: {self.week_kind or 'no plan on file'}")
        if self.never_viewed_dashboard:
            lines.append("  FLAG: dashboard week with zero DashboardViewed events")
        for day in sorted(self.days):
            lines.append(f"  {day.isoformat()}:")
            for entry in self.days[day]:
                lines.append(f"    {entry.at.isoformat()}  {entry.kind}  {entry.detail}")
        counts = ", ".join(f"{k}={v}" for k, v in sorted(self.counts.items()))
        lines.append(f"  totals: {counts or 'none'}")
        return "\n".join(lines)


def forensic_report(store: Store, participant: str, week_start: date) -> ForensicReport:
    plan = store.plan(participant)
    week = plan.week_for(week_start) if plan is not None else None
    week_end = week_start + timedelta(days=7)
    tz = plan.tzinfo if plan is not None else None

    days: dict[date, list[TimelineEntry]] = {}
    counts: dict[str, int] = {}
    for e in store.events(participant):
        local = e.at.astimezone(tz) if tz is not None else e.at
        day = local.date()
        if not week_start <= day < week_end:
            continue
        days.setdefault(day, []).append(TimelineEntry(e.at, e.kind, e.detail))
        counts[e.kind] = counts.get(e.kind, 0) + 1
    for entries in days.values():
        entries.sort(key=lambda t: t.at)

    flagged = week is not None and week.kind == "ema-plus-viz" and counts.get("DashboardViewed", 0) == 0
    return ForensicReport(
        participant=participant,
        week_start=week_start,
        week_kind=week.kind if week is not None else None,
        days=days,
        counts=counts,
        never_viewed_dashboard=flagged,
    )
