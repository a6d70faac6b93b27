"""Command line entry points: render, synth, validate, export, serve.

Exit codes: 0 success, 1 invalid input (parse/validation problems, messages
on stderr), 2 I/O failure (unreadable input, unwritable output).
"""

from __future__ import annotations

import argparse
import json
import sys
import threading
from datetime import date, datetime, timedelta, timezone
from pathlib import Path

from .model import (
    build_week_dataset,
    default_survey_definition,
    definition_from_json,
    response_from_json,
    response_to_json,
    validate_response,
)
from .render import default_theme, render_dashboard, theme_from_json
from .scheduling import RecordingNotifier, due_reminders, plan_to_json
from .service import create_app, load_config, load_plans
from .store import EventRecord, Store, export_csv, export_json
from .synth import generate_cohort, persona_to_json, profile_to_json

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2


def _fail(message: str, code: int) -> int:
    print(f"weeklens: {message}", file=sys.stderr)
    return code


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_responses(path: str) -> list:
    raw = json.loads(_read_text(path))
    if isinstance(raw, dict) and "responses" in raw:
        raw = raw["responses"]
    if not isinstance(raw, list):
        raise ValueError("expected a JSON list of responses")
    return [response_from_json(obj) for obj in raw]


def _load_definition(path: str | None):
    if path is None:
        return default_survey_definition()
    return definition_from_json(json.loads(_read_text(path)))


def cmd_render(args: argparse.Namespace) -> int:
    try:
        responses = _load_responses(args.infile)
        definition = _load_definition(args.definition)
        theme = theme_from_json(json.loads(_read_text(args.theme))) if args.theme else default_theme()
    except OSError as exc:
        return _fail(f"cannot read input: {exc}", EXIT_IO)
    except (ValueError, KeyError, TypeError) as exc:
        return _fail(f"invalid input: {exc}", EXIT_INVALID)

    problems = [e for r in responses for e in validate_response(definition, r)]
    if problems:
        for e in problems[:20]:
            print(f"weeklens: {e.qid}: {e.code}: {e.message}", file=sys.stderr)
        return EXIT_INVALID

    try:
        week_start = date.fromisoformat(args.week)
    except ValueError as exc:
        return _fail(f"invalid --week: {exc}", EXIT_INVALID)

    # historical render: everything in the requested week has closed
    now = datetime.combine(week_start + timedelta(days=7), datetime.min.time())
    try:
        week = build_week_dataset(responses, week_start, now)
    except ValueError as exc:
        return _fail(f"invalid input: {exc}", EXIT_INVALID)
    rendered = render_dashboard(week, theme, definition)
    try:
        Path(args.out).write_bytes(rendered.svg.encode("utf-8"))
        if args.layout_json:
            Path(args.layout_json).write_text(rendered.layout_json_text(), encoding="utf-8")
    except OSError as exc:
        return _fail(f"cannot write output: {exc}", EXIT_IO)
    return EXIT_OK


def cmd_synth(args: argparse.Namespace) -> int:
    try:
        start = date.fromisoformat(args.start)
        cohort = generate_cohort(args.n, args.seed, start_date=start, tz=args.tz)
    except ValueError as exc:
        return _fail(f"invalid parameters: {exc}", EXIT_INVALID)
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        for member in cohort:
            pdir = out_dir / member.participant
            pdir.mkdir(exist_ok=True)
            (pdir / "plan.json").write_text(
                json.dumps(plan_to_json(member.plan), indent=2) + "\n", encoding="utf-8"
            )
            (pdir / "persona.json").write_text(
                json.dumps(persona_to_json(member.persona), indent=2) + "\n", encoding="utf-8"
            )
            (pdir / "profile.json").write_text(
                json.dumps(profile_to_json(member.profile), indent=2) + "\n", encoding="utf-8"
            )
            (pdir / "responses.json").write_text(
                json.dumps([response_to_json(r) for r in member.responses], indent=2) + "\n",
                encoding="utf-8",
            )
    except OSError as exc:
        return _fail(f"cannot write fixtures: {exc}", EXIT_IO)
    print(f"wrote {len(cohort)} participants to {out_dir}")
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        responses = _load_responses(args.infile)
        definition = _load_definition(args.definition)
    except OSError as exc:
        return _fail(f"cannot read input: {exc}", EXIT_IO)
    except (ValueError, KeyError, TypeError) as exc:
        return _fail(f"invalid input: {exc}", EXIT_INVALID)
    problems = [(r, e) for r in responses for e in validate_response(definition, r)]
    if problems:
        for r, e in problems[:50]:
            print(
                f"weeklens: {r.participant} {r.date} {r.window.label}: {e.qid}: {e.code}",
                file=sys.stderr,
            )
        return EXIT_INVALID
    print(f"{len(responses)} responses valid")
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    date_range = None
    try:
        if args.date_from or args.date_to:
            lo = date.fromisoformat(args.date_from) if args.date_from else date.min
            hi = date.fromisoformat(args.date_to) if args.date_to else date.max
            date_range = (lo, hi)
    except ValueError as exc:
        return _fail(f"invalid date: {exc}", EXIT_INVALID)
    try:
        with Store(args.data) as store:
            text = (
                export_csv(store, args.participant, date_range)
                if args.format == "csv"
                else export_json(store, args.participant, date_range)
            )
    except OSError as exc:
        return _fail(f"cannot open store: {exc}", EXIT_IO)
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            return _fail(f"cannot write output: {exc}", EXIT_IO)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _reminder_loop(store: Store, plans, policy, stop: threading.Event, interval: float = 60.0) -> None:
    notifier = RecordingNotifier(sink=sys.stderr)
    while not stop.wait(interval):
        now = datetime.now(timezone.utc)
        for plan in plans:
            emitted = {e.detail for e in store.events(plan.participant) if e.kind == "ReminderSent"}
            responses = store.responses(plan.participant)
            for event in due_reminders(plan, policy, responses, now, emitted):
                notifier.deliver(event)
                store.put_event(EventRecord(plan.participant, now, "ReminderSent", detail=event.key))


def cmd_serve(args: argparse.Namespace) -> int:
    try:
        config = load_config(args.config)
    except OSError as exc:
        return _fail(f"cannot read config: {exc}", EXIT_IO)
    except (ValueError, KeyError, TypeError) as exc:
        return _fail(f"invalid config: {exc}", EXIT_INVALID)

    import uvicorn

    from .service import _load_policy

    store = Store(config.data_file)
    for plan in load_plans(config):
        if store.plan(plan.participant) is None:
            store.put_plan(plan)
    app = create_app(config, store)
    stop = threading.Event()
    plans = [store.plan(p) for p in store.participants() if store.plan(p) is not None]
    ticker = threading.Thread(
        target=_reminder_loop, args=(store, plans, _load_policy(config), stop), daemon=True
    )
    ticker.start()
    host, port = config.host_port
    try:
        uvicorn.run(app, host=host, port=port, log_level="warning")
    finally:
        stop.set()
        store.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weeklens", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("render", help="render a one-week dashboard SVG from responses")
    p.add_argument("--in", dest="infile", required=True, help="responses JSON file")
    p.add_argument("--week", required=True, help="week start date (YYYY-MM-DD)")
    p.add_argument("--out", required=True, help="output SVG path")
    p.add_argument("--theme", help="theme JSON file (default: builtin)")
    p.add_argument("--definition", help="survey definition JSON (default: builtin)")
    p.add_argument("--layout-json", help="also write the layout model JSON here")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("synth", help="generate a synthetic cohort")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--start", default="2024-03-04", help="study start date (a Monday)")
    p.add_argument("--tz", default="UTC")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("validate", help="validate a responses file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--definition")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("export", help="export stored responses")
    p.add_argument("--data", required=True, help="store file")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--participant")
    p.add_argument("--from", dest="date_from")
    p.add_argument("--to", dest="date_to")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("serve", help="run the HTTP service with the reminder loop")
    p.add_argument("--config", required=True)
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
