"""Command line interface: serve, compile-form, validate, submit."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .config import ConfigError, ServiceConfig, load_config, load_probe_fixtures
from .payload import SubmissionPayload
from .rdf import TurtleParseError, parse_turtle, serialize_turtle
from .service import build_state
from .shapes import InheritanceCycleError
from .submission import HttpTransport, build_update, process_submission, submit
from .validation import report_to_json, validate
from .validators import LiveResolverProbe, MockResolverProbe, ResolverProbe

EXIT_OK = 0
EXIT_NONCONFORMING = 1
EXIT_USAGE = 2


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _make_probe(config: ServiceConfig) -> ResolverProbe:
    if config.probe.mode == "mock":
        return MockResolverProbe(load_probe_fixtures(config.probe.fixtures_path))
    return LiveResolverProbe()


def _cmd_serve(config: ServiceConfig) -> int:
    import uvicorn

    from .service import create_app

    listen = os.environ.get("SHACLFORMS_LISTEN")
    if listen:
        config.listen_address = listen
    host, port = config.listen_host_port()
    uvicorn.run(create_app(config), host=host, port=port, log_level="info")
    return EXIT_OK


def _cmd_compile_form(config: ServiceConfig, shape_id: str) -> int:
    state = build_state(config)
    body = state.schema_bodies.get(shape_id)
    if body is None:
        return _fail(f"unknown shape {shape_id!r}")
    print(body, end="")
    return EXIT_OK


def _cmd_validate(config: ServiceConfig, data_path: str) -> int:
    try:
        text = Path(data_path).read_text(encoding="utf-8")
    except OSError as exc:
        return _fail(f"cannot read data file: {exc}")
    try:
        graph = parse_turtle(text)
    except TurtleParseError as exc:
        return _fail(f"data file does not parse: {exc}")
    state = build_state(config)
    report = validate(graph, state.shapes)
    print(report_to_json(report), end="")
    return EXIT_OK if report.conforms else EXIT_NONCONFORMING


def _cmd_submit(config: ServiceConfig, payload_path: str, dry_run: bool, out: str) -> int:
    try:
        document = json.loads(Path(payload_path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        return _fail(f"cannot read payload file: {exc}")
    try:
        payload = SubmissionPayload.from_dict(document)
    except ValueError as exc:
        return _fail(str(exc))
    state = build_state(config)
    schema = state.schemas.get(payload.shape_id)
    if schema is None:
        return _fail(f"unknown shape {payload.shape_id!r}")
    outcome = process_submission(
        payload, schema, state.shapes, config.bindings, _make_probe(config), config.minting
    )
    if not outcome.accepted:
        print(report_to_json(outcome.report), end="")
        return EXIT_NONCONFORMING

    turtle = serialize_turtle(outcome.graph)
    if dry_run or not config.endpoint_url:
        if out == "-":
            print(f"# minted: {outcome.subject}")
            print(turtle, end="")
        else:
            Path(out).write_text(turtle, encoding="utf-8")
            print(f"minted {outcome.subject}, wrote {out}")
        return EXIT_OK
    update = build_update(outcome.graph)
    result = submit(config.endpoint_url, update, HttpTransport())
    if not result.ok:
        print(f"endpoint submission failed (status {result.status}): {result.body}", file=sys.stderr)
        print(turtle, end="")
        return EXIT_NONCONFORMING
    print(f"accepted and submitted: {outcome.subject}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="shaclforms",
        description="SHACL-driven forms, two-phase validation, and RDF submission.",
    )
    parser.add_argument("--config", default="config.json", help="path to the service config file")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("serve", help="run the HTTP service")

    compile_p = sub.add_parser("compile-form", help="print the form schema for a shape")
    compile_p.add_argument("shape_id")

    validate_p = sub.add_parser("validate", help="validate a Turtle data file against the shapes")
    validate_p.add_argument("data_path")

    submit_p = sub.add_parser("submit", help="run a payload through the full pipeline")
    submit_p.add_argument("payload_path")
    submit_p.add_argument("--dry-run", action="store_true", help="print Turtle instead of submitting")
    submit_p.add_argument("--out", default="-", help="write dry-run Turtle to this file")

    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        if args.command == "serve":
            return _cmd_serve(config)
        if args.command == "compile-form":
            return _cmd_compile_form(config, args.shape_id)
        if args.command == "validate":
            return _cmd_validate(config, args.data_path)
        if args.command == "submit":
            return _cmd_submit(config, args.payload_path, args.dry_run, args.out)
    except (ConfigError, InheritanceCycleError) as exc:
        return _fail(str(exc))
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
