"""HTTP API over the pipeline, plus static hosting for the web UI."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .config import ConfigError, ServiceConfig, load_probe_fixtures
from .forms import FormCompileError, FormSchema, compile_form, derive_label, serialize_form_schema
from .payload import SubmissionPayload
from .rdf import TurtleParseError, iri, parse_turtle, serialize_turtle
from .shapes import ShapesGraph, load_shapes, resolve_inheritance
from .submission import (
    HttpTransport,
    MaterializationError,
    build_update,
    materialize,
    process_submission,
    submit,
)
from .validation import ValidationReport, ValidationResult, report_to_dict, validate
from .validators import (
    LiveResolverProbe,
    MockResolverProbe,
    ResolverProbe,
    ValidatorRegistry,
    default_registry,
    run_phase2,
)

_PREVIEW_SUBJECT = "urn:shaclforms:preview"


@dataclass
class ServiceState:
    config: ServiceConfig
    shapes: ShapesGraph
    schemas: dict[str, FormSchema]
    schema_bodies: dict[str, str] = field(default_factory=dict)
    registry: ValidatorRegistry = field(default_factory=default_registry)
    probe: ResolverProbe = field(default_factory=MockResolverProbe)


def build_state(config: ServiceConfig) -> ServiceState:
    """Load shapes and precompile every targetable form; refuse bad config."""
    try:
        text = Path(config.shapes_path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read shapes file: {exc}") from exc
    try:
        graph = parse_turtle(text)
    except TurtleParseError as exc:
        raise ConfigError(f"shapes file does not parse: {exc}") from exc
    shapes = resolve_inheritance(load_shapes(graph))

    schemas: dict[str, FormSchema] = {}
    bodies: dict[str, str] = {}
    for shape_id in sorted(shapes.shapes):
        shape = shapes.shapes[shape_id]
        if shape.target_class is None:
            continue
        try:
            schema = compile_form(shape, config.bindings, config.label_overrides)
        except FormCompileError as exc:
            raise ConfigError(f"cannot compile a form for <{shape_id}>: {exc}") from exc
        schemas[shape_id] = schema
        bodies[shape_id] = serialize_form_schema(schema)

    if config.probe.mode == "mock":
        probe: ResolverProbe = MockResolverProbe(load_probe_fixtures(config.probe.fixtures_path))
    else:
        probe = LiveResolverProbe()

    return ServiceState(
        config=config,
        shapes=shapes,
        schemas=schemas,
        schema_bodies=bodies,
        probe=probe,
    )


# -- handlers (pure, HTTP-agnostic) -------------------------------------------


def handle_list_forms(state: ServiceState) -> list[dict]:
    return [
        {
            "shape_id": shape_id,
            "target_class": state.schemas[shape_id].target_class,
            "label": derive_label(state.schemas[shape_id].target_class, state.config.label_overrides),
        }
        for shape_id in sorted(state.schemas)
    ]


def handle_get_form(state: ServiceState, shape_id: str) -> str | None:
    return state.schema_bodies.get(shape_id)


def _materialization_report(subject: str, message: str) -> ValidationReport:
    return ValidationReport(
        [
            ValidationResult(
                focus_node=iri(subject),
                result_path=None,
                component="materialization",
                offending_value=None,
                message=message,
                severity="violation",
                phase="custom",
            )
        ]
    )


def handle_validate(state: ServiceState, payload: SubmissionPayload) -> ValidationReport:
    """Phase 1 plus syntactic-mode validators only; no probes, no state change."""
    schema = state.schemas[payload.shape_id]
    try:
        graph = materialize(payload, schema, _PREVIEW_SUBJECT)
    except MaterializationError as exc:
        return _materialization_report(_PREVIEW_SUBJECT, str(exc))
    phase1 = validate(graph, state.shapes)
    syntactic = [
        b
        for b in state.config.bindings
        if b.shape_id == payload.shape_id and b.mode == "syntactic"
    ]
    phase2 = run_phase2(payload, syntactic, state.registry, probe=None)
    return ValidationReport(phase1.results + phase2)


def create_app(config: ServiceConfig) -> FastAPI:
    state = build_state(config)
    app = FastAPI(title="shaclforms", version="0.1.0")
    app.state.ctx = state

    @app.get("/api/forms")
    def list_forms() -> JSONResponse:
        return JSONResponse(handle_list_forms(state))

    @app.get("/api/forms/{shape_id:path}")
    def get_form(shape_id: str) -> Response:
        body = handle_get_form(state, shape_id)
        if body is None:
            return JSONResponse({"error": f"unknown shape {shape_id!r}"}, status_code=404)
        return Response(content=body, media_type="application/json")

    async def _read_payload(request: Request) -> SubmissionPayload | JSONResponse:
        try:
            document = await request.json()
        except Exception as exc:
            return JSONResponse({"error": f"request body is not valid JSON: {exc}"}, status_code=400)
        try:
            payload = SubmissionPayload.from_dict(document)
        except ValueError as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)
        if payload.shape_id not in state.schemas:
            return JSONResponse({"error": f"unknown shape {payload.shape_id!r}"}, status_code=404)
        return payload

    @app.post("/api/validate")
    async def validate_payload(request: Request) -> JSONResponse:
        payload = await _read_payload(request)
        if isinstance(payload, JSONResponse):
            return payload
        report = handle_validate(state, payload)
        return JSONResponse(report_to_dict(report))

    @app.post("/api/submit")
    async def submit_payload(request: Request) -> JSONResponse:
        payload = await _read_payload(request)
        if isinstance(payload, JSONResponse):
            return payload
        outcome = process_submission(
            payload,
            state.schemas[payload.shape_id],
            state.shapes,
            state.config.bindings,
            state.probe,
            state.config.minting,
            state.registry,
        )
        if not outcome.accepted:
            return JSONResponse(report_to_dict(outcome.report), status_code=422)
        turtle = serialize_turtle(outcome.graph)
        accepted = {"iri": outcome.subject, "turtle": turtle}
        if state.config.endpoint_url:
            update = build_update(outcome.graph)
            result = submit(state.config.endpoint_url, update, HttpTransport())
            if not result.ok:
                return JSONResponse(
                    {
                        "error": "the triplestore endpoint rejected the update",
                        "status": result.status,
                        "body": result.body,
                        **accepted,
                    },
                    status_code=502,
                )
        return JSONResponse(accepted)

    if config.static_dir and Path(config.static_dir).is_dir():
        app.mount("/", StaticFiles(directory=config.static_dir, html=True), name="static")

    return app
