"""End-to-end flow: payload, two-phase validation, RDF, triplestore update."""

from __future__ import annotations

import re
import threading
import uuid
from dataclasses import dataclass
from pathlib import Path

import requests

from .forms import FormSchema
from .payload import SubmissionPayload
from .rdf import Graph, Triple, iri, literal, parse_turtle, render_term, serialize_turtle, sorted_triples, validate_lexical
from .rdf.namespaces import RDF, XSD, XSD_STRING
from .shapes import ShapesGraph
from .validation import ValidationReport, ValidationResult, validate
from .validators import ResolverProbe, ValidatorBinding, ValidatorRegistry, default_registry, run_phase2

_ABSOLUTE_IRI = re.compile(r"[A-Za-z][A-Za-z0-9+.\-]*:")


class MaterializationError(Exception):
    pass


class MintingError(Exception):
    pass


@dataclass
class MintingConfig:
    base_iri: str
    strategy: str = "uuid"  # "uuid" | "counter"
    counter_state_path: str | None = None


_counter_lock = threading.Lock()


def mint_iri(config: MintingConfig) -> str:
    """A fresh absolute IRI under the configured base.

    The counter strategy persists its last value in a state file and pads to
    six digits; the uuid strategy appends 128 random bits in hex.
    """
    base = config.base_iri
    if not base.endswith(("/", "#")):
        base += "/"
    if config.strategy == "uuid":
        return base + uuid.uuid4().hex
    if config.strategy != "counter":
        raise MintingError(f"unknown minting strategy {config.strategy!r}")
    if not config.counter_state_path:
        raise MintingError("the counter strategy needs a counter_state_path")
    state = Path(config.counter_state_path)
    with _counter_lock:
        try:
            current = int(state.read_text().strip() or "0") if state.exists() else 0
        except (OSError, ValueError) as exc:
            raise MintingError(f"unreadable counter state file {state}: {exc}") from exc
        current += 1
        try:
            state.write_text(f"{current}\n")
        except OSError as exc:
            raise MintingError(f"unwritable counter state file {state}: {exc}") from exc
    return base + f"{current:06d}"


def materialize(payload: SubmissionPayload, schema: FormSchema, subject: str) -> Graph:
    """Turn payload values into triples about ``subject``.

    Select-widget values become IRIs, everything else becomes a literal typed
    with the field datatype (default xsd:string). Lexically invalid values
    and paths outside the schema are errors.
    """
    fields_by_path = {f.path: f for f in schema.fields}
    unknown = sorted(set(payload.values) - set(fields_by_path))
    if unknown:
        raise MaterializationError(
            "payload contains paths outside the form schema: " + ", ".join(unknown)
        )

    graph = Graph(prefixes={"rdf": RDF, "xsd": XSD})
    subject_term = iri(subject)
    problems: list[str] = []
    for form_field in schema.fields:
        values = payload.values.get(form_field.path, [])
        for raw in values:
            if form_field.widget == "select":
                if not _ABSOLUTE_IRI.match(raw):
                    problems.append(f"<{form_field.path}>: select value {raw!r} is not an IRI")
                    continue
                term = iri(raw)
            else:
                datatype = form_field.datatype or XSD_STRING
                if not validate_lexical(raw, datatype):
                    problems.append(f"<{form_field.path}>: {raw!r} is not a valid <{datatype}> literal")
                    continue
                term = literal(raw, datatype=None if datatype == XSD_STRING else datatype)
            graph.add(Triple(subject_term, iri(form_field.path), term))
    if problems:
        raise MaterializationError("; ".join(problems))
    if len(graph) == 0:
        raise MaterializationError("payload contains no values, nothing to materialize")
    return graph


@dataclass
class SubmissionOutcome:
    accepted: bool
    subject: str
    graph: Graph | None = None
    report: ValidationReport | None = None


def process_submission(
    payload: SubmissionPayload,
    schema: FormSchema,
    shapes: ShapesGraph,
    bindings: list[ValidatorBinding],
    probe: ResolverProbe | None,
    minting: MintingConfig,
    registry: ValidatorRegistry | None = None,
) -> SubmissionOutcome:
    """Materialize, then validate in two phases, in order.

    Phase 2 never runs when phase 1 fails, so a phase-1 rejection report
    carries no custom results and no external calls are made for
    structurally invalid data.
    """
    registry = registry or default_registry()
    subject = mint_iri(minting)
    try:
        graph = materialize(payload, schema, subject)
    except MaterializationError as exc:
        report = ValidationReport(
            [
                ValidationResult(
                    focus_node=iri(subject),
                    result_path=None,
                    component="materialization",
                    offending_value=None,
                    message=str(exc),
                    severity="violation",
                    phase="custom",
                )
            ]
        )
        return SubmissionOutcome(accepted=False, subject=subject, report=report)

    phase1 = validate(graph, shapes)
    if not phase1.conforms:
        return SubmissionOutcome(accepted=False, subject=subject, report=phase1)

    shape_bindings = [b for b in bindings if b.shape_id == payload.shape_id]
    phase2 = run_phase2(payload, shape_bindings, registry, probe, focus=iri(subject))
    if any(r.severity == "violation" for r in phase2):
        merged = ValidationReport(phase1.results + phase2)
        return SubmissionOutcome(accepted=False, subject=subject, report=merged)
    return SubmissionOutcome(accepted=True, subject=subject, graph=graph)


# -- SPARQL Update ------------------------------------------------------------


def build_update(graph: Graph, target_graph: str | None = None) -> str:
    """An INSERT DATA string for the graph, deterministically ordered.

    Terms are rendered with full IRIs so the body is both valid SPARQL and
    parseable as Turtle when the wrapper is stripped.
    """
    if len(graph) == 0:
        raise ValueError("cannot build an update for an empty graph")
    lines = [
        f"  {render_term(t.subject)} {render_term(t.predicate)} {render_term(t.object)} ."
        for t in sorted_triples(graph)
    ]
    body = "\n".join(lines)
    if target_graph is not None:
        inner = "\n".join("  " + line for line in lines)
        return f"INSERT DATA {{\n  GRAPH <{target_graph}> {{\n{inner}\n  }}\n}}\n"
    return f"INSERT DATA {{\n{body}\n}}\n"


_INSERT_WRAPPER = re.compile(r"\s*INSERT DATA \{(.*)\}\s*$", re.DOTALL)
_GRAPH_WRAPPER = re.compile(r"\s*GRAPH <[^>]*> \{(.*)\}\s*$", re.DOTALL)


def update_body(update: str) -> str:
    """Strip the INSERT DATA (and optional GRAPH) wrapper, leaving triples."""
    m = _INSERT_WRAPPER.match(update)
    if m is None:
        raise ValueError("not an INSERT DATA update")
    inner = m.group(1)
    g = _GRAPH_WRAPPER.match(inner)
    return g.group(1) if g is not None else inner


@dataclass
class SubmitResult:
    ok: bool
    status: int | None = None
    body: str = ""


class TransportError(Exception):
    pass


class HttpTransport:
    """POSTs SPARQL updates with content type application/sparql-update."""

    def __init__(self, timeout: float = 30.0) -> None:
        self.timeout = timeout

    def send(self, endpoint: str, update: str) -> tuple[int, str]:
        try:
            response = requests.post(
                endpoint,
                data=update.encode("utf-8"),
                headers={"Content-Type": "application/sparql-update"},
                timeout=self.timeout,
            )
        except requests.RequestException as exc:
            raise TransportError(str(exc)) from exc
        return response.status_code, response.text


class DryRunTransport:
    """Writes the Turtle equivalent of the update instead of sending it."""

    def __init__(self, sink=None) -> None:
        self.sink = sink
        self.last_turtle: str | None = None

    def send(self, endpoint: str, update: str) -> tuple[int, str]:
        graph = parse_turtle(update_body(update))
        turtle = serialize_turtle(graph)
        self.last_turtle = turtle
        if self.sink is not None:
            if hasattr(self.sink, "write"):
                self.sink.write(turtle)
            else:
                Path(self.sink).write_text(turtle, encoding="utf-8")
        return 204, ""


def submit(endpoint: str, update: str, transport) -> SubmitResult:
    """Send one update; 2xx means ok, anything else is reported, never retried."""
    try:
        status, body = transport.send(endpoint, update)
    except TransportError as exc:
        return SubmitResult(ok=False, status=None, body=str(exc))
    if 200 <= status < 300:
        return SubmitResult(ok=True, status=status, body=body)
    return SubmitResult(ok=False, status=status, body=body)
