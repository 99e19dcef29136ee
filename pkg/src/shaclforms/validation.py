"""Phase-1 validation: evaluate a data graph against resolved shapes."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .rdf import Graph, Term, iri, validate_lexical
from .rdf.namespaces import (
    RDF_TYPE,
    SH_BLANK_NODE_KIND,
    SH_BLANK_OR_IRI_KIND,
    SH_BLANK_OR_LITERAL_KIND,
    SH_IRI_KIND,
    SH_IRI_OR_LITERAL_KIND,
    SH_LITERAL_KIND,
)
from .shapes import Constraint, NodeShape, ShapesGraph

REPORT_VERSION = "1"

_NODE_KINDS = {
    SH_IRI_KIND: {"iri"},
    SH_LITERAL_KIND: {"literal"},
    SH_BLANK_NODE_KIND: {"blank"},
    SH_BLANK_OR_IRI_KIND: {"blank", "iri"},
    SH_BLANK_OR_LITERAL_KIND: {"blank", "literal"},
    SH_IRI_OR_LITERAL_KIND: {"iri", "literal"},
}


@dataclass(frozen=True)
class ValidationResult:
    focus_node: Term
    result_path: str | None
    component: str
    offending_value: Term | None
    message: str
    severity: str = "violation"  # "violation" | "warning"
    phase: str = "shacl"  # "shacl" | "custom"

    def __post_init__(self) -> None:
        if not self.message:
            raise ValueError("a validation result needs a message")


@dataclass
class ValidationReport:
    results: list[ValidationResult] = field(default_factory=list)

    @property
    def conforms(self) -> bool:
        return not any(r.severity == "violation" for r in self.results)

    def violations(self) -> list[ValidationResult]:
        return [r for r in self.results if r.severity == "violation"]


def select_focus_nodes(data: Graph, shape: NodeShape) -> list[Term]:
    """Subjects directly typed with the shape's target class, sorted.

    No subclass inference is applied over the data graph.
    """
    if shape.target_class is None:
        raise ValueError(f"shape <{shape.id}> has no target class")
    return data.subjects(iri(RDF_TYPE), iri(shape.target_class))


def _term_text(term: Term) -> str:
    if term.is_blank:
        return f"_:{term.value}"
    return term.value


def eval_constraint(
    constraint: Constraint,
    focus: Term,
    values: list[Term],
    data: Graph,
    path: str | None = None,
) -> list[ValidationResult]:
    """Evaluate one constraint over the values at a path; fail-slow."""

    def result(message: str, offending: Term | None = None) -> ValidationResult:
        return ValidationResult(
            focus_node=focus,
            result_path=path,
            component=constraint.component,
            offending_value=offending,
            message=message,
        )

    component = constraint.component
    arg = constraint.argument
    out: list[ValidationResult] = []

    if component == "min_count":
        if len(values) < arg:
            out.append(result(f"expected at least {arg} value(s), found {len(values)}"))
    elif component == "max_count":
        if len(values) > arg:
            out.append(result(f"expected at most {arg} value(s), found {len(values)}"))
    elif component == "in_list":
        for value in values:
            if value not in arg:
                out.append(result(f"value {_term_text(value)} is not one of the allowed values", value))
    elif component == "datatype":
        for value in values:
            if not value.is_literal:
                out.append(result(f"value {_term_text(value)} is not a literal", value))
            elif value.datatype != arg:
                out.append(result(f"value {_term_text(value)!r} does not have datatype <{arg}>", value))
            elif not validate_lexical(value.value, arg):
                out.append(result(f"value {value.value!r} is not a valid <{arg}> literal", value))
    elif component == "pattern":
        for value in values:
            if re.search(arg, value.value) is None:
                out.append(result(f"value {_term_text(value)!r} does not match pattern {arg!r}", value))
    elif component == "class_of":
        rdf_type = iri(RDF_TYPE)
        expected = iri(arg)
        for value in values:
            if value.is_literal or not data.match(value, rdf_type, expected):
                out.append(result(f"value {_term_text(value)} is not an instance of <{arg}>", value))
    elif component == "node_kind":
        allowed = _NODE_KINDS.get(arg)
        if allowed is not None:
            for value in values:
                if value.kind not in allowed:
                    out.append(result(f"value {_term_text(value)} is not of node kind <{arg}>", value))
    elif component == "has_value":
        if arg not in values:
            out.append(result(f"required value {_term_text(arg)} is missing"))
    else:
        raise ValueError(f"unknown constraint component {component!r}")
    return out


def validate(data: Graph, shapes: ShapesGraph) -> ValidationReport:
    """Evaluate every shape against its focus nodes; deterministic order.

    Results are ordered by shape id, focus node, property source order, and
    constraint component name.
    """
    if not shapes.resolved:
        raise ValueError("shapes must be resolved before validation")
    results: list[ValidationResult] = []
    for shape_id in sorted(shapes.shapes):
        shape = shapes.shapes[shape_id]
        if shape.target_class is None:
            continue
        for focus in select_focus_nodes(data, shape):
            for prop in shape.properties:
                values = [t.object for t in data.match(focus, iri(prop.path), None)]
                for constraint in sorted(prop.constraints, key=lambda c: c.component):
                    results.extend(eval_constraint(constraint, focus, values, data, path=prop.path))
    return ValidationReport(results)


def result_to_dict(result: ValidationResult) -> dict:
    return {
        "focusNode": _term_text(result.focus_node),
        "resultPath": result.result_path,
        "sourceConstraintComponent": result.component,
        "value": _term_text(result.offending_value) if result.offending_value else None,
        "resultMessage": result.message,
        "resultSeverity": result.severity,
        "phase": result.phase,
    }


def report_to_dict(report: ValidationReport) -> dict:
    return {
        "version": REPORT_VERSION,
        "conforms": report.conforms,
        "results": [result_to_dict(r) for r in report.results],
    }


def report_to_json(report: ValidationReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, sort_keys=True) + "\n"
