"""SHACL-driven form generation and two-phase validation for RDF data entry.

The pipeline: parse a shapes graph, compile node shapes into form schemas,
validate submitted payloads first against the SHACL constraints and then
against named per-property validators, and materialize accepted payloads as
RDF ready for SPARQL Update submission.
"""

__version__ = "0.1.0"

from .forms import FormSchema, compile_form, parse_form_schema, serialize_form_schema
from .payload import SubmissionPayload
from .rdf import Graph, Term, Triple, parse_turtle, serialize_turtle
from .shapes import ShapesGraph, load_shapes, resolve_inheritance, shape_for_class
from .submission import MintingConfig, build_update, materialize, process_submission
from .validation import ValidationReport, ValidationResult, validate

__all__ = [
    "FormSchema",
    "Graph",
    "MintingConfig",
    "ShapesGraph",
    "SubmissionPayload",
    "Term",
    "Triple",
    "ValidationReport",
    "ValidationResult",
    "build_update",
    "compile_form",
    "load_shapes",
    "materialize",
    "parse_form_schema",
    "parse_turtle",
    "process_submission",
    "resolve_inheritance",
    "serialize_form_schema",
    "serialize_turtle",
    "shape_for_class",
    "validate",
]
