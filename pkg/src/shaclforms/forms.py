"""Compile resolved node shapes plus validator bindings into form schemas.

The FormSchema is the contract consumed by the web UI and the submission
pipeline: one field per property path, widgets derived from constraints,
live checks for client-side validation, and async validator names for
submission-time checks.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .rdf import Term, term_from_dict
from .rdf.namespaces import XSD_ANYURI
from .shapes import NodeShape, PropertyShape
from .validators import REQUIRED_VALIDATOR, Condition, ValidatorBinding

SCHEMA_VERSION = "1"

_CAMEL_BOUNDARY = re.compile(r"(?<=[a-z0-9])(?=[A-Z])|(?<=[A-Z])(?=[A-Z][a-z])")


class FormCompileError(Exception):
    pass


class FormSchemaVersionError(Exception):
    """The serialized schema declares a version this code does not understand."""


@dataclass(frozen=True)
class LiveCheck:
    kind: str  # "pattern" | "datatype" | "in_list" | "validator"
    argument: object


@dataclass(frozen=True)
class FormOption:
    value: str
    label: str


@dataclass
class FormField:
    path: str
    label: str
    widget: str  # "select" | "text" | "url"
    required: bool
    min_occurs: int
    max_occurs: int | None  # None = unbounded
    options: list[FormOption] | None = None
    datatype: str | None = None
    live_checks: list[LiveCheck] = field(default_factory=list)
    async_validators: list[str] = field(default_factory=list)
    visible_when: Condition | None = None


@dataclass
class FormSchema:
    schema_version: str
    shape_id: str
    target_class: str
    fields: list[FormField]

    def field_for(self, path: str) -> FormField | None:
        for f in self.fields:
            if f.path == path:
                return f
        return None


def derive_label(iri_text: str, overrides: dict[str, str] | None = None) -> str:
    """Human label for an IRI: override if present, else the local name with
    camelCase split into space-separated capitalized words."""
    if overrides and iri_text in overrides:
        return overrides[iri_text]
    local = re.split(r"[/#]", iri_text.rstrip("/#"))[-1]
    local = local.replace("_", " ").replace("-", " ")
    words = _CAMEL_BOUNDARY.sub(" ", local).split()
    return " ".join(w[:1].upper() + w[1:] for w in words)


def compile_form(
    shape: NodeShape,
    bindings: list[ValidatorBinding] | None = None,
    overrides: dict[str, str] | None = None,
) -> FormSchema:
    """Compile a resolved node shape into a form schema.

    Validator bindings for the shape decorate existing fields (live checks
    and async validators); a binding whose path has no property shape
    introduces a new field, hidden behind the binding condition when every
    binding on that path is conditional.
    """
    if not shape.properties:
        raise FormCompileError(f"nothing to compile: shape <{shape.id}> has no property shapes")
    if shape.target_class is None:
        raise FormCompileError(f"shape <{shape.id}> has no target class")

    shape_bindings = [b for b in (bindings or []) if b.shape_id == shape.id]
    by_path: dict[str, list[ValidatorBinding]] = {}
    for binding in shape_bindings:
        by_path.setdefault(binding.path, []).append(binding)

    fields = [
        _field_from_property(prop, by_path.get(prop.path, []), overrides)
        for prop in sorted(shape.properties, key=lambda p: p.source_order)
    ]
    known_paths = {f.path for f in fields}
    for binding in shape_bindings:
        if binding.path in known_paths:
            continue
        known_paths.add(binding.path)
        fields.append(_field_from_bindings(binding.path, by_path[binding.path], overrides))

    return FormSchema(
        schema_version=SCHEMA_VERSION,
        shape_id=shape.id,
        target_class=shape.target_class,
        fields=fields,
    )


def _collect_checks(path_bindings: list[ValidatorBinding]) -> tuple[list[LiveCheck], list[str]]:
    live = [
        LiveCheck("validator", b.validator_name)
        for b in path_bindings
        if b.mode == "syntactic" and b.validator_name != REQUIRED_VALIDATOR
    ]
    asynchronous = [
        b.validator_name
        for b in path_bindings
        if b.mode == "external" and b.validator_name != REQUIRED_VALIDATOR
    ]
    return live, asynchronous


def _is_resolver_validator(name: str) -> bool:
    return "doi" in name or "url" in name


def _field_from_property(
    prop: PropertyShape,
    path_bindings: list[ValidatorBinding],
    overrides: dict[str, str] | None,
) -> FormField:
    in_list = prop.constraint("in_list")
    datatype = prop.constraint("datatype")
    pattern = prop.constraint("pattern")
    min_count = prop.constraint("min_count")
    max_count = prop.constraint("max_count")

    min_occurs = min_count.argument if min_count else 0
    max_occurs = max_count.argument if max_count else None
    datatype_iri = datatype.argument if datatype else None

    live_checks: list[LiveCheck] = []
    if pattern:
        live_checks.append(LiveCheck("pattern", pattern.argument))
    if datatype_iri:
        live_checks.append(LiveCheck("datatype", datatype_iri))
    options = None
    if in_list:
        options = [_option(term, overrides) for term in in_list.argument]
        live_checks.append(LiveCheck("in_list", [o.value for o in options]))
    binding_live, async_validators = _collect_checks(path_bindings)
    live_checks.extend(binding_live)

    external = [b for b in path_bindings if b.mode == "external"]
    if in_list:
        widget = "select"
    elif datatype_iri == XSD_ANYURI or any(_is_resolver_validator(b.validator_name) for b in external):
        widget = "url"
    else:
        widget = "text"

    return FormField(
        path=prop.path,
        label=derive_label(prop.path, overrides),
        widget=widget,
        required=min_occurs >= 1,
        min_occurs=min_occurs,
        max_occurs=max_occurs,
        options=options,
        datatype=datatype_iri,
        live_checks=live_checks,
        async_validators=async_validators,
    )


def _field_from_bindings(
    path: str,
    path_bindings: list[ValidatorBinding],
    overrides: dict[str, str] | None,
) -> FormField:
    live_checks, async_validators = _collect_checks(path_bindings)
    external = [b for b in path_bindings if b.mode == "external"]
    widget = "url" if any(_is_resolver_validator(b.validator_name) for b in external) else "text"
    visible_when = None
    if all(b.condition is not None for b in path_bindings):
        visible_when = path_bindings[0].condition
    return FormField(
        path=path,
        label=derive_label(path, overrides),
        widget=widget,
        required=False,
        min_occurs=0,
        max_occurs=None,
        live_checks=live_checks,
        async_validators=async_validators,
        visible_when=visible_when,
    )


def _option(term: Term, overrides: dict[str, str] | None) -> FormOption:
    if term.is_literal:
        return FormOption(value=term.value, label=term.value)
    return FormOption(value=term.value, label=derive_label(term.value, overrides))


# -- serialization ----------------------------------------------------------


def _condition_to_dict(condition: Condition) -> dict:
    return {"path": condition.when_path, "equals": condition.equals.to_dict()}


def _condition_from_dict(data: dict) -> Condition:
    return Condition(when_path=data["path"], equals=term_from_dict(data["equals"]))


def schema_to_dict(schema: FormSchema) -> dict:
    return {
        "schema_version": schema.schema_version,
        "shape_id": schema.shape_id,
        "target_class": schema.target_class,
        "fields": [
            {
                "path": f.path,
                "label": f.label,
                "widget": f.widget,
                "required": f.required,
                "min_occurs": f.min_occurs,
                "max_occurs": f.max_occurs,
                "options": (
                    [{"value": o.value, "label": o.label} for o in f.options]
                    if f.options is not None
                    else None
                ),
                "datatype": f.datatype,
                "live_checks": [{"kind": c.kind, "argument": c.argument} for c in f.live_checks],
                "async_validators": list(f.async_validators),
                "visible_when": _condition_to_dict(f.visible_when) if f.visible_when else None,
            }
            for f in schema.fields
        ],
    }


def serialize_form_schema(schema: FormSchema) -> str:
    """Canonical text form: stable key order, byte-identical across runs."""
    return json.dumps(schema_to_dict(schema), indent=2, sort_keys=True) + "\n"


def parse_form_schema(text: str) -> FormSchema:
    data = json.loads(text)
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise FormSchemaVersionError(f"unsupported form schema version {version!r}")
    fields = [
        FormField(
            path=f["path"],
            label=f["label"],
            widget=f["widget"],
            required=f["required"],
            min_occurs=f["min_occurs"],
            max_occurs=f["max_occurs"],
            options=(
                [FormOption(value=o["value"], label=o["label"]) for o in f["options"]]
                if f.get("options") is not None
                else None
            ),
            datatype=f.get("datatype"),
            live_checks=[LiveCheck(c["kind"], c["argument"]) for c in f.get("live_checks", [])],
            async_validators=list(f.get("async_validators", [])),
            visible_when=(
                _condition_from_dict(f["visible_when"]) if f.get("visible_when") else None
            ),
        )
        for f in data["fields"]
    ]
    return FormSchema(
        schema_version=version,
        shape_id=data["shape_id"],
        target_class=data["target_class"],
        fields=fields,
    )
