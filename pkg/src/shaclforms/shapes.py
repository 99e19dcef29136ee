"""Interpret a shapes graph into typed node shapes with inheritance resolved."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .rdf import Graph, MalformedListError, Term, iri, read_list
from .rdf.namespaces import (
    RDF_TYPE,
    RDFS_SUBCLASS_OF,
    SH_AND,
    SH_CLASS,
    SH_DATATYPE,
    SH_HAS_VALUE,
    SH_IN,
    SH_MAX_COUNT,
    SH_MAX_VALUE,
    SH_MIN_COUNT,
    SH_MIN_VALUE,
    SH_NODE,
    SH_NODE_KIND,
    SH_NODE_SHAPE,
    SH_NOT,
    SH_OR,
    SH_PATH,
    SH_PATTERN,
    SH_PROPERTY,
    SH_PROPERTY_SHAPE,
    SH_SPARQL,
    SH_TARGET_CLASS,
    SH_XONE,
)

CONSTRAINT_COMPONENTS = (
    "min_count",
    "max_count",
    "in_list",
    "datatype",
    "class_of",
    "node_kind",
    "pattern",
    "has_value",
)

_UNSUPPORTED = {SH_OR, SH_AND, SH_NOT, SH_XONE, SH_SPARQL, SH_NODE}


class InheritanceCycleError(Exception):
    """Shape inheritance forms a cycle."""


@dataclass(frozen=True)
class Constraint:
    component: str
    argument: object  # int, IRI string, pattern string, Term, or tuple of Terms


@dataclass
class PropertyShape:
    path: str
    constraints: list[Constraint]
    source_order: int

    def constraint(self, component: str) -> Constraint | None:
        for c in self.constraints:
            if c.component == component:
                return c
        return None


@dataclass
class NodeShape:
    id: str
    target_class: str | None
    super_shapes: list[str]
    properties: list[PropertyShape]


@dataclass
class ShapesGraph:
    shapes: dict[str, NodeShape] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)
    resolved: bool = False

    def get(self, shape_id: str) -> NodeShape | None:
        return self.shapes.get(shape_id)


def load_shapes(graph: Graph) -> ShapesGraph:
    """Build one NodeShape per subject typed sh:NodeShape.

    Total on any graph: structural problems (blank shape ids, property shapes
    without a usable sh:path, bad count arguments) are recorded as warnings
    and the offending piece is skipped rather than raised.
    """
    out = ShapesGraph()
    rdf_type = iri(RDF_TYPE)
    node_shape = iri(SH_NODE_SHAPE)
    sh_property = iri(SH_PROPERTY)

    shape_subjects: list[Term] = []
    seen: set[Term] = set()
    for t in graph:  # insertion order preserves document order
        if t.predicate == rdf_type and t.object == node_shape and t.subject not in seen:
            seen.add(t.subject)
            shape_subjects.append(t.subject)

    for subject in shape_subjects:
        if not subject.is_iri:
            out.warnings.append(f"node shape without an IRI id skipped (blank node _:{subject.value})")
            continue
        targets = [o for o in graph.objects(subject, iri(SH_TARGET_CLASS)) if o.is_iri]
        if len(targets) > 1:
            out.warnings.append(f"shape <{subject.value}> has multiple sh:targetClass values, using the first")
        supers = [o.value for o in graph.objects(subject, iri(RDFS_SUBCLASS_OF)) if o.is_iri]

        properties: list[PropertyShape] = []
        for t in graph:
            if t.subject != subject or t.predicate != sh_property:
                continue
            prop = _load_property_shape(graph, t.object, len(properties), out.warnings)
            if prop is not None:
                properties.append(prop)

        out.shapes[subject.value] = NodeShape(
            id=subject.value,
            target_class=targets[0].value if targets else None,
            super_shapes=supers,
            properties=properties,
        )
    return out


def _load_property_shape(
    graph: Graph, node: Term, order: int, warnings: list[str]
) -> PropertyShape | None:
    paths = graph.objects(node, iri(SH_PATH))
    if len(paths) != 1 or not paths[0].is_iri:
        warnings.append("property shape without a single IRI sh:path skipped")
        return None
    constraints: list[Constraint] = []
    for t in graph:
        if t.subject != node:
            continue
        predicate = t.predicate.value
        obj = t.object
        if predicate in (SH_PATH, RDF_TYPE):
            continue
        if predicate in (SH_MIN_COUNT, SH_MIN_VALUE, SH_MAX_COUNT, SH_MAX_VALUE):
            if predicate == SH_MIN_VALUE:
                warnings.append("nonstandard sh:minValue read as a minimum cardinality (sh:minCount)")
            elif predicate == SH_MAX_VALUE:
                warnings.append("nonstandard sh:maxValue read as a maximum cardinality (sh:maxCount)")
            count = _count_argument(obj, predicate, warnings)
            if count is None:
                continue
            if predicate in (SH_MIN_COUNT, SH_MIN_VALUE):
                if count == 0:
                    continue  # a zero minimum constrains nothing
                constraints.append(Constraint("min_count", count))
            else:
                constraints.append(Constraint("max_count", count))
        elif predicate == SH_IN:
            try:
                items = read_list(graph, obj)
            except MalformedListError as exc:
                warnings.append(f"unreadable sh:in list skipped: {exc}")
                continue
            if not items:
                warnings.append("empty sh:in list skipped")
                continue
            constraints.append(Constraint("in_list", tuple(items)))
        elif predicate == SH_DATATYPE:
            if obj.is_iri:
                constraints.append(Constraint("datatype", obj.value))
            else:
                warnings.append("sh:datatype with a non-IRI argument skipped")
        elif predicate == SH_CLASS:
            if obj.is_iri:
                constraints.append(Constraint("class_of", obj.value))
            else:
                warnings.append("sh:class with a non-IRI argument skipped")
        elif predicate == SH_NODE_KIND:
            if obj.is_iri:
                constraints.append(Constraint("node_kind", obj.value))
            else:
                warnings.append("sh:nodeKind with a non-IRI argument skipped")
        elif predicate == SH_PATTERN:
            if obj.is_literal:
                constraints.append(Constraint("pattern", obj.value))
            else:
                warnings.append("sh:pattern with a non-literal argument skipped")
        elif predicate == SH_HAS_VALUE:
            constraints.append(Constraint("has_value", obj))
        elif predicate in _UNSUPPORTED:
            warnings.append(f"unsupported constraint <{predicate}> ignored")
        else:
            warnings.append(f"unknown constraint predicate <{predicate}> ignored")
    return PropertyShape(path=paths[0].value, constraints=constraints, source_order=order)


def _count_argument(obj: Term, predicate: str, warnings: list[str]) -> int | None:
    if not obj.is_literal:
        warnings.append(f"<{predicate}> expects an integer literal, got a non-literal; skipped")
        return None
    try:
        value = int(obj.value)
    except ValueError:
        warnings.append(f"<{predicate}> expects an integer literal, got {obj.value!r}; skipped")
        return None
    if value < 0:
        warnings.append(f"<{predicate}> with a negative argument skipped")
        return None
    return value


def resolve_inheritance(shapes: ShapesGraph) -> ShapesGraph:
    """Fold transitive super-shape properties into each node shape.

    Own properties come first, inherited ones follow in super-shape order;
    an inherited property whose path a nearer shape already declares is
    dropped so every path appears once. Missing super-shapes produce a
    warning; cycles raise InheritanceCycleError.
    """
    out = ShapesGraph(warnings=list(shapes.warnings), resolved=True)
    done: dict[str, NodeShape] = {}

    def resolve(shape_id: str, stack: tuple[str, ...]) -> NodeShape:
        if shape_id in done:
            return done[shape_id]
        if shape_id in stack:
            cycle = stack[stack.index(shape_id):] + (shape_id,)
            raise InheritanceCycleError("shape inheritance cycle: " + " -> ".join(cycle))
        shape = shapes.shapes[shape_id]
        merged = [replace_order(p, i) for i, p in enumerate(shape.properties)]
        seen_paths = {p.path for p in merged}
        for super_id in shape.super_shapes:
            if super_id not in shapes.shapes:
                out.warnings.append(f"super shape <{super_id}> not found, skipped")
                continue
            resolved_super = resolve(super_id, stack + (shape_id,))
            for prop in resolved_super.properties:
                if prop.path in seen_paths:
                    continue
                seen_paths.add(prop.path)
                merged.append(replace_order(prop, len(merged)))
        result = NodeShape(id=shape.id, target_class=shape.target_class, super_shapes=[], properties=merged)
        done[shape_id] = result
        return result

    def replace_order(prop: PropertyShape, order: int) -> PropertyShape:
        return PropertyShape(path=prop.path, constraints=list(prop.constraints), source_order=order)

    for shape_id in sorted(shapes.shapes):
        out.shapes[shape_id] = resolve(shape_id, ())
    return out


def shape_for_class(shapes: ShapesGraph, class_iri: str) -> NodeShape | None:
    """The shape targeting ``class_iri``; smallest shape id wins on ties."""
    candidates = [s for s in shapes.shapes.values() if s.target_class == class_iri]
    if not candidates:
        return None
    return min(candidates, key=lambda s: s.id)
