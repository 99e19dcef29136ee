"""Shared test machinery: graph isomorphism, an independent brute-force
constraint evaluator, and seeded random generators."""

from __future__ import annotations

import random
import re

from shaclforms.payload import SubmissionPayload
from shaclforms.rdf import Graph, Term, Triple, blank, iri, literal
from shaclforms.rdf.namespaces import (
    RDF_TYPE,
    SH_BLANK_NODE_KIND,
    SH_IRI_KIND,
    SH_LITERAL_KIND,
    XSD_INTEGER,
    XSD_STRING,
)
from shaclforms.shapes import Constraint, NodeShape, PropertyShape, ShapesGraph

EX = "http://example.org/"
FABIO = "http://purl.org/spar/fabio/"
DCTERMS = "http://purl.org/dc/terms/"
DATACITE = "http://purl.org/spar/datacite/"
SHAPES_NS = "https://w3id.org/oc/shapes/"

RESOURCE_SHAPE = SHAPES_NS + "BibliographicResourceShape"
ENTITY_SHAPE = SHAPES_NS + "BibliographicEntityShape"
EXPRESSION = FABIO + "Expression"
JOURNAL_ARTICLE = FABIO + "JournalArticle"
BOOK = FABIO + "Book"
TITLE = DCTERMS + "title"
IDENTIFIER = DCTERMS + "identifier"
DOI_PATH = DATACITE + "hasIdentifier"


# -- graph isomorphism ---------------------------------------------------------


def _has_blank(t: Triple) -> bool:
    return t.subject.is_blank or t.object.is_blank


def _blanks(triples) -> list[Term]:
    found = set()
    for t in triples:
        if t.subject.is_blank:
            found.add(t.subject)
        if t.object.is_blank:
            found.add(t.object)
    return sorted(found, key=Term.sort_key)


def _signature(triples, node: Term) -> tuple:
    marker = Term("blank", "?")
    sig = []
    for t in triples:
        if t.subject == node:
            other = marker if t.object.is_blank else t.object
            sig.append(("s", t.predicate, other))
        if t.object == node:
            other = marker if t.subject.is_blank else t.subject
            sig.append(("o", t.predicate, other))
    return tuple(sorted(sig, key=lambda e: (e[0], e[1].sort_key(), e[2].sort_key())))


def isomorphic(a: Graph, b: Graph) -> bool:
    """Exhaustive blank-node bijection search, pruned by node signatures.

    Intended for small test graphs (roughly a dozen blank nodes)."""
    ta, tb = set(a), set(b)
    if len(ta) != len(tb):
        return False
    ground_a = {t for t in ta if not _has_blank(t)}
    ground_b = {t for t in tb if not _has_blank(t)}
    if ground_a != ground_b:
        return False
    blank_ta = [t for t in ta if _has_blank(t)]
    blanks_a = _blanks(blank_ta)
    blanks_b = _blanks(tb)
    if len(blanks_a) != len(blanks_b):
        return False

    sig_a = {n: _signature(ta, n) for n in blanks_a}
    sig_b = {n: _signature(tb, n) for n in blanks_b}

    def mapped(term: Term, mapping: dict[Term, Term]) -> Term | None:
        if not term.is_blank:
            return term
        return mapping.get(term)

    def consistent(mapping: dict[Term, Term]) -> bool:
        for t in blank_ta:
            s = mapped(t.subject, mapping)
            o = mapped(t.object, mapping)
            if s is not None and o is not None and Triple(s, t.predicate, o) not in tb:
                return False
        return True

    def search(index: int, mapping: dict[Term, Term], used: set[Term]) -> bool:
        if index == len(blanks_a):
            return consistent(mapping)
        node = blanks_a[index]
        for candidate in blanks_b:
            if candidate in used or sig_b[candidate] != sig_a[node]:
                continue
            mapping[node] = candidate
            used.add(candidate)
            if consistent(mapping) and search(index + 1, mapping, used):
                return True
            del mapping[node]
            used.discard(candidate)
        return False

    return search(0, {}, set())


# -- independent brute-force constraint evaluator --------------------------------


def _oracle_integer_ok(value: str) -> bool:
    body = value[1:] if value[:1] in "+-" else value
    return body != "" and all(c in "0123456789" for c in body)


def _oracle_lexical(value: str, datatype: str) -> bool:
    if datatype == XSD_STRING:
        return True
    if datatype == XSD_INTEGER:
        return _oracle_integer_ok(value)
    return True


def oracle_validate(data: Graph, shapes: ShapesGraph) -> list[tuple]:
    """Naively enumerate every (shape, focus, property, constraint) and check
    it directly; returns (focus, path, component, offending, severity) tuples
    in the engine's reporting order."""
    out: list[tuple] = []
    for shape_id in sorted(shapes.shapes):
        shape = shapes.shapes[shape_id]
        if shape.target_class is None:
            continue
        target = iri(shape.target_class)
        rdf_type = iri(RDF_TYPE)
        focus_nodes = sorted(
            {t.subject for t in data if t.predicate == rdf_type and t.object == target},
            key=Term.sort_key,
        )
        for focus in focus_nodes:
            for prop in sorted(shape.properties, key=lambda p: p.source_order):
                path = iri(prop.path)
                values = sorted(
                    [t.object for t in data if t.subject == focus and t.predicate == path],
                    key=Term.sort_key,
                )
                for constraint in sorted(prop.constraints, key=lambda c: c.component):
                    out.extend(
                        _oracle_constraint(constraint, focus, prop.path, values, data)
                    )
    return out


def _oracle_constraint(c: Constraint, focus, path, values, data) -> list[tuple]:
    found: list[tuple] = []

    def hit(offending=None, severity="violation"):
        found.append((focus, path, c.component, offending, severity))

    if c.component == "min_count":
        n = 0
        for _ in values:
            n += 1
        if n < c.argument:
            hit()
    elif c.component == "max_count":
        n = 0
        for _ in values:
            n += 1
        if n > c.argument:
            hit()
    elif c.component == "in_list":
        for v in values:
            member = False
            for item in c.argument:
                if item == v:
                    member = True
            if not member:
                hit(v)
    elif c.component == "datatype":
        for v in values:
            if v.kind != "literal":
                hit(v)
            elif v.datatype != c.argument:
                hit(v)
            elif not _oracle_lexical(v.value, c.argument):
                hit(v)
    elif c.component == "pattern":
        for v in values:
            if re.search(c.argument, v.value) is None:
                hit(v)
    elif c.component == "class_of":
        expected = iri(c.argument)
        rdf_type = iri(RDF_TYPE)
        for v in values:
            if v.kind == "literal":
                hit(v)
                continue
            typed = False
            for t in data:
                if t.subject == v and t.predicate == rdf_type and t.object == expected:
                    typed = True
            if not typed:
                hit(v)
    elif c.component == "node_kind":
        kinds = {
            SH_IRI_KIND: {"iri"},
            SH_LITERAL_KIND: {"literal"},
            SH_BLANK_NODE_KIND: {"blank"},
        }.get(c.argument, {"iri", "blank", "literal"})
        for v in values:
            if v.kind not in kinds:
                hit(v)
    elif c.component == "has_value":
        present = False
        for v in values:
            if v == c.argument:
                present = True
        if not present:
            hit()
    return found


def report_tuples(report) -> list[tuple]:
    return [
        (r.focus_node, r.result_path, r.component, r.offending_value, r.severity)
        for r in report.results
    ]


# -- random generators -----------------------------------------------------------


_CLASSES = [EX + c for c in ("ClassA", "ClassB", "ClassC")]
_PATHS = [EX + p for p in ("p1", "p2", "p3")]
_NODES = [EX + n for n in ("e1", "e2", "e3", "e4")]
_LITERAL_POOL = ["12", "-3", "+40", "hello", "12.5", "", "0", "abc1", "x y"]
_PATTERNS = ["^a", "1$", "[0-9]+", "^x"]


def random_data_graph(rng: random.Random) -> Graph:
    g = Graph()
    rdf_type = iri(RDF_TYPE)
    for node_iri in rng.sample(_NODES, rng.randint(1, 4)):
        node = iri(node_iri)
        for class_iri in rng.sample(_CLASSES, rng.randint(0, 2)):
            g.add(Triple(node, rdf_type, iri(class_iri)))
        for path_iri in _PATHS:
            for _ in range(rng.randint(0, 3)):
                roll = rng.random()
                if roll < 0.45:
                    value = literal(rng.choice(_LITERAL_POOL))
                elif roll < 0.65:
                    value = literal(rng.choice(_LITERAL_POOL), datatype=XSD_INTEGER)
                elif roll < 0.9:
                    value = iri(rng.choice(_NODES + _CLASSES))
                else:
                    value = blank(f"n{rng.randint(0, 3)}")
                g.add(Triple(node, iri(path_iri), value))
    return g


def _random_constraints(rng: random.Random) -> list[Constraint]:
    menu = []
    menu.append(Constraint("min_count", rng.randint(0, 3) or 1))
    menu.append(Constraint("max_count", rng.randint(0, 3)))
    in_terms = tuple(
        rng.sample(
            [iri(c) for c in _CLASSES] + [literal(v) for v in _LITERAL_POOL[:4]],
            rng.randint(1, 3),
        )
    )
    menu.append(Constraint("in_list", in_terms))
    menu.append(Constraint("datatype", rng.choice([XSD_STRING, XSD_INTEGER])))
    menu.append(Constraint("pattern", rng.choice(_PATTERNS)))
    menu.append(Constraint("class_of", rng.choice(_CLASSES)))
    menu.append(
        Constraint("node_kind", rng.choice([SH_IRI_KIND, SH_LITERAL_KIND, SH_BLANK_NODE_KIND]))
    )
    menu.append(Constraint("has_value", rng.choice([iri(_CLASSES[0]), literal("hello")])))
    return rng.sample(menu, rng.randint(1, 3))


def random_resolved_shapes(rng: random.Random) -> ShapesGraph:
    shapes: dict[str, NodeShape] = {}
    for index in range(rng.randint(1, 2)):
        shape_id = EX + f"Shape{index}"
        properties = [
            PropertyShape(path=path, constraints=_random_constraints(rng), source_order=i)
            for i, path in enumerate(rng.sample(_PATHS, rng.randint(1, 3)))
        ]
        shapes[shape_id] = NodeShape(
            id=shape_id,
            target_class=rng.choice(_CLASSES),
            super_shapes=[],
            properties=properties,
        )
    return ShapesGraph(shapes=shapes, resolved=True)


# -- random graphs for serialization round-trips ----------------------------------


_RT_STRINGS = ['plain', 'with "quotes"', "tab\tand\nnewline", "café ☕", "back\\slash", ""]
_RT_LANGS = ["en", "it", "en-GB"]
_RT_DATATYPES = [XSD_STRING, XSD_INTEGER, EX + "custom"]


def random_turtle_graph(rng: random.Random, max_triples: int = 30, max_blanks: int = 12) -> Graph:
    g = Graph(prefixes={"ex": EX, "f": FABIO})
    blanks = [blank(f"b{i}") for i in range(rng.randint(0, max_blanks))]
    iris = [iri(EX + f"r{i}") for i in range(6)] + [iri(FABIO + "Book")]
    predicates = [iri(EX + f"q{i}") for i in range(4)] + [iri(RDF_TYPE)]

    def random_subject() -> Term:
        if blanks and rng.random() < 0.4:
            return rng.choice(blanks)
        return rng.choice(iris)

    def random_object() -> Term:
        roll = rng.random()
        if roll < 0.3:
            return rng.choice(iris)
        if blanks and roll < 0.5:
            return rng.choice(blanks)
        text = rng.choice(_RT_STRINGS)
        style = rng.random()
        if style < 0.33:
            return literal(text)
        if style < 0.66:
            return literal(text, language=rng.choice(_RT_LANGS))
        return literal("42" if rng.random() < 0.5 else text, datatype=rng.choice(_RT_DATATYPES))

    for _ in range(rng.randint(1, max_triples)):
        g.add(Triple(random_subject(), rng.choice(predicates), random_object()))
    return g


# -- payload generation against the OCDM form schema ------------------------------


_TITLES = ["On Validation", "Shapes at Work", "Forme e figure", "データ品質", 'A "quoted" title']


def conforming_payload(rng: random.Random, schema) -> SubmissionPayload:
    """A payload satisfying the compiled OCDM schema, always carrying the
    target class among its types so focus selection fires."""
    type_field = schema.field_for(RDF_TYPE)
    options = [o.value for o in type_field.options]
    types = [EXPRESSION]
    if rng.random() < 0.85:
        types.append(rng.choice([o for o in options if o != EXPRESSION]))
    values: dict[str, list[str]] = {RDF_TYPE: types}
    if rng.random() < 0.7:
        values[TITLE] = [rng.choice(_TITLES)]
    if schema.field_for(IDENTIFIER) is not None and rng.random() < 0.5:
        values[IDENTIFIER] = [f"br-{rng.randint(1, 9999)}"]
    doi_field = schema.field_for(DOI_PATH)
    if doi_field is not None and JOURNAL_ARTICLE in types and rng.random() < 0.5:
        values[DOI_PATH] = ["10.1145/3594721"]
    return SubmissionPayload(shape_id=schema.shape_id, values=values)


def break_one_constraint(rng: random.Random, payload: SubmissionPayload, schema) -> SubmissionPayload:
    """Mutate a conforming payload so exactly one constraint fails, keeping it
    materializable and keeping the focus-selecting type in place."""
    values = {path: list(vals) for path, vals in payload.values.items()}
    type_field = schema.field_for(RDF_TYPE)
    options = [o.value for o in type_field.options if o.value != EXPRESSION]
    mutation = rng.choice(["extra_title", "extra_type", "off_list_type", "extra_identifier"])
    if mutation == "extra_title":
        values[TITLE] = rng.sample(_TITLES, 2)  # distinct, or they collapse into one triple
    elif mutation == "extra_type":
        extra = rng.sample(options, 2)
        values[RDF_TYPE] = [EXPRESSION] + extra  # 3 > maxCount 2
    elif mutation == "off_list_type":
        values[RDF_TYPE] = [EXPRESSION, EX + "NotAListedType"]
    else:
        values[IDENTIFIER] = ["a", "b"]
    return SubmissionPayload(shape_id=payload.shape_id, values=values)
