"""RDF terms, triples, and an in-memory graph with set semantics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .namespaces import RDF_FIRST, RDF_NIL, RDF_REST, XSD_STRING

_KIND_ORDER = {"iri": 0, "blank": 1, "literal": 2}


class MalformedListError(Exception):
    """An rdf:first/rdf:rest chain is structurally broken."""


@dataclass(frozen=True, slots=True)
class Term:
    """An RDF term: IRI, blank node, or literal.

    A literal carries either a datatype IRI or a language tag, never both.
    A plain literal (no datatype, no language) is normalised to xsd:string,
    so ``"x"`` and ``"x"^^xsd:string`` compare equal.
    """

    kind: str
    value: str
    datatype: str | None = None
    language: str | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown term kind: {self.kind!r}")
        if self.kind == "literal":
            if self.language is not None:
                if self.datatype is not None:
                    raise ValueError("a literal cannot carry both a datatype and a language tag")
                object.__setattr__(self, "language", self.language.lower())
            elif self.datatype is None:
                object.__setattr__(self, "datatype", XSD_STRING)
        elif self.datatype is not None or self.language is not None:
            raise ValueError(f"a {self.kind} term cannot carry a datatype or language tag")

    @property
    def is_iri(self) -> bool:
        return self.kind == "iri"

    @property
    def is_blank(self) -> bool:
        return self.kind == "blank"

    @property
    def is_literal(self) -> bool:
        return self.kind == "literal"

    def sort_key(self) -> tuple:
        return (_KIND_ORDER[self.kind], self.value, self.datatype or "", self.language or "")

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind, "value": self.value}
        if self.kind == "literal":
            if self.language is not None:
                out["language"] = self.language
            elif self.datatype != XSD_STRING:
                out["datatype"] = self.datatype
        return out


def term_from_dict(data: dict) -> Term:
    return Term(
        kind=data["kind"],
        value=data["value"],
        datatype=data.get("datatype"),
        language=data.get("language"),
    )


def iri(value: str) -> Term:
    return Term("iri", value)


def blank(label: str) -> Term:
    return Term("blank", label)


def literal(lexical: str, datatype: str | None = None, language: str | None = None) -> Term:
    return Term("literal", lexical, datatype=datatype, language=language)


@dataclass(frozen=True, slots=True)
class Triple:
    subject: Term
    predicate: Term
    object: Term

    def __post_init__(self) -> None:
        if self.subject.is_literal:
            raise ValueError("a triple subject cannot be a literal")
        if not self.predicate.is_iri:
            raise ValueError("a triple predicate must be an IRI")

    def sort_key(self) -> tuple:
        return (self.subject.sort_key(), self.predicate.sort_key(), self.object.sort_key())


class Graph:
    """A set of triples plus prefix bindings.

    Duplicate insertions are no-ops. Iteration preserves insertion order,
    which the Turtle parser uses to expose document order; ``match`` always
    returns results in sorted order.
    """

    def __init__(self, prefixes: dict[str, str] | None = None) -> None:
        self._triples: dict[Triple, None] = {}
        self.prefixes: dict[str, str] = dict(prefixes or {})

    def add(self, triple: Triple) -> None:
        self._triples[triple] = None

    def bind(self, prefix: str, namespace: str) -> None:
        self.prefixes[prefix] = namespace

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __contains__(self, triple: Triple) -> bool:
        return triple in self._triples

    def match(
        self,
        subject: Term | None = None,
        predicate: Term | None = None,
        obj: Term | None = None,
    ) -> list[Triple]:
        found = [
            t
            for t in self._triples
            if (subject is None or t.subject == subject)
            and (predicate is None or t.predicate == predicate)
            and (obj is None or t.object == obj)
        ]
        found.sort(key=Triple.sort_key)
        return found

    def objects(self, subject: Term, predicate: Term) -> list[Term]:
        return [t.object for t in self.match(subject, predicate, None)]

    def subjects(self, predicate: Term, obj: Term) -> list[Term]:
        return sorted({t.subject for t in self.match(None, predicate, obj)}, key=Term.sort_key)


def read_list(graph: Graph, head: Term) -> list[Term]:
    """Walk an rdf:first/rdf:rest chain and return the member terms in order.

    rdf:nil yields an empty list. A cell with anything other than exactly one
    rdf:first and one rdf:rest, or a cycle, raises MalformedListError.
    """
    nil = iri(RDF_NIL)
    first = iri(RDF_FIRST)
    rest = iri(RDF_REST)
    items: list[Term] = []
    seen: set[Term] = set()
    node = head
    while node != nil:
        if node in seen:
            raise MalformedListError(f"cycle in rdf list at {node.value}")
        seen.add(node)
        firsts = graph.objects(node, first)
        rests = graph.objects(node, rest)
        if len(firsts) != 1 or len(rests) != 1:
            raise MalformedListError(
                f"malformed rdf list cell {node.value}: "
                f"{len(firsts)} rdf:first and {len(rests)} rdf:rest triples"
            )
        items.append(firsts[0])
        node = rests[0]
    return items
