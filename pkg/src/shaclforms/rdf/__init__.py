"""RDF data model and Turtle reader/writer."""

from .datatypes import KNOWN_DATATYPES, validate_lexical
from .model import (
    Graph,
    MalformedListError,
    Term,
    Triple,
    blank,
    iri,
    literal,
    read_list,
    term_from_dict,
)
from .turtle import (
    TurtleParseError,
    parse_turtle,
    render_term,
    serialize_turtle,
    sorted_triples,
)

__all__ = [
    "Graph",
    "KNOWN_DATATYPES",
    "MalformedListError",
    "Term",
    "Triple",
    "TurtleParseError",
    "blank",
    "iri",
    "literal",
    "parse_turtle",
    "read_list",
    "render_term",
    "serialize_turtle",
    "sorted_triples",
    "term_from_dict",
    "validate_lexical",
]
