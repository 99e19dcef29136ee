"""Reader and writer for the Turtle subset used for shapes and produced data.

Supported syntax: @prefix and @base directives, the ``a`` keyword,
predicate-object lists (``;``), object lists (``,``), labelled and anonymous
blank nodes, collections ``( ... )`` (expanded to rdf:first/rdf:rest chains),
short string literals with ``^^datatype`` or ``@lang``, and bare integer,
decimal, and boolean literals. Long (triple-quoted) strings, TriG, and named
graphs are out of scope.
"""

from __future__ import annotations

import re
from urllib.parse import urljoin

from .model import Graph, Term, Triple, blank, iri, literal
from .namespaces import (
    RDF_FIRST,
    RDF_NIL,
    RDF_REST,
    RDF_TYPE,
    XSD_BOOLEAN,
    XSD_DECIMAL,
    XSD_INTEGER,
    XSD_STRING,
)


class TurtleParseError(Exception):
    """Syntax or reference error in a Turtle document, with position."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_SCHEME = re.compile(r"[A-Za-z][A-Za-z0-9+.\-]*:")
_PNAME = re.compile(r"(?P<prefix>[A-Za-z_][A-Za-z0-9_\-]*)?:(?P<local>[A-Za-z0-9_\-.%]*)")
_NUMBER = re.compile(r"[+-]?([0-9]+\.[0-9]+|\.[0-9]+|[0-9]+)")
_LANGTAG = re.compile(r"[A-Za-z]+(-[A-Za-z0-9]+)*")
_BLANK_LABEL = re.compile(r"[A-Za-z0-9_][A-Za-z0-9_\-.]*")
_ESCAPES = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}
_PN_CHARS = set("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_-.:")

_WS = " \t\r\n"


def parse_turtle(text: str, base_iri: str | None = None) -> Graph:
    """Parse a Turtle document into a Graph.

    Relative IRIs are resolved against ``base_iri`` (or a @base directive);
    a relative IRI with no base in scope is an error.
    """
    return _Parser(text, base_iri).parse()


class _Parser:
    def __init__(self, text: str, base_iri: str | None) -> None:
        self.text = text
        self.length = len(text)
        self.pos = 0
        self.line = 1
        self.col = 1
        self.base = base_iri
        self.graph = Graph()
        self._bnode_prefix = self._fresh_bnode_prefix(text)
        self._bnode_count = 0

    @staticmethod
    def _fresh_bnode_prefix(text: str) -> str:
        used = set(re.findall(r"_:([A-Za-z0-9_\-.]+)", text))
        prefix = "gb"
        while any(label.startswith(prefix) for label in used):
            prefix = "g" + prefix
        return prefix

    # -- low-level cursor helpers ------------------------------------------

    def _peek(self) -> str:
        return self.text[self.pos] if self.pos < self.length else ""

    def _advance(self, n: int = 1) -> None:
        for _ in range(n):
            if self.pos < self.length and self.text[self.pos] == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
            self.pos += 1

    def _skip(self) -> None:
        while self.pos < self.length:
            ch = self.text[self.pos]
            if ch in _WS:
                self._advance()
            elif ch == "#":
                while self.pos < self.length and self.text[self.pos] != "\n":
                    self._advance()
            else:
                break

    def _error(self, message: str, line: int | None = None, col: int | None = None):
        raise TurtleParseError(message, line if line is not None else self.line,
                               col if col is not None else self.col)

    def _expect(self, ch: str) -> None:
        self._skip()
        if self._peek() != ch:
            found = self._peek() or "end of input"
            self._error(f"expected '{ch}', found {found!r}")
        self._advance()

    # -- document structure ------------------------------------------------

    def parse(self) -> Graph:
        self._skip()
        while self.pos < self.length:
            if self._peek() == "@":
                self._directive()
            else:
                self._triples()
                self._expect(".")
            self._skip()
        return self.graph

    def _directive(self) -> None:
        line, col = self.line, self.col
        self._advance()  # '@'
        word = self._read_bare_word()
        if word == "prefix":
            self._skip()
            prefix = self._read_prefix_name()
            self._skip()
            namespace = self._read_iriref()
            self._expect(".")
            self.graph.prefixes[prefix] = namespace
        elif word == "base":
            self._skip()
            self.base = self._read_iriref()
            self._expect(".")
        else:
            self._error(f"unknown directive '@{word}'", line, col)

    def _read_bare_word(self) -> str:
        start = self.pos
        while self._peek().isalpha():
            self._advance()
        return self.text[start : self.pos]

    def _read_prefix_name(self) -> str:
        m = re.compile(r"([A-Za-z_][A-Za-z0-9_\-]*)?:").match(self.text, self.pos)
        if m is None:
            self._error("expected a prefix name ending in ':'")
        self._advance(m.end() - self.pos)
        return m.group(1) or ""

    def _triples(self) -> None:
        self._skip()
        ch = self._peek()
        if ch == "[":
            subject = self._bnode_property_list()
            self._skip()
            if self._peek() != ".":
                self._predicate_object_list(subject)
        elif ch == "(":
            subject = self._collection()
            self._predicate_object_list(subject)
        else:
            subject = self._subject()
            self._predicate_object_list(subject)

    def _subject(self) -> Term:
        self._skip()
        ch = self._peek()
        if ch == "":
            self._error("unexpected end of input, expected a subject")
        if ch == "<":
            return iri(self._read_iriref())
        if self.text.startswith("_:", self.pos):
            return self._read_blank_label()
        if ch == '"' or ch.isdigit() or ch in "+-":
            self._error("a literal cannot be the subject of a triple")
        return self._read_pname()

    def _predicate_object_list(self, subject: Term) -> None:
        while True:
            self._skip()
            verb = self._verb()
            self._object_list(subject, verb)
            self._skip()
            if self._peek() != ";":
                break
            while self._peek() == ";":
                self._advance()
                self._skip()
            if self._peek() in (".", "]", ""):
                break

    def _verb(self) -> Term:
        self._skip()
        ch = self._peek()
        if ch == "":
            self._error("unexpected end of input, expected a predicate")
        if ch == "<":
            return iri(self._read_iriref())
        if ch == "a":
            nxt = self.text[self.pos + 1] if self.pos + 1 < self.length else ""
            if nxt not in _PN_CHARS:
                self._advance()
                return iri(RDF_TYPE)
        return self._read_pname()

    def _object_list(self, subject: Term, verb: Term) -> None:
        while True:
            obj = self._object()
            self.graph.add(Triple(subject, verb, obj))
            self._skip()
            if self._peek() != ",":
                break
            self._advance()

    def _object(self) -> Term:
        self._skip()
        ch = self._peek()
        if ch == "":
            self._error("unexpected end of input, expected an object")
        if ch == "<":
            return iri(self._read_iriref())
        if self.text.startswith("_:", self.pos):
            return self._read_blank_label()
        if ch == "[":
            return self._bnode_property_list()
        if ch == "(":
            return self._collection()
        if ch == '"':
            return self._literal()
        if ch.isdigit() or ch in "+-" or (ch == "." and self._next_is_digit()):
            return self._numeric()
        for word, _ in (("true", None), ("false", None)):
            if self.text.startswith(word, self.pos):
                after = self.pos + len(word)
                nxt = self.text[after] if after < self.length else ""
                if nxt not in _PN_CHARS:
                    self._advance(len(word))
                    return literal(word, datatype=XSD_BOOLEAN)
        return self._read_pname()

    def _next_is_digit(self) -> bool:
        return self.pos + 1 < self.length and self.text[self.pos + 1].isdigit()

    # -- terms ---------------------------------------------------------------

    def _read_iriref(self) -> str:
        line, col = self.line, self.col
        self._skip()
        if self._peek() != "<":
            self._error("expected an IRI reference")
        line, col = self.line, self.col
        self._advance()
        out: list[str] = []
        while True:
            ch = self._peek()
            if ch == "":
                self._error("unterminated IRI reference", line, col)
            if ch == ">":
                self._advance()
                break
            if ch in " \t\n\r\"{}|^`":
                self._error(f"illegal character {ch!r} in IRI reference")
            if ch == "\\":
                self._advance()
                esc = self._peek()
                if esc == "u":
                    out.append(self._read_hex_escape(4))
                elif esc == "U":
                    out.append(self._read_hex_escape(8))
                else:
                    self._error(f"invalid escape '\\{esc}' in IRI reference")
                continue
            out.append(ch)
            self._advance()
        return self._resolve("".join(out), line, col)

    def _read_hex_escape(self, width: int) -> str:
        self._advance()  # 'u' or 'U'
        digits = self.text[self.pos : self.pos + width]
        if len(digits) < width or any(c not in "0123456789abcdefABCDEF" for c in digits):
            self._error(f"invalid \\u escape, expected {width} hex digits")
        self._advance(width)
        return chr(int(digits, 16))

    def _resolve(self, ref: str, line: int, col: int) -> str:
        if _SCHEME.match(ref):
            return ref
        if self.base is None:
            self._error("relative IRI with no base", line, col)
        resolved = urljoin(self.base, ref)
        if not _SCHEME.match(resolved):
            self._error(f"could not resolve relative IRI {ref!r}", line, col)
        return resolved

    def _read_pname(self) -> Term:
        line, col = self.line, self.col
        m = _PNAME.match(self.text, self.pos)
        if m is None:
            found = self._peek() or "end of input"
            self._error(f"expected an RDF term, found {found!r}")
        prefix = m.group("prefix") or ""
        local = m.group("local")
        end = m.end()
        while local.endswith("."):  # trailing dots terminate the statement
            local = local[:-1]
            end -= 1
        self._advance(end - self.pos)
        if prefix not in self.graph.prefixes:
            self._error(f"unknown prefix '{prefix}:'", line, col)
        return iri(self.graph.prefixes[prefix] + local)

    def _read_blank_label(self) -> Term:
        self._advance(2)  # '_:'
        m = _BLANK_LABEL.match(self.text, self.pos)
        if m is None:
            self._error("expected a blank node label after '_:'")
        label = m.group(0)
        end = m.end()
        while label.endswith("."):
            label = label[:-1]
            end -= 1
        self._advance(end - self.pos)
        return blank(label)

    def _literal(self) -> Term:
        lexical = self._read_string()
        ch = self._peek()
        if ch == "@":
            self._advance()
            m = _LANGTAG.match(self.text, self.pos)
            if m is None:
                self._error("expected a language tag after '@'")
            self._advance(m.end() - self.pos)
            return literal(lexical, language=m.group(0))
        if self.text.startswith("^^", self.pos):
            self._advance(2)
            self._skip()
            if self._peek() == "<":
                datatype = self._read_iriref()
            else:
                datatype = self._read_pname().value
            return literal(lexical, datatype=datatype)
        return literal(lexical)

    def _read_string(self) -> str:
        line, col = self.line, self.col
        self._advance()  # opening quote
        out: list[str] = []
        while True:
            ch = self._peek()
            if ch == "":
                self._error("unterminated string literal", line, col)
            if ch in "\n\r":
                self._error("newline in string literal (long strings are unsupported)")
            if ch == '"':
                self._advance()
                return "".join(out)
            if ch == "\\":
                self._advance()
                esc = self._peek()
                if esc == "u":
                    out.append(self._read_hex_escape(4))
                elif esc == "U":
                    out.append(self._read_hex_escape(8))
                elif esc in _ESCAPES:
                    out.append(_ESCAPES[esc])
                    self._advance()
                else:
                    self._error(f"invalid escape sequence '\\{esc}'")
                continue
            out.append(ch)
            self._advance()

    def _numeric(self) -> Term:
        m = _NUMBER.match(self.text, self.pos)
        if m is None:
            self._error("malformed numeric literal")
        lexical = m.group(0)
        self._advance(m.end() - self.pos)
        datatype = XSD_DECIMAL if "." in lexical else XSD_INTEGER
        return literal(lexical, datatype=datatype)

    # -- blank node structures ------------------------------------------------

    def _fresh_blank(self) -> Term:
        label = f"{self._bnode_prefix}{self._bnode_count}"
        self._bnode_count += 1
        return blank(label)

    def _bnode_property_list(self) -> Term:
        self._advance()  # '['
        node = self._fresh_blank()
        self._skip()
        if self._peek() == "]":
            self._advance()
            return node
        self._predicate_object_list(node)
        self._expect("]")
        return node

    def _collection(self) -> Term:
        line, col = self.line, self.col
        self._advance()  # '('
        items: list[Term] = []
        while True:
            self._skip()
            ch = self._peek()
            if ch == "":
                self._error("unterminated collection", line, col)
            if ch == ")":
                self._advance()
                break
            items.append(self._object())
        if not items:
            return iri(RDF_NIL)
        cells = [self._fresh_blank() for _ in items]
        first = iri(RDF_FIRST)
        rest = iri(RDF_REST)
        nil = iri(RDF_NIL)
        for i, (cell, item) in enumerate(zip(cells, items)):
            self.graph.add(Triple(cell, first, item))
            self.graph.add(Triple(cell, rest, cells[i + 1] if i + 1 < len(cells) else nil))
        return cells[0]


# -- serialization -------------------------------------------------------------

_SAFE_LOCAL = re.compile(r"[A-Za-z_][A-Za-z0-9_\-]*")


def _escape_literal(value: str) -> str:
    out = value.replace("\\", "\\\\").replace('"', '\\"')
    out = out.replace("\n", "\\n").replace("\r", "\\r").replace("\t", "\\t")
    return "".join(ch if ord(ch) >= 0x20 else f"\\u{ord(ch):04X}" for ch in out)


def render_term(term: Term, prefixes: dict[str, str] | None = None) -> str:
    """Render one term in Turtle syntax, compressing IRIs via ``prefixes``."""
    if term.is_blank:
        return f"_:{term.value}"
    if term.is_iri:
        if prefixes:
            for prefix, namespace in sorted(prefixes.items(), key=lambda kv: -len(kv[1])):
                if term.value.startswith(namespace) and term.value != namespace:
                    local = term.value[len(namespace):]
                    if _SAFE_LOCAL.fullmatch(local):
                        return f"{prefix}:{local}"
        return f"<{term.value}>"
    lexical = f'"{_escape_literal(term.value)}"'
    if term.language is not None:
        return f"{lexical}@{term.language}"
    if term.datatype == XSD_STRING:
        return lexical
    return f"{lexical}^^{render_term(iri(term.datatype), prefixes)}"


def sorted_triples(graph: Graph) -> list[Triple]:
    """Triples in serialization order: by subject, rdf:type first, then by object."""
    rdf_type = iri(RDF_TYPE)

    def key(t: Triple) -> tuple:
        return (
            t.subject.sort_key(),
            0 if t.predicate == rdf_type else 1,
            t.predicate.sort_key(),
            t.object.sort_key(),
        )

    return sorted(graph, key=key)


def serialize_turtle(graph: Graph) -> str:
    """Serialize a graph deterministically.

    Prefixes and subjects are sorted, predicates are grouped per subject with
    rdf:type rendered first as ``a``, and objects are sorted within each
    predicate. Re-parsing the output yields an isomorphic graph.
    """
    lines = [f"@prefix {p}: <{graph.prefixes[p]}> ." for p in sorted(graph.prefixes)]
    triples = sorted_triples(graph)
    if lines and triples:
        lines.append("")
    rdf_type = iri(RDF_TYPE)

    i = 0
    while i < len(triples):
        subject = triples[i].subject
        parts: list[str] = []
        while i < len(triples) and triples[i].subject == subject:
            predicate = triples[i].predicate
            objs: list[str] = []
            while i < len(triples) and triples[i].subject == subject and triples[i].predicate == predicate:
                objs.append(render_term(triples[i].object, graph.prefixes))
                i += 1
            verb = "a" if predicate == rdf_type else render_term(predicate, graph.prefixes)
            parts.append(f"{verb} {', '.join(objs)}")
        subject_text = render_term(subject, graph.prefixes)
        if len(parts) == 1:
            lines.append(f"{subject_text} {parts[0]} .")
        else:
            lines.append(subject_text + " " + " ;\n    ".join(parts) + " .")
    return "\n".join(lines) + ("\n" if lines else "")
