import random

import pytest

from shaclforms.rdf import (
    Graph,
    MalformedListError,
    Term,
    Triple,
    blank,
    iri,
    literal,
    parse_turtle,
    read_list,
    serialize_turtle,
    validate_lexical,
)
from shaclforms.rdf.namespaces import (
    RDF_FIRST,
    RDF_NIL,
    RDF_REST,
    XSD_ANYURI,
    XSD_BOOLEAN,
    XSD_DATE,
    XSD_DATETIME,
    XSD_DECIMAL,
    XSD_INTEGER,
    XSD_STRING,
)

EX = "http://example.org/"


class TestTerm:
    def test_plain_literal_normalizes_to_xsd_string(self):
        assert literal("x").datatype == XSD_STRING
        assert literal("x") == literal("x", datatype=XSD_STRING)

    def test_language_and_datatype_are_exclusive(self):
        with pytest.raises(ValueError):
            Term("literal", "x", datatype=XSD_STRING, language="en")

    def test_language_tag_is_case_normalized(self):
        assert literal("x", language="EN").language == "en"

    def test_non_literal_cannot_carry_datatype(self):
        with pytest.raises(ValueError):
            Term("iri", EX + "a", datatype=XSD_STRING)

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            Term("variable", "x")


class TestTriple:
    def test_literal_subject_rejected(self):
        with pytest.raises(ValueError):
            Triple(literal("x"), iri(EX + "p"), literal("y"))

    def test_non_iri_predicate_rejected(self):
        with pytest.raises(ValueError):
            Triple(iri(EX + "s"), blank("b"), literal("y"))


class TestGraph:
    def test_duplicate_insert_leaves_size_unchanged(self):
        g = Graph()
        t = Triple(iri(EX + "s"), iri(EX + "p"), literal("o"))
        g.add(t)
        g.add(t)
        assert len(g) == 1

    def test_set_semantics_on_random_graphs(self):
        rng = random.Random(7)
        g = Graph()
        triples = [
            Triple(iri(EX + f"s{rng.randint(0, 3)}"), iri(EX + "p"), literal(str(rng.randint(0, 5))))
            for _ in range(50)
        ]
        for t in triples:
            g.add(t)
        size = len(g)
        for t in triples:
            g.add(t)
        assert len(g) == size == len(set(triples))

    def test_match_unbound_returns_all(self):
        g = parse_turtle(f"@prefix ex: <{EX}> . ex:a ex:p ex:b , ex:c .")
        assert len(g.match()) == 2

    def test_match_bound_positions(self, figure_graph):
        hits = figure_graph.match(None, iri("http://www.w3.org/ns/shacl#targetClass"), None)
        assert len(hits) == 1
        assert hits[0].object == iri("http://purl.org/spar/fabio/Expression")

    def test_match_absent_triple_is_empty(self):
        g = Graph()
        g.add(Triple(iri(EX + "s"), iri(EX + "p"), literal("o")))
        assert g.match(iri(EX + "s"), iri(EX + "p"), literal("other")) == []

    def test_fully_bound_match_returns_zero_or_one(self):
        rng = random.Random(3)
        g = Graph()
        for _ in range(60):
            g.add(
                Triple(
                    iri(EX + f"s{rng.randint(0, 2)}"),
                    iri(EX + f"p{rng.randint(0, 2)}"),
                    literal(str(rng.randint(0, 2))),
                )
            )
        for t in g:
            assert len(g.match(t.subject, t.predicate, t.object)) == 1
        assert g.match(iri(EX + "nope"), iri(EX + "p0"), literal("0")) == []

    def test_match_output_is_sorted(self):
        g = Graph()
        g.add(Triple(iri(EX + "z"), iri(EX + "p"), literal("1")))
        g.add(Triple(iri(EX + "a"), iri(EX + "p"), literal("1")))
        subjects = [t.subject.value for t in g.match()]
        assert subjects == sorted(subjects)


class TestReadList:
    def test_nil_is_empty(self):
        assert read_list(Graph(), iri(RDF_NIL)) == []

    def test_figure_list_order(self, figure_graph):
        head = figure_graph.match(None, iri("http://www.w3.org/ns/shacl#in"), None)[0].object
        names = [t.value.rsplit("/", 1)[-1] for t in read_list(figure_graph, head)]
        assert names == [
            "ArchivalDocument",
            "Book",
            "BookChapter",
            "JournalArticle",
            "Thesis",
            "ProceedingsPaper",
        ]

    def test_two_cell_list_from_collection_syntax(self):
        g = parse_turtle("@prefix ex: <http://e/> . ex:a ex:p ( ex:x ex:y ) .")
        assert len(g) == 5  # 1 assertion + 2 rdf:first + 2 rdf:rest
        head = g.match(iri("http://e/a"), iri("http://e/p"), None)[0].object
        assert read_list(g, head) == [iri("http://e/x"), iri("http://e/y")]

    def test_missing_rest_is_malformed(self):
        g = Graph()
        cell = blank("c")
        g.add(Triple(cell, iri(RDF_FIRST), literal("x")))
        with pytest.raises(MalformedListError):
            read_list(g, cell)

    def test_cycle_is_detected(self):
        g = Graph()
        a, b = blank("a"), blank("b")
        g.add(Triple(a, iri(RDF_FIRST), literal("1")))
        g.add(Triple(a, iri(RDF_REST), b))
        g.add(Triple(b, iri(RDF_FIRST), literal("2")))
        g.add(Triple(b, iri(RDF_REST), a))
        with pytest.raises(MalformedListError):
            read_list(g, a)

    def test_round_trip_preserves_length_and_order(self):
        rng = random.Random(11)
        for _ in range(20):
            n = rng.randint(0, 20)
            members = " ".join(f"ex:m{i}" for i in range(n))
            g = parse_turtle(f"@prefix ex: <{EX}> . ex:a ex:p ( {members} ) .")
            text = serialize_turtle(g)
            g2 = parse_turtle(text)
            head = g2.match(iri(EX + "a"), iri(EX + "p"), None)[0].object
            got = read_list(g2, head)
            assert [t.value for t in got] == [EX + f"m{i}" for i in range(n)]


class TestValidateLexical:
    @pytest.mark.parametrize(
        "value,datatype,expected",
        [
            ("hello", XSD_STRING, True),
            ("", XSD_STRING, True),
            ("12.5", XSD_INTEGER, False),
            ("12", XSD_INTEGER, True),
            ("-7", XSD_INTEGER, True),
            ("+0", XSD_INTEGER, True),
            ("", XSD_INTEGER, False),
            ("1e3", XSD_INTEGER, False),
            ("12.5", XSD_DECIMAL, True),
            (".5", XSD_DECIMAL, True),
            ("12.", XSD_DECIMAL, True),
            ("abc", XSD_DECIMAL, False),
            ("true", XSD_BOOLEAN, True),
            ("TRUE", XSD_BOOLEAN, False),
            ("0", XSD_BOOLEAN, True),
            ("2023-09-01", XSD_DATE, True),
            ("2023-02-29", XSD_DATE, False),
            ("2024-02-29", XSD_DATE, True),
            ("2023-13-01", XSD_DATE, False),
            ("2023-9-1", XSD_DATE, False),
            ("2023-09-01Z", XSD_DATE, True),
            ("2023-09-01T10:00:00", XSD_DATETIME, True),
            ("2023-09-01T24:00:00", XSD_DATETIME, True),
            ("2023-09-01T24:00:01", XSD_DATETIME, False),
            ("2023-09-01T10:61:00", XSD_DATETIME, False),
            ("2023-09-01", XSD_DATETIME, False),
            ("https://doi.org", XSD_ANYURI, True),
            ("has space", XSD_ANYURI, False),
        ],
    )
    def test_lexical_forms(self, value, datatype, expected):
        assert validate_lexical(value, datatype) is expected

    def test_unknown_datatype_passes(self):
        assert validate_lexical("anything at all", EX + "madeUp") is True

    def test_integer_against_hand_rolled_grammar(self):
        rng = random.Random(5)
        alphabet = "0123456789+-. e"
        for _ in range(500):
            s = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 6)))
            body = s[1:] if s[:1] in "+-" else s
            expected = body != "" and all(c in "0123456789" for c in body)
            assert validate_lexical(s, XSD_INTEGER) is expected
