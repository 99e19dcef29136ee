from __future__ import annotations

from pathlib import Path

import pytest

from shaclforms.forms import compile_form
from shaclforms.rdf import parse_turtle
from shaclforms.shapes import load_shapes, resolve_inheritance
from shaclforms.validators import Condition, ValidatorBinding

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = REPO_ROOT / "fixtures"


@pytest.fixture(scope="session")
def figure_graph():
    return parse_turtle((FIXTURES / "figure_shape.ttl").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def figure_shapes(figure_graph):
    return resolve_inheritance(load_shapes(figure_graph))


@pytest.fixture(scope="session")
def ocdm_graph():
    return parse_turtle((FIXTURES / "ocdm_shapes.ttl").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def ocdm_shapes(ocdm_graph):
    return resolve_inheritance(load_shapes(ocdm_graph))


def doi_bindings():
    from helpers import DOI_PATH, JOURNAL_ARTICLE, RESOURCE_SHAPE

    from shaclforms.rdf import iri

    condition = Condition(when_path="http://www.w3.org/1999/02/22-rdf-syntax-ns#type",
                          equals=iri(JOURNAL_ARTICLE))
    return [
        ValidatorBinding("doi_syntax", RESOURCE_SHAPE, DOI_PATH, "syntactic", condition),
        ValidatorBinding("doi_resolves", RESOURCE_SHAPE, DOI_PATH, "external", condition),
    ]


@pytest.fixture(scope="session")
def shipped_bindings():
    return doi_bindings()


@pytest.fixture(scope="session")
def ocdm_schema(ocdm_shapes, shipped_bindings):
    from helpers import RESOURCE_SHAPE

    shape = ocdm_shapes.shapes[RESOURCE_SHAPE]
    return compile_form(shape, shipped_bindings, {"http://purl.org/spar/datacite/hasIdentifier": "DOI"})


@pytest.fixture()
def mock_probe():
    import json

    from shaclforms.validators import MockResolverProbe

    fixtures = json.loads((FIXTURES / "probe_fixtures.json").read_text(encoding="utf-8"))
    return MockResolverProbe(fixtures)
