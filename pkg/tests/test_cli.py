import json

import pytest
from helpers import JOURNAL_ARTICLE, RESOURCE_SHAPE, TITLE, isomorphic

from conftest import FIXTURES
from test_service import write_config

from shaclforms.cli import main
from shaclforms.rdf import parse_turtle

RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"
DOI_PATH = "http://purl.org/spar/datacite/hasIdentifier"

CONFIG = str(FIXTURES / "config.json")


class TestValidateCommand:
    def test_conforming_exits_0(self, capsys):
        code = main(["--config", CONFIG, "validate", str(FIXTURES / "data" / "conforming.ttl")])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert report["conforms"] is True

    def test_two_titles_exits_1_with_report_on_stdout(self, capsys):
        code = main(["--config", CONFIG, "validate", str(FIXTURES / "data" / "two_titles.ttl")])
        assert code == 1
        report = json.loads(capsys.readouterr().out)
        assert report["conforms"] is False
        assert report["results"][0]["sourceConstraintComponent"] == "max_count"

    def test_missing_file_exits_2(self, capsys):
        code = main(["--config", CONFIG, "validate", str(FIXTURES / "data" / "missing.ttl")])
        assert code == 2

    def test_unparseable_file_exits_2(self, tmp_path):
        bad = tmp_path / "bad.ttl"
        bad.write_text("ex:s ex:p ex:o .")  # unknown prefix
        assert main(["--config", CONFIG, "validate", str(bad)]) == 2

    def test_missing_config_exits_2(self, tmp_path):
        code = main(["--config", str(tmp_path / "none.json"), "validate", "x.ttl"])
        assert code == 2


class TestCompileFormCommand:
    def test_prints_schema(self, capsys):
        code = main(["--config", CONFIG, "compile-form", RESOURCE_SHAPE])
        assert code == 0
        schema = json.loads(capsys.readouterr().out)
        assert schema["schema_version"] == "1"
        assert len(schema["fields"]) == 4

    def test_unknown_shape_exits_2(self):
        assert main(["--config", CONFIG, "compile-form", "http://nope/"]) == 2


class TestSubmitCommand:
    def payload_file(self, tmp_path, values):
        path = tmp_path / "payload.json"
        path.write_text(json.dumps({"shape_id": RESOURCE_SHAPE, "values": values}))
        return str(path)

    def test_dry_run_prints_turtle(self, tmp_path, capsys):
        payload = self.payload_file(
            tmp_path, {RDF_TYPE: [JOURNAL_ARTICLE], TITLE: ["T"], DOI_PATH: ["10.1145/3594721"]}
        )
        code = main(["--config", CONFIG, "submit", payload, "--dry-run"])
        assert code == 0
        out = capsys.readouterr().out
        turtle = "\n".join(line for line in out.splitlines() if not line.startswith("#"))
        assert len(parse_turtle(turtle)) == 3

    def test_dry_run_to_file(self, tmp_path, capsys):
        payload = self.payload_file(tmp_path, {RDF_TYPE: [JOURNAL_ARTICLE]})
        out = tmp_path / "out.ttl"
        code = main(["--config", CONFIG, "submit", payload, "--dry-run", "--out", str(out)])
        assert code == 0
        assert len(parse_turtle(out.read_text())) == 1

    def test_rejected_payload_exits_1(self, tmp_path, capsys):
        payload = self.payload_file(
            tmp_path,
            {
                RDF_TYPE: ["http://purl.org/spar/fabio/Expression", JOURNAL_ARTICLE],
                TITLE: ["A", "B"],
            },
        )
        code = main(["--config", CONFIG, "submit", payload])
        assert code == 1
        report = json.loads(capsys.readouterr().out)
        assert report["conforms"] is False

    def test_missing_payload_exits_2(self):
        assert main(["--config", CONFIG, "submit", "/does/not/exist.json"]) == 2


class TestUsage:
    def test_no_command_is_a_usage_error(self):
        with pytest.raises(SystemExit) as info:
            main([])
        assert info.value.code == 2

    def test_unknown_command_is_a_usage_error(self):
        with pytest.raises(SystemExit) as info:
            main(["frobnicate"])
        assert info.value.code == 2
