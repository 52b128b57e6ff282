import json
from fractions import Fraction

import pytest

from polystab.core.enums import Energy, OutputFormat
from polystab.core.errors import ValidationError
from polystab.forms import compare_routes
from polystab.report import RunConfig, build_document, canonical_json, content_digest, emit, load_manifest, render
from polystab.report.manifest import MANIFEST_FILE


class TestRender:
    def test_json_is_canonical(self):
        cfg = RunConfig("spectrum", OutputFormat.JSON, {"r2": Fraction(1, 4), "dim": 1})
        first = render("spectrum", cfg, {"levels": []}, [])
        second = render("spectrum", cfg, {"levels": []}, [])
        assert first == second
        doc = json.loads(first)
        assert doc["schema"] == "polystab.spectrum.v1"
        assert doc["config"]["params"] == {"dim": 1, "r2": "1/4"}
        body = {k: v for k, v in doc.items() if k != "digest"}
        assert doc["digest"] == content_digest(body)

    def test_digest_changes_with_params(self):
        a = build_document("form", RunConfig("form", params={"m": 1}), {})
        b = build_document("form", RunConfig("form", params={"m": 2}), {})
        assert a["digest"] != b["digest"]

    def test_canonical_json_sorts_and_formats(self):
        assert canonical_json({"b": Fraction(3, 6), "a": Energy.ES4}) == '{"a":"es4","b":"1/2"}'

    def test_csv_columns(self):
        cfg = RunConfig("spectrum", OutputFormat.CSV)
        text = render("spectrum", cfg, {}, [{"j": 1, "lambda": Fraction(4), "multiplicity": 2}])
        assert text.splitlines() == ["j,lambda,multiplicity", "1,4,2"]

    def test_empty_table(self):
        text = render("verify", RunConfig("verify"), {}, [])
        assert text.split() == ["suite", "check", "passed", "detail"]

    def test_unknown_kind(self):
        with pytest.raises(ValidationError):
            render("nope", RunConfig("form"), {}, [])

    def test_run_config_validation(self):
        with pytest.raises(ValidationError):
            RunConfig("plot")
        with pytest.raises(ValidationError):
            RunConfig("form", params={"x": object()})


class TestEmit:
    def test_out_file(self, tmp_path):
        target = tmp_path / "nested" / "spectrum.json"
        cfg = RunConfig("spectrum", OutputFormat.JSON, out=str(target))
        text = emit("spectrum", cfg, {"levels": []}, [])
        assert target.read_text(encoding="utf-8") == text

    def test_output_dir_env(self, tmp_path, monkeypatch):
        monkeypatch.setenv("POLYSTAB_OUTPUT_DIR", str(tmp_path))
        emit("index", RunConfig("index", OutputFormat.CSV), {}, [])
        assert (tmp_path / "index.csv").is_file()

    def test_stdout(self, capsys, monkeypatch):
        monkeypatch.delenv("POLYSTAB_OUTPUT_DIR", raising=False)
        emit("spectrum", RunConfig("spectrum"), {}, [{"j": 0, "lambda": Fraction(0), "multiplicity": 1}])
        assert "multiplicity" in capsys.readouterr().out


class TestManifest:
    def test_packaged_manifest(self):
        manifest = load_manifest()
        assert manifest.adjudicated == "general"
        assert {(c.quantity, c.degree) for c in manifest.coefficients} == {
            ("Q4", 1),
            ("Q4", 2),
            ("Q4ES", 1),
            ("Q4ES", 2),
            ("N3", 1),
            ("N3", 2),
        }

    @pytest.mark.parametrize("m", range(1, 11))
    def test_every_mismatch_is_listed(self, m):
        manifest = load_manifest()
        report = compare_routes(m)
        assert report.mismatches
        assert manifest.unlisted_rows(report) == []
        assert manifest.unlisted_displays(report) == []

    def test_edited_entry_no_longer_covers(self, tmp_path):
        document = json.loads(MANIFEST_FILE.read_text(encoding="utf-8"))
        document["coefficients"][0]["printed"] = [480, 287, 25]
        path = tmp_path / "manifest.json"
        path.write_text(json.dumps(document), encoding="utf-8")
        unlisted = load_manifest(path).unlisted_rows(compare_routes(1))
        assert [(r.quantity, r.degree) for r in unlisted] == [("Q4", 2)]

    def test_schema_checked(self, tmp_path):
        path = tmp_path / "manifest.json"
        path.write_text(json.dumps({"schema": "other"}), encoding="utf-8")
        with pytest.raises(ValidationError):
            load_manifest(path)
        with pytest.raises(ValidationError):
            load_manifest(tmp_path / "missing.json")
