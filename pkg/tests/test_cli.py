import json

import pytest

from polystab.cli import EXIT_ERROR, EXIT_EXPECTATION, EXIT_OK, build_config, create_argument_parser, main, parse_m_range
from polystab.core.errors import ValidationError


@pytest.fixture(autouse=True)
def _stdout_only(monkeypatch):
    monkeypatch.delenv("POLYSTAB_OUTPUT_DIR", raising=False)
    monkeypatch.delenv("POLYSTAB_CONFIG", raising=False)


def _json(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


def test_parse_m_range():
    assert parse_m_range("1..4") == [1, 2, 3, 4]
    assert parse_m_range("2,5") == [2, 5]
    with pytest.raises(ValidationError):
        parse_m_range("0..3")
    with pytest.raises(ValidationError):
        parse_m_range("a..b")


def test_spectrum(capsys):
    assert main(["spectrum", "--dim", "1", "--r2", "1/4", "--levels", "3", "--format", "json"]) == EXIT_OK
    doc = _json(capsys)
    assert doc["schema"] == "polystab.spectrum.v1"
    assert [lv["lambda"] for lv in doc["payload"]["levels"]] == ["0", "4", "16"]


def test_float_radius_refused(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["spectrum", "--dim", "1", "--r2", "0.25", "--levels", "3"])
    assert exc.value.code == 2


def test_tension_solve(capsys):
    assert main(["tension", "--m", "4", "--solve", "--format", "json"]) == EXIT_OK
    payload = _json(capsys)["payload"]
    assert payload["properRadius"] == {"t": "3", "a": "1/2"}
    assert payload["tau4"] == "0"


def test_tension_off_radius(capsys):
    assert main(["tension", "--m", "1", "--t", "1", "--format", "json"]) == EXIT_OK
    payload = _json(capsys)["payload"]
    assert payload["tau4"] == "2"
    assert payload["hypersphere"]["t"] == "1"


def test_form_general(capsys):
    assert main(["form", "--energy", "e4", "--m", "1", "--source", "general", "--format", "json"]) == EXIT_OK
    assert _json(capsys)["payload"]["coeffs"] == ["-216", "171", "505", "82", "1"]


def test_form_csv_rows(capsys):
    assert main(["form", "--m", "2", "--source", "small-sphere", "--norms", "printed", "--format", "csv"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "energy,source,norms,m,t,K,degree,coefficient"
    assert len(lines) == 6
    assert lines[1].startswith("e4,small-sphere,printed,2,3,1,0,")


def test_form_off_small_sphere_is_a_domain_error(capsys):
    assert main(["form", "--m", "2", "--source", "printed", "--t", "1"]) == EXIT_ERROR


def test_index_expect(capsys):
    assert main(["index", "--energy", "es4", "--m", "1..3", "--expect", "1", "--format", "json"]) == EXIT_OK
    doc = _json(capsys)
    assert doc["payload"]["expect"]["differences"] == []
    assert len(doc["payload"]["reports"]) == 9


def test_index_expect_mismatch(capsys):
    code = main(["index", "--energy", "e4", "--m", "2", "--source", "general", "--expect", "0", "--format", "json"])
    assert code == EXIT_EXPECTATION
    diff = _json(capsys)["payload"]["expect"]["differences"]
    assert diff == [{"m": 2, "source": "general", "index": 1, "expected": 0}]


def test_index_hat_skips_small_sphere(capsys):
    assert main(["index", "--energy", "hat", "--m", "3", "--format", "json"]) == EXIT_OK
    sources = [r["source"] for r in _json(capsys)["payload"]["reports"]]
    assert sources == ["printed", "general"]


def test_verify_fixtures(capsys):
    assert main(["verify", "fixtures", "--format", "json"]) == EXIT_OK
    assert _json(capsys)["payload"]["passed"] is True


def test_oracle_bundle_norms(capsys):
    code = main(["oracle", "bundle-norms", "--t", "3", "--grid", "64", "--modes", "1", "--format", "json"])
    assert code == EXIT_OK
    result = _json(capsys)["payload"]["results"][0]
    assert result["verdicts"] == {"composition": True, "printed": False}


def test_oracle_m2_modes_are_names(capsys):
    code = main(["oracle", "qhat-m2", "--modes", "z", "--format", "json"])
    assert code == EXIT_OK
    assert _json(capsys)["payload"]["results"][0]["metadata"]["mode"] == "z"


def test_show_config(capsys):
    assert main(["verify", "oracle-m1", "--grid", "512", "--no-richardson", "--show-config"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "POLYSTAB CONFIGURATION" in out
    assert "512" in out


def test_build_config_overrides():
    args = create_argument_parser().parse_args(["form", "--m", "2", "--a", "1/3", "--K", "2"])
    config = build_config(args)
    assert config["a"] == "1/3"
    assert "t" not in config
    assert config["K"] == "2"


def test_config_file(tmp_path, capsys):
    path = tmp_path / "run.yml"
    path.write_text('default:\n  t: "1"\n  energy: e4\n')
    assert main(["form", "--m", "1", "--config-file", str(path), "--format", "json"]) == EXIT_OK
    assert _json(capsys)["payload"]["t"] == "1"
