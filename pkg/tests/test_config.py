import pytest

from polystab.config import DEFAULT_CONFIG_FILE, config_file_path, getenv, getenv_bool, load_defaults, merge_overrides
from polystab.core.errors import ValidationError


def test_defaults_block():
    config = load_defaults()
    assert config["t"] == "3"
    assert config["oracle"]["scheme"] == "spectral"
    assert config["oracle_m2"]["modes"] == ["z", "xy", "const"]


def test_config_file_precedence(tmp_path, monkeypatch):
    monkeypatch.delenv("POLYSTAB_CONFIG", raising=False)
    assert config_file_path() == DEFAULT_CONFIG_FILE
    monkeypatch.setenv("POLYSTAB_CONFIG", str(tmp_path / "env.yml"))
    assert config_file_path() == tmp_path / "env.yml"
    assert config_file_path(str(tmp_path / "cli.yml")) == tmp_path / "cli.yml"


def test_missing_default_block(tmp_path):
    path = tmp_path / "bad.yml"
    path.write_text("other:\n  t: '3'\n")
    with pytest.raises(ValidationError):
        load_defaults(path)
    with pytest.raises(ValidationError):
        load_defaults(tmp_path / "missing.yml")


def test_merge_overrides_is_deep_and_skips_none():
    base = {"t": "3", "oracle": {"grid": 256, "step": 1e-3}}
    merged = merge_overrides(base, {"t": None, "oracle": {"grid": 64, "step": None}})
    assert merged == {"t": "3", "oracle": {"grid": 64, "step": 1e-3}}
    assert base["oracle"]["grid"] == 256


def test_getenv_aliases(monkeypatch):
    monkeypatch.delenv("POLYSTAB_A", raising=False)
    monkeypatch.setenv("POLYSTAB_B", "x")
    assert getenv("POLYSTAB_A", None, "POLYSTAB_B") == "x"
    monkeypatch.setenv("POLYSTAB_FLAG", "Yes")
    assert getenv_bool("POLYSTAB_FLAG")
    assert not getenv_bool("POLYSTAB_UNSET_FLAG")
