import logging

from polystab.logging import get_logger, set_level


def test_logger_configured_once():
    first = get_logger("polystab.test_once")
    second = get_logger("polystab.test_once")
    assert first is second
    assert len(first.handlers) == 1
    assert not first.propagate


def test_env_level(monkeypatch):
    monkeypatch.setenv("POLYSTAB_LOG_LEVEL", "debug")
    assert get_logger("polystab.test_env").level == logging.DEBUG


def test_set_level_touches_only_package_loggers():
    ours = get_logger("polystab.test_relevel")
    other = get_logger("elsewhere.test_relevel", level=logging.ERROR)
    set_level(logging.INFO)
    assert ours.level == logging.INFO
    assert ours.handlers[0].level == logging.INFO
    assert other.level == logging.ERROR
