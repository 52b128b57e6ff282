import pytest

from polystab.config import load_defaults
from polystab.core.enums import Suite
from polystab.verify import SuiteOutcome, run_fixtures, run_identities, run_oracle_m1, run_oracle_m2, run_suite


@pytest.fixture(scope="module")
def config():
    return load_defaults()


def test_fixtures_pass(config):
    outcome = run_fixtures(config)
    failed = [c.name for c in outcome.checks if not c.passed]
    assert failed == []
    assert outcome.passed
    assert not outcome.internal_disagreement
    assert len(outcome.reports) == 10


def test_identities_pass(config):
    small = {**config, "identities": {"seed": 7, "samples": 10, "max_m": 6}}
    outcome = run_suite(Suite.IDENTITIES, small)
    assert outcome.passed, [c.detail for c in outcome.checks if not c.passed]


def test_identities_are_seeded(config):
    small = {**config, "identities": {"seed": 3, "samples": 3, "max_m": 4}}
    first = run_identities(small).to_dict()
    second = run_identities(small).to_dict()
    assert first == second


def test_oracle_m1_adjudicates_for_derived_routes(config):
    small = {**config, "oracle": {**config["oracle"], "grid": 128, "modes": [0, 1, 2]}}
    outcome = run_oracle_m1(small)
    assert outcome.passed, [(c.name, c.detail) for c in outcome.checks if not c.passed]
    verdict = next(r for r in outcome.reports if "status" in r)
    assert verdict["status"] == "printedDiscrepancy"
    assert verdict["adjudicatedSource"] == "general"


def test_oracle_m2_cancellation(config):
    small = {**config, "oracle_m2": {**config["oracle_m2"], "n_lat": 16, "n_lon": 32, "modes": ["z", "const"]}}
    outcome = run_oracle_m2(small)
    assert outcome.passed
    assert len(outcome.checks) == 4


def test_internal_disagreement_fails_the_suite():
    outcome = SuiteOutcome(Suite.FIXTURES)
    outcome.check("anything", True)
    outcome.internal_disagreement = True
    assert not outcome.passed
    assert outcome.to_dict()["internalDisagreement"] is True
