from fractions import Fraction

import pytest

from polystab.core.enums import Adjudication, Energy, OracleQuantity
from polystab.core.errors import ValidationError
from polystab.forms import adjudicate, compare_routes, display_checks
from polystab.oracle import OracleResult


def _result(value: float, refs: dict[str, float]) -> OracleResult:
    return OracleResult(
        OracleQuantity.SECOND_VARIATION,
        {"Q": value},
        {route: {"Q": ref} for route, ref in refs.items()},
        rtol=1e-6,
    )


@pytest.fixture(scope="module")
def circle_report():
    return compare_routes(1)


class TestCompareRoutes:
    def test_only_middle_rows_disagree(self, circle_report):
        bad = {(row.quantity, row.degree) for row in circle_report.mismatches}
        assert bad == {("Q4", 1), ("Q4", 2), ("Q4ES", 1), ("Q4ES", 2), ("N3", 1), ("N3", 2)}

    def test_derived_routes_agree(self, circle_report):
        assert circle_report.derived_agree
        assert not circle_report.agreement

    def test_row_values(self, circle_report):
        row = next(r for r in circle_report.rows if r.quantity == "Q4" and r.degree == 2)
        assert row.values["printed"] == 791
        assert row.values["general"] == 505
        assert row.values["small-sphere/printed"] == 791
        assert row.values["small-sphere/composition"] == 505
        assert row.agree(("general", "small-sphere/composition"))

    @pytest.mark.parametrize("m", range(2, 11))
    def test_derived_agree_for_every_m(self, m):
        assert compare_routes(m).derived_agree

    def test_to_dict(self, circle_report):
        data = circle_report.to_dict()
        assert data["status"] is None
        assert data["K"] == "1"
        assert len(data["displayChecks"]) == 2


class TestDisplayChecks:
    def test_e4_display_off_by_cubic(self):
        checks = {c.energy: c for c in display_checks(2)}
        e4 = checks[Energy.E4]
        assert not e4.match
        assert e4.difference == (0, 0, 0, 180)
        assert e4.displayed_value - e4.exact_value == 180 * 8

    def test_es4_display_matches(self):
        checks = {c.energy: c for c in display_checks(2)}
        es4 = checks[Energy.ES4]
        assert es4.match
        assert es4.exact_value == 119552
        assert es4.to_dict()["difference"] == "0"


class TestAdjudicate:
    def test_needs_results(self, circle_report):
        with pytest.raises(ValidationError):
            adjudicate(circle_report, [])

    def test_printed_discrepancy(self, circle_report):
        results = [_result(14052.0, {"general": 14052.0, "printed": 17764.0})]
        verdict = adjudicate(circle_report, results)
        assert verdict.status == Adjudication.PRINTED_DISCREPANCY
        assert verdict.adjudicated_source == "general"
        assert verdict.oracle_quantities == ("second-variation",)

    def test_shared_support_does_not_rescue_printed(self, circle_report):
        # λ = 0 agrees on every route; the first level decides
        results = [
            _result(-216.0, {"general": -216.0, "printed": -216.0}),
            _result(14052.0, {"general": 14052.0, "printed": 17764.0}),
        ]
        assert adjudicate(circle_report, results).status == Adjudication.PRINTED_DISCREPANCY

    def test_oracle_siding_with_printed(self, circle_report):
        results = [_result(17764.0, {"general": 14052.0, "printed": 17764.0})]
        verdict = adjudicate(circle_report, results)
        assert verdict.status == Adjudication.INTERNAL_DISAGREEMENT
        assert verdict.adjudicated_source == "printed"

    def test_oracle_with_neither(self, circle_report):
        results = [_result(1.0, {"general": 14052.0, "printed": 17764.0})]
        verdict = adjudicate(circle_report, results)
        assert verdict.status == Adjudication.INTERNAL_DISAGREEMENT
        assert verdict.adjudicated_source is None

    def test_all_agree_when_rows_match(self):
        report = compare_routes(1)
        agreeing = type(report)(report.m, report.t, report.K, tuple(r for r in report.rows if r.match))
        verdict = adjudicate(agreeing, [_result(0.0, {"general": 0.0})])
        assert verdict.status == Adjudication.ALL_AGREE
        assert verdict.adjudicated_source == "all"
