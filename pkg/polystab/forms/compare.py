"""Coefficient-by-coefficient comparison of the derivation routes.

The derived routes (general form and small-sphere form fed by composed bundle
norms) and the published tables are never merged: every λ-coefficient is kept
per route, and a report only gets an adjudication once the numeric oracle has
weighed in.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Optional, Sequence

from ..core.enums import Adjudication, Energy, Source
from ..core.errors import ValidationError
from ..exact import LambdaPoly, format_m_poly, format_rational
from ..exact.poly import eval_univariate
from ..exact.rational import RationalLike, to_rational
from ..geometry import Hypersphere
from ..logging import get_logger
from .printed import PRINTED_FIRST_LEVEL, printed_bundle_norms, printed_table
from .routes import q4_form, q4es_form
from .sections import bundle_norm_polys

if TYPE_CHECKING:
    from ..oracle.result import OracleResult

logger = get_logger(__name__)

ROUTE_PRINTED = "printed"
ROUTE_GENERAL = "general"
ROUTE_SMALL_COMPOSITION = "small-sphere/composition"
ROUTE_SMALL_PRINTED = "small-sphere/printed"
ROUTE_COMPOSITION = "composition"

FORM_ROUTES = (ROUTE_PRINTED, ROUTE_GENERAL, ROUTE_SMALL_COMPOSITION, ROUTE_SMALL_PRINTED)
DERIVED_ROUTES = (ROUTE_GENERAL, ROUTE_SMALL_COMPOSITION)


@dataclass(frozen=True)
class CoefficientRow:
    quantity: str
    degree: int
    values: dict[str, Fraction]

    @property
    def match(self) -> bool:
        return len(set(self.values.values())) <= 1

    def agree(self, routes: Sequence[str]) -> bool:
        return len({self.values[r] for r in routes if r in self.values}) <= 1

    def to_dict(self) -> dict[str, Any]:
        return {
            "quantity": self.quantity,
            "degree": self.degree,
            "values": {k: format_rational(v) for k, v in self.values.items()},
            "match": self.match,
        }


@dataclass(frozen=True)
class DisplayCheck:
    """A published m-polynomial display against the exact value of the printed form at λ = 4m."""

    energy: Energy
    m: int
    displayed: tuple[Fraction, ...]
    exact: tuple[Fraction, ...]

    @property
    def difference(self) -> tuple[Fraction, ...]:
        n = max(len(self.displayed), len(self.exact))
        diff = [
            (self.displayed[k] if k < len(self.displayed) else 0) - (self.exact[k] if k < len(self.exact) else 0)
            for k in range(n)
        ]
        while diff and diff[-1] == 0:
            diff.pop()
        return tuple(Fraction(d) for d in diff)

    @property
    def match(self) -> bool:
        return not self.difference

    @property
    def displayed_value(self) -> Fraction:
        return eval_univariate(self.displayed, self.m)

    @property
    def exact_value(self) -> Fraction:
        return eval_univariate(self.exact, self.m)

    def to_dict(self) -> dict[str, Any]:
        return {
            "energy": self.energy.value,
            "m": self.m,
            "displayed": format_m_poly(self.displayed),
            "exact": format_m_poly(self.exact),
            "difference": format_m_poly(self.difference),
            "displayedValue": format_rational(self.displayed_value),
            "exactValue": format_rational(self.exact_value),
            "match": self.match,
        }


@dataclass(frozen=True)
class ComparisonReport:
    m: int
    t: Fraction
    K: Fraction
    rows: tuple[CoefficientRow, ...]
    display_checks: tuple[DisplayCheck, ...] = ()
    status: Optional[Adjudication] = None
    adjudicated_source: Optional[str] = None
    oracle_quantities: tuple[str, ...] = field(default=())

    @property
    def agreement(self) -> bool:
        return all(row.match for row in self.rows)

    @property
    def mismatches(self) -> tuple[CoefficientRow, ...]:
        return tuple(row for row in self.rows if not row.match)

    @property
    def derived_agree(self) -> bool:
        return all(row.agree(DERIVED_ROUTES) for row in self.rows)

    def to_dict(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "t": format_rational(self.t),
            "K": format_rational(self.K),
            "agreement": self.agreement,
            "status": self.status.value if self.status else None,
            "adjudicatedSource": self.adjudicated_source,
            "oracleQuantities": list(self.oracle_quantities),
            "rows": [row.to_dict() for row in self.rows],
            "displayChecks": [check.to_dict() for check in self.display_checks],
        }


def _rows(quantity: str, polys: dict[str, LambdaPoly]) -> list[CoefficientRow]:
    width = max(p.degree for p in polys.values()) + 1
    return [
        CoefficientRow(quantity, k, {route: p.coefficient(k).rat for route, p in polys.items()})
        for k in range(width)
    ]


def _printed_at_first_level(energy: Energy) -> tuple[Fraction, ...]:
    """Σ_k row_k(m)·(4m)^k as an m-polynomial."""

    table = printed_table(energy)
    out: list[Fraction] = []
    for k in range(len(table.coeffs)):
        for i, c in enumerate(table.m_polynomial(k)):
            while len(out) <= i + k:
                out.append(Fraction(0))
            out[i + k] += c * 4**k
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def display_checks(m: int) -> tuple[DisplayCheck, ...]:
    return tuple(
        DisplayCheck(energy, m, display.m_poly, _printed_at_first_level(energy))
        for energy, display in PRINTED_FIRST_LEVEL.items()
    )


def compare_routes(m: int, t: RationalLike = 3, K: RationalLike = 1) -> ComparisonReport:
    """Every route for Q₄ and Q₄ᴱˢ plus the bundle norms, row per λ-degree."""

    h = Hypersphere(m, to_rational(t))
    K_q = to_rational(K)

    q4 = {
        ROUTE_PRINTED: q4_form(h, Source.PRINTED, K_q).poly,
        ROUTE_GENERAL: q4_form(h, Source.GENERAL, K_q).poly,
        ROUTE_SMALL_COMPOSITION: q4_form(h, Source.SMALL_SPHERE, K_q, Source.COMPOSITION).poly,
        ROUTE_SMALL_PRINTED: q4_form(h, Source.SMALL_SPHERE, K_q, Source.PRINTED).poly,
    }
    q4es = {
        ROUTE_PRINTED: q4es_form(h, K_q, Source.PRINTED).poly,
        ROUTE_GENERAL: q4es_form(h, K_q, Source.GENERAL).poly,
        ROUTE_SMALL_COMPOSITION: q4es_form(h, K_q, Source.SMALL_SPHERE, Source.COMPOSITION).poly,
        ROUTE_SMALL_PRINTED: q4es_form(h, K_q, Source.SMALL_SPHERE, Source.PRINTED).poly,
    }
    composed = bundle_norm_polys(h)
    printed = printed_bundle_norms(m)

    rows = _rows("Q4", q4) + _rows("Q4ES", q4es)
    for name, ours, theirs in zip(("N1", "N2", "N3"), composed.as_tuple(), printed.as_tuple()):
        rows += _rows(name, {ROUTE_PRINTED: theirs, ROUTE_COMPOSITION: ours})

    report = ComparisonReport(m, h.t, K_q, tuple(rows), display_checks(m))
    logger.info("compare_routes m=%d: %d of %d rows disagree", m, len(report.mismatches), len(rows))
    return report


def adjudicate(report: ComparisonReport, oracle_results: Sequence["OracleResult"]) -> ComparisonReport:
    """Attach a verdict once the oracle has run.

    * every row agrees -> allAgree;
    * the derived routes agree, the oracle supports them and not the printed
      values -> printedDiscrepancy;
    * anything else (derived routes split, oracle siding with the printed
      values or with neither) -> internalDisagreement.
    """

    if not oracle_results:
        raise ValidationError("Adjudication needs at least one oracle result", context={"m": report.m})
    quantities = tuple(r.quantity.value for r in oracle_results)

    if report.agreement:
        return replace(report, status=Adjudication.ALL_AGREE, adjudicated_source="all", oracle_quantities=quantities)

    derived_ok = all(r.supports_derived() for r in oracle_results)
    with_printed = [r for r in oracle_results if ROUTE_PRINTED in r.verdicts]
    printed_ok = bool(with_printed) and all(r.supports(ROUTE_PRINTED) for r in with_printed)

    if report.derived_agree and derived_ok and not printed_ok:
        status, source = Adjudication.PRINTED_DISCREPANCY, ROUTE_GENERAL
    else:
        status, source = Adjudication.INTERNAL_DISAGREEMENT, (ROUTE_PRINTED if printed_ok and not derived_ok else None)
    logger.info("Adjudicated m=%d as %s (source %s)", report.m, status.value, source)
    return replace(report, status=status, adjudicated_source=source, oracle_quantities=quantities)
