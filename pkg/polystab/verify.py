"""Verification suites behind ``polystab verify``.

Each suite returns a :class:`SuiteOutcome`; the run passes when no check
failed, no derivation route disagrees with another and every printed/derived
mismatch is in the known-discrepancy manifest.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

import numpy as np

from .core.enums import Adjudication, Energy, Source, Suite
from .core.errors import PolystabError
from .exact import LambdaPoly, QuadExtScalar
from .forms import (
    SymbolicNormalSection,
    adjudicate,
    apply_bar_laplacian,
    compare_routes,
    gradient_norm,
    pairing,
    q4_form,
    q4es_form,
    qhat_closed_form,
    qhat_form,
)
from .forms.printed import PRINTED_T, printed_poly
from .geometry import Hypersphere, SpaceForm, solve_proper_radius, tau4_closed_form, tau4_coefficient, tau_hat4_terms
from .index import harmonic_limit_index, index_sweep
from .logging import get_logger
from .oracle import (
    OracleResult,
    build_circle,
    bundle_norms_num,
    first_variation_num,
    qhat_quadrature_m2,
    second_variation_num,
)
from .report.manifest import KnownDiscrepancies, load_manifest

logger = get_logger(__name__)

M_RANGE = range(1, 11)


@dataclass(frozen=True)
class Check:
    suite: Suite
    name: str
    passed: bool
    detail: str = ""

    def to_row(self) -> dict[str, Any]:
        return {"suite": self.suite.value, "check": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class SuiteOutcome:
    suite: Suite
    checks: list[Check] = field(default_factory=list)
    reports: list[dict[str, Any]] = field(default_factory=list)
    internal_disagreement: bool = False

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(self.suite, name, bool(passed), detail))
        if not passed:
            logger.warning("%s: %s failed %s", self.suite.value, name, detail)
        return bool(passed)

    @property
    def passed(self) -> bool:
        return not self.internal_disagreement and all(c.passed for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite.value,
            "passed": self.passed,
            "internalDisagreement": self.internal_disagreement,
            "checks": [c.to_row() for c in self.checks],
            "reports": self.reports,
        }


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------


def run_fixtures(config: dict[str, Any], manifest: Optional[KnownDiscrepancies] = None) -> SuiteOutcome:
    manifest = manifest or load_manifest()
    out = SuiteOutcome(Suite.FIXTURES)

    for m in M_RANGE:
        report = compare_routes(m)
        out.reports.append(report.to_dict())
        if not report.derived_agree:
            out.internal_disagreement = True
        out.check(f"derived routes agree m={m}", report.derived_agree)
        same = all(row.agree(("printed", "small-sphere/printed")) for row in report.rows if row.quantity in ("Q4", "Q4ES"))
        out.check(f"small-sphere form with printed norms reproduces printed Q4 m={m}", same)
        unlisted = manifest.unlisted_rows(report)
        out.check(
            f"printed/derived mismatches listed m={m}",
            not unlisted,
            "; ".join(f"{r.quantity} λ^{r.degree}" for r in unlisted),
        )
        displays = manifest.unlisted_displays(report)
        out.check(f"first-level displays listed m={m}", not displays, "; ".join(d.energy.value for d in displays))

        h = Hypersphere(m, PRINTED_T)
        out.check(f"printed Q̂ closes m={m}", printed_poly(Energy.HAT, m) == qhat_closed_form(h))
        out.check(f"τ₄ = 0 at t = 3 m={m}", tau4_coefficient(h, SpaceForm()).is_zero())
        out.check(f"τ̂₄ terms vanish m={m}", tau_hat4_terms(h, SpaceForm()).is_zero())
        out.check(f"proper radius t = 3 m={m}", solve_proper_radius(m, SpaceForm()) == PRINTED_T)

    for energy, expected in ((Energy.E4, 1), (Energy.ES4, 1), (Energy.HAT, 0)):
        sources = (Source.PRINTED, Source.GENERAL) if energy == Energy.HAT else (Source.PRINTED, Source.GENERAL, Source.SMALL_SPHERE)
        reports = index_sweep(energy, M_RANGE, sources, workers=int(config.get("workers", 1)))
        wrong = [f"{r.source} m={r.m}: {r.index}" for r in reports if r.index != expected]
        out.check(f"{energy.value} index {expected} for m=1..10", not wrong, "; ".join(wrong))

    for m in M_RANGE:
        report = harmonic_limit_index(m)
        zero_j = [lv.level.j for lv in report.zero_levels]
        out.check(f"harmonic limit weakly stable m={m}", report.index == 0 and zero_j == [0, 1], f"zero levels {zero_j}")

    es_display = next(c for c in compare_routes(2).display_checks if c.energy == Energy.ES4)
    out.check("ES-4 display at m=2 is 119552", es_display.match and es_display.exact_value == 119552)
    return out


# ---------------------------------------------------------------------------
# identities
# ---------------------------------------------------------------------------


def _random_t(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 40), rng.randint(1, 9))


def _random_poly(rng: random.Random, t: Fraction) -> LambdaPoly:
    return LambdaPoly(
        (QuadExtScalar(rng.randint(-9, 9), rng.randint(-9, 9), t) for _ in range(rng.randint(1, 3))), t
    )


def run_identities(config: dict[str, Any]) -> SuiteOutcome:
    params = config.get("identities", {})
    rng = random.Random(int(params.get("seed", 0)))
    samples = int(params.get("samples", 100))
    max_m = int(params.get("max_m", 20))
    out = SuiteOutcome(Suite.IDENTITIES)

    def run(name: str, trial: Callable[[int, Fraction], bool]) -> None:
        failures = []
        for _ in range(samples):
            m, t = rng.randint(1, max_m), _random_t(rng)
            try:
                ok = trial(m, t)
            except PolystabError as exc:
                ok = False
                logger.debug("%s raised at m=%d t=%s: %s", name, m, t, exc)
            if not ok:
                failures.append(f"m={m} t={t}")
        out.check(name, not failures, "; ".join(failures[:5]))

    def field_axioms(m: int, t: Fraction) -> bool:
        a, b, c = (QuadExtScalar(rng.randint(-20, 20), rng.randint(-20, 20), t) for _ in range(3))
        ok = a * (b + c) == a * b + a * c and (a + b) - b == a
        return ok and (b.is_zero() or (a * b) / b == a)

    def rational_only(m: int, t: Fraction) -> bool:
        h = Hypersphere(m, t)
        # construction raises on a leftover sqrt(t) part
        return q4_form(h, Source.GENERAL).poly.is_rational_only() and q4es_form(h).poly.is_rational_only()

    def additivity(m: int, t: Fraction) -> bool:
        h = Hypersphere(m, t)
        return (q4es_form(h).poly - q4_form(h, Source.GENERAL).poly - qhat_form(h).poly).is_zero()

    def sigma_flip(m: int, t: Fraction) -> bool:
        h = Hypersphere(m, t)
        g = h.flipped()
        return q4_form(h, Source.GENERAL).poly == q4_form(g, Source.GENERAL).poly and qhat_form(h).poly == qhat_form(g).poly

    def qhat_closed(m: int, t: Fraction) -> bool:
        h = Hypersphere(m, t)
        return qhat_form(h).poly == qhat_closed_form(h)

    def self_adjoint(m: int, t: Fraction) -> bool:
        h = Hypersphere(m, t)
        s1 = SymbolicNormalSection(_random_poly(rng, t), _random_poly(rng, t))
        s2 = SymbolicNormalSection(_random_poly(rng, t), _random_poly(rng, t))
        return pairing(apply_bar_laplacian(s1, h), s2) == pairing(s1, apply_bar_laplacian(s2, h))

    def integration_by_parts(m: int, t: Fraction) -> bool:
        h = Hypersphere(m, t)
        s = SymbolicNormalSection(_random_poly(rng, t), _random_poly(rng, t))
        return gradient_norm(s, h) == pairing(apply_bar_laplacian(s, h), s)

    def tension_closed(m: int, t: Fraction) -> bool:
        h = Hypersphere(m, t)
        return tau4_coefficient(h, SpaceForm()) == tau4_closed_form(h, SpaceForm())

    run("quadratic-extension field axioms", field_axioms)
    run("quadratic forms are rational", rational_only)
    run("Q4ES = Q4 + Q̂", additivity)
    run("orientation flip invariance", sigma_flip)
    run("Q̂ = t(m-1)(m-2)²λ", qhat_closed)
    run("Δ̄ self-adjoint on sections", self_adjoint)
    run("∫|∇̄s|² = ∫<Δ̄s, s>", integration_by_parts)
    run("τ₄ closed form", tension_closed)

    lam = LambdaPoly.lam(0)
    for m in M_RANGE:
        expected = lam * lam * (lam - m) * (lam - m)
        out.check(f"harmonic limit λ²(λ-m)² m={m}", q4_form(Hypersphere(m, 0), Source.GENERAL).poly == expected)
    return out


# ---------------------------------------------------------------------------
# numeric oracle
# ---------------------------------------------------------------------------


def _record(out: SuiteOutcome, name: str, result: OracleResult, route: Optional[str] = None) -> None:
    out.reports.append(result.to_dict())
    passed = result.supports(route) if route else result.supports_derived()
    worst = max((e for errs in result.errors().values() for e in errs.values()), default=0.0)
    out.check(name, passed, f"max error {worst:.3e}")


def run_oracle_m1(config: dict[str, Any], manifest: Optional[KnownDiscrepancies] = None) -> SuiteOutcome:
    manifest = manifest or load_manifest()
    knobs = config.get("oracle", {})
    grid = int(knobs.get("grid", 256))
    step = float(knobs.get("step", 1e-3))
    richardson = bool(knobs.get("richardson", True))
    scheme = knobs.get("scheme", "spectral")
    filter_rtol = float(knobs.get("filter_rtol", 1e-13))
    modes = [int(j) for j in knobs.get("modes", [0, 1, 2, 3])]
    out = SuiteOutcome(Suite.ORACLE_M1)

    im = build_circle(t=PRINTED_T, N=grid, scheme=scheme, filter_rtol=filter_rtol)
    adjudicating: list[OracleResult] = []

    for j in (j for j in modes if j > 0):
        result = bundle_norms_num(im, j, rtol=float(knobs.get("bundle_rtol", 1e-7)))
        adjudicating.append(result)
        _record(out, f"bundle norms j={j}", result, "composition")

    for j in modes:
        result = second_variation_num(
            im,
            j,
            step,
            richardson=richardson,
            rtol=float(knobs.get("second_variation_rtol", 1e-3)),
            atol=float(knobs.get("second_variation_atol", 1e-4)),
        )
        adjudicating.append(result)
        _record(out, f"second variation j={j}", result)

    for label, f in (("1", np.ones(grid)), ("cos θ", np.cos(im.theta)), ("cos 2θ", np.cos(2 * im.theta))):
        result = first_variation_num(
            im,
            f,
            step,
            richardson=richardson,
            rtol=float(knobs.get("first_variation_rtol", 1e-4)),
            atol=float(knobs.get("first_variation_atol", 1e-6)),
        )
        _record(out, f"criticality f={label}", result, "closed-form")

    great = build_circle(t=0, N=grid, scheme=scheme, filter_rtol=filter_rtol)
    _record(out, "great circle second variation j=1", second_variation_num(great, 1, step, richardson=richardson))

    report = adjudicate(compare_routes(1), adjudicating)
    out.reports.append(report.to_dict())
    if report.status == Adjudication.INTERNAL_DISAGREEMENT:
        out.internal_disagreement = True
    out.check(
        "oracle adjudication",
        report.status in (Adjudication.ALL_AGREE, Adjudication.PRINTED_DISCREPANCY),
        f"{report.status.value if report.status else 'unset'} -> {report.adjudicated_source}",
    )
    if report.status == Adjudication.PRINTED_DISCREPANCY:
        out.check(
            "adjudicated source matches manifest",
            report.adjudicated_source == manifest.adjudicated,
            f"{report.adjudicated_source} vs {manifest.adjudicated}",
        )
    return out


def run_oracle_m2(config: dict[str, Any]) -> SuiteOutcome:
    knobs = config.get("oracle_m2", {})
    out = SuiteOutcome(Suite.ORACLE_M2)
    for mode in knobs.get("modes", ["z", "xy", "const"]):
        result = qhat_quadrature_m2(
            PRINTED_T,
            mode,
            n_lat=int(knobs.get("n_lat", 32)),
            n_lon=int(knobs.get("n_lon", 64)),
            step=float(knobs.get("step", 1e-3)),
            rtol=float(knobs.get("rtol", 1e-5)),
            atol=float(knobs.get("atol", 1e-5)),
        )
        _record(out, f"K²-terms and (m-2)² cancellation f={mode}", result, "general")
        out.check(f"cancellation f={mode}", math.isclose(result.values["total"], 0.0, abs_tol=float(knobs.get("atol", 1e-5))))
    return out


def run_suite(suite: Suite, config: dict[str, Any]) -> SuiteOutcome:
    suite = Suite(suite)
    logger.info("Running verification suite %s", suite.value)
    if suite == Suite.FIXTURES:
        return run_fixtures(config)
    if suite == Suite.IDENTITIES:
        return run_identities(config)
    if suite == Suite.ORACLE_M1:
        return run_oracle_m1(config)
    return run_oracle_m2(config)
