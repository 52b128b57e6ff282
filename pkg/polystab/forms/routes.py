"""Quadratic forms of the normal second variation as exact λ-polynomials.

Three independent ways to reach Q₄ are kept side by side:

* ``general``: every integral of the form for parallel-A hypersurfaces in a
  space form, evaluated term by term on an eigenfunction;
* ``small-sphere``: the form specialized to a = 1/2, K = 1, fed with the three
  bundle norms from either the section algebra or the published tables;
* ``printed``: the published coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

from ..core.enums import Energy, Source
from ..core.errors import IrrationalFormError, OffSmallSphereError, UnrepresentableTermError, ValidationError
from ..exact import LambdaPoly, QuadExtScalar
from ..exact.rational import RationalLike, format_rational, to_rational
from ..geometry import Hypersphere, tension_ladder
from ..logging import get_logger
from .printed import PRINTED_K, PRINTED_T, printed_bundle_norms, printed_poly
from .sections import BundleNorms, SymbolicNormalSection, apply_bar_laplacian, bundle_norm_polys, pairing

logger = get_logger(__name__)


@dataclass(frozen=True)
class QuadraticFormPoly:
    energy: Energy
    source: Source
    m: int
    t: Fraction
    K: Fraction
    poly: LambdaPoly
    norms: Optional[Source] = None

    def __post_init__(self) -> None:
        if not self.poly.is_rational_only():
            raise IrrationalFormError(
                "Quadratic form kept a sqrt(t) part",
                context={"energy": self.energy.value, "source": self.source.value, "m": self.m, "poly": str(self.poly)},
            )

    @property
    def route(self) -> str:
        """``small-sphere/composition`` style label; the source alone otherwise."""

        if self.norms is None:
            return self.source.value
        return f"{self.source.value}/{self.norms.value}"

    def coefficients(self) -> tuple[Fraction, ...]:
        return self.poly.rational_coeffs()

    def coefficient(self, k: int) -> Fraction:
        return self.poly.coefficient(k).rat

    def evaluate(self, lam: RationalLike) -> Fraction:
        return self.poly(to_rational(lam)).rat

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "energy": self.energy.value,
            "source": self.source.value,
            "m": self.m,
            "t": format_rational(self.t),
            "K": format_rational(self.K),
            "coeffs": [format_rational(c) for c in self.coefficients()],
        }
        if self.norms is not None:
            data["norms"] = self.norms.value
        return data


def _require_small_sphere(h: Hypersphere, K: Fraction, what: str) -> None:
    if h.t != PRINTED_T or K != PRINTED_K:
        raise OffSmallSphereError(
            f"{what} is only stated for a = 1/2 (t = 3) in the unit sphere",
            context={"m": h.m, "t": format_rational(h.t), "K": format_rational(K)},
        )


# ---------------------------------------------------------------------------
# term tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FormTerm:
    label: str
    k_order: int
    integrand: str
    coefficient: Callable[[Hypersphere], QuadExtScalar | Fraction | int] = field(compare=False)


def _H2(h: Hypersphere) -> QuadExtScalar:
    return h.H * h.H


# Second variation of E₄ along fν for a parallel-A hypersurface in a space form.
GENERAL_FORM_TERMS: tuple[FormTerm, ...] = (
    FormTerm("|Δ̄²(fν) - mKΔ̄(fν)|²", 0, "shifted_bilaplace_norm", lambda h: 1),
    FormTerm("-4m²H²|Δ̄(fν)|²", 1, "laplace_norm", lambda h: _H2(h) * (-4 * h.m**2)),
    FormTerm("-4m²H²|A|²|∇f|²", 1, "grad_f", lambda h: _H2(h) * (-4 * h.m**2 * h.norm_a2)),
    FormTerm("-10m²H²|A|⁴f²", 1, "f", lambda h: _H2(h) * (-10 * h.m**2 * h.norm_a2**2)),
    FormTerm("-4mH<A∇Δf,∇f>", 1, "shape_grad_lap_f", lambda h: h.H * (-4 * h.m)),
    FormTerm("-4mH<Ae_i,A∇f><Ae_i,∇f>", 1, "shape_frame_contraction", lambda h: h.H * (-4 * h.m)),
    FormTerm("-8mH|A|²<A∇f,∇f>", 1, "shape_grad_f", lambda h: h.H * (-8 * h.m * h.norm_a2)),
    FormTerm("-4mH<A(Δ∇f),∇f>", 1, "shape_rough_lap_grad_f", lambda h: h.H * (-4 * h.m)),
    FormTerm("(4m³H²+m²H²)|∇f|²", 2, "grad_f", lambda h: _H2(h) * (4 * h.m**3 + h.m**2)),
    FormTerm("(10m³|A|²H²+4m⁴H⁴)f²", 2, "f", lambda h: _H2(h) * (10 * h.m**3 * h.norm_a2) + _H2(h) * _H2(h) * (4 * h.m**4)),
    FormTerm("4m²H<A∇f,∇f>", 2, "shape_grad_f", lambda h: h.H * (4 * h.m**2)),
)

# K²-part of the second variation of the curvature energy along fν.
QHAT_TERMS: tuple[FormTerm, ...] = (
    FormTerm("|<∇̄V,τ>|²|dφ|²", 2, "tau_pairing_norm_trace", lambda h: 1),
    FormTerm("-<∇̄_iV,τ><∇̄_jV,τ><dφ(e_i),dφ(e_j)>", 2, "tau_pairing_norm", lambda h: -1),
    FormTerm("2<∇̄_iV,τ><dφ(e_i),dφ(e_j)><dφ(e_j),Δ̄V>", 2, "tau_laplace_mixed", lambda h: 2),
    FormTerm("-2|dφ|²<dφ(e_i),Δ̄V><∇̄_iV,τ>", 2, "tau_laplace_mixed_trace", lambda h: -2),
    FormTerm("|dφ|²|<dφ,Δ̄V>|²", 2, "laplace_tangent_norm_trace", lambda h: 1),
    FormTerm("-<dφ(e_i),dφ(e_j)><dφ(e_i),Δ̄V><dφ(e_j),Δ̄V>", 2, "laplace_tangent_norm", lambda h: -1),
)


def integral_rules(h: Hypersphere, K: Fraction) -> dict[str, LambdaPoly]:
    """∫ of each integrand on an eigenfunction with ∫f² = 1, as a λ-polynomial."""

    t = h.t
    lam = LambdaPoly.lam(t)
    c = h.c
    s0 = SymbolicNormalSection.normal(h)
    s1 = apply_bar_laplacian(s0, h)
    s2 = apply_bar_laplacian(s1, h)
    shifted = s2 - s1.scale(h.m * K)

    # <∇̄_i(fν), τ> = mH e_i(f); <dφ(e_i), Δ̄(fν)> = (tangential part of Δ̄(fν)) e_i(f)
    tau_pair = tension_ladder(h, 0).coefficient(0)
    lap_tangent = s1.q.coefficient(0)
    dphi2 = h.m

    return {
        "f": LambdaPoly.constant(1, t),
        "grad_f": lam,
        "laplace_norm": pairing(s1, s1),
        "shifted_bilaplace_norm": pairing(shifted, shifted),
        "shape_grad_f": lam * c,
        "shape_grad_lap_f": lam * lam * c,
        "shape_rough_lap_grad_f": (lam - h.ricci) * lam * c,
        # Σ_i <A e_i, A∇f><A e_i, ∇f> = c³|∇f|²
        "shape_frame_contraction": lam * (c * c * c),
        "tau_pairing_norm_trace": lam * (tau_pair * tau_pair * dphi2),
        "tau_pairing_norm": lam * (tau_pair * tau_pair),
        "tau_laplace_mixed": lam * (tau_pair * lap_tangent),
        "tau_laplace_mixed_trace": lam * (tau_pair * lap_tangent * dphi2),
        "laplace_tangent_norm_trace": lam * (lap_tangent * lap_tangent * dphi2),
        "laplace_tangent_norm": lam * (lap_tangent * lap_tangent),
    }


def evaluate_terms(terms: tuple[FormTerm, ...], h: Hypersphere, K: Fraction) -> LambdaPoly:
    rules = integral_rules(h, K)
    total = LambdaPoly.zero(h.t)
    for term in terms:
        rule = rules.get(term.integrand)
        if rule is None:
            raise UnrepresentableTermError(
                f"No eigenfunction rule for term {term.label}",
                context={"integrand": term.integrand},
            )
        weight = term.coefficient(h) * K**term.k_order
        total = total + rule * weight
    return total


def term_values(terms: tuple[FormTerm, ...], h: Hypersphere, K: Fraction = PRINTED_K) -> dict[str, LambdaPoly]:
    """Each term with its coefficient applied, keyed by label."""

    rules = integral_rules(h, K)
    return {term.label: rules[term.integrand] * (term.coefficient(h) * K**term.k_order) for term in terms}


# ---------------------------------------------------------------------------
# routes
# ---------------------------------------------------------------------------


def printed_fixture(energy: Energy, m: int) -> QuadraticFormPoly:
    energy = Energy(energy)
    return QuadraticFormPoly(energy, Source.PRINTED, m, PRINTED_T, PRINTED_K, printed_poly(energy, m))


def q4_from_general_form(h: Hypersphere, K: RationalLike = 1) -> QuadraticFormPoly:
    K_q = to_rational(K)
    poly = evaluate_terms(GENERAL_FORM_TERMS, h, K_q)
    logger.debug("general-form Q4 m=%d t=%s K=%s: %s", h.m, h.t, K_q, poly)
    return QuadraticFormPoly(Energy.E4, Source.GENERAL, h.m, h.t, K_q, poly)


def resolve_bundle_norms(h: Hypersphere, norms: Source) -> BundleNorms:
    norms = Source(norms)
    if norms == Source.COMPOSITION:
        return bundle_norm_polys(h)
    if norms == Source.PRINTED:
        return printed_bundle_norms(h.m)
    raise ValidationError("Bundle norms come from 'composition' or 'printed'", context={"norms": norms.value})


def q4_from_small_sphere_form(
    h: Hypersphere, norms: Source = Source.COMPOSITION, K: RationalLike = 1
) -> QuadraticFormPoly:
    """N₃ - 2m N₂ - 11m² N₁ - 24mλ² + (-24m³-9m²-84m)λ - 144m⁴."""

    K_q = to_rational(K)
    _require_small_sphere(h, K_q, "The small-sphere form")
    n = resolve_bundle_norms(h, norms)
    m = h.m
    lam = LambdaPoly.lam(h.t)
    poly = (
        n.bilaplace
        - n.gradient_laplace * (2 * m)
        - n.laplace * (11 * m**2)
        - lam * lam * (24 * m)
        + lam * (-24 * m**3 - 9 * m**2 - 84 * m)
        - LambdaPoly.constant(144 * m**4, h.t)
    )
    return QuadraticFormPoly(Energy.E4, Source.SMALL_SPHERE, m, h.t, K_q, poly, norms=n.source)


def qhat_form(h: Hypersphere, K: RationalLike = 1) -> QuadraticFormPoly:
    K_q = to_rational(K)
    poly = evaluate_terms(QHAT_TERMS, h, K_q)
    return QuadraticFormPoly(Energy.HAT, Source.GENERAL, h.m, h.t, K_q, poly)


def qhat_closed_form(h: Hypersphere, K: RationalLike = 1) -> LambdaPoly:
    """K² t (m-1)(m-2)² λ."""

    K_q = to_rational(K)
    return LambdaPoly.lam(h.t) * (K_q**2 * h.t * (h.m - 1) * (h.m - 2) ** 2)


def q4_form(
    h: Hypersphere, source: Source, K: RationalLike = 1, norms: Source = Source.COMPOSITION
) -> QuadraticFormPoly:
    source = Source(source)
    if source == Source.PRINTED:
        _require_small_sphere(h, to_rational(K), "The printed form")
        return printed_fixture(Energy.E4, h.m)
    if source == Source.GENERAL:
        return q4_from_general_form(h, K)
    if source == Source.SMALL_SPHERE:
        return q4_from_small_sphere_form(h, norms, K)
    raise ValidationError(f"No Q4 route for source '{source.value}'", context={"source": source.value})


def q4es_form(
    h: Hypersphere, K: RationalLike = 1, route: Source = Source.GENERAL, norms: Source = Source.COMPOSITION
) -> QuadraticFormPoly:
    """Q₄ from the chosen route plus Q̂; the printed route adds the printed Q̂."""

    route = Source(route)
    q4 = q4_form(h, route, K, norms)
    if route == Source.PRINTED:
        qhat = printed_fixture(Energy.HAT, h.m)
    else:
        qhat = qhat_form(h, K)
    return QuadraticFormPoly(Energy.ES4, route, h.m, h.t, q4.K, q4.poly + qhat.poly, norms=q4.norms)
