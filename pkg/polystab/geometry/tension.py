"""Tension fields of the small hypersphere, evaluated term by term.

Every field here is a constant multiple of ν, so a single point carries all
the information. Sums over the orthonormal frame run explicitly over
``FrameVector.frame(i, m, t)`` and the curvature operator of the target.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..core.errors import NoProperRadiusError, UnrepresentableTermError, ValidationError
from ..exact import QuadExtScalar, lagrange_coefficients
from ..exact.poly import eval_univariate
from ..logging import get_logger
from .hypersphere import Hypersphere
from .spaceform import FrameVector, SpaceForm

logger = get_logger(__name__)


@dataclass(frozen=True)
class TensionLadder:
    """Normal coefficients of Δ̄^j τ for j = 0..max_level."""

    levels: tuple[QuadExtScalar, ...]

    def coefficient(self, j: int) -> QuadExtScalar:
        return self.levels[j]

    def vector(self, j: int, m: int) -> FrameVector:
        return FrameVector.along_normal(self.levels[j], m)

    @property
    def max_level(self) -> int:
        return len(self.levels) - 1


def tension_ladder(h: Hypersphere, max_level: int) -> TensionLadder:
    """τ = mHν, and Δ̄(kν) = k|A|^2 ν for constant k."""

    if max_level < 0:
        raise ValidationError("max_level must be non-negative", context={"max_level": max_level})
    level = h.H * h.m
    levels = [level]
    for _ in range(max_level):
        level = level * h.norm_a2
        levels.append(level)
    return TensionLadder(tuple(levels))


def _frame(h: Hypersphere) -> list[FrameVector]:
    return [FrameVector.frame(i, h.m, h.t) for i in range(h.m)]


def tau4_coefficient(h: Hypersphere, sf: SpaceForm) -> QuadExtScalar:
    """ν-coefficient of τ_4 = Δ̄³τ - R(Δ̄²τ, e_j)e_j + R(τ, ∇̄_j Δ̄τ)e_j - R(∇̄_j τ, Δ̄τ)e_j."""

    ladder = tension_ladder(h, 3)
    frame = _frame(h)
    tau = ladder.vector(0, h.m)
    lap_tau = ladder.vector(1, h.m)
    lap2_tau = ladder.vector(2, h.m)

    total = ladder.vector(3, h.m)
    for i, e in enumerate(frame):
        total = total - sf.curvature(lap2_tau, e, e)
        grad_lap_tau = h.normal_derivative(ladder.coefficient(1), i)
        total = total + sf.curvature(tau, grad_lap_tau, e)
        grad_tau = h.normal_derivative(ladder.coefficient(0), i)
        total = total - sf.curvature(grad_tau, lap_tau, e)

    if not total.is_normal():
        raise UnrepresentableTermError("4-tension kept a tangential part", context={"m": h.m, "t": str(h.t)})
    return total.normal


def tau4_closed_form(h: Hypersphere, sf: SpaceForm) -> QuadExtScalar:
    """m^4 c t^2 (t - 3K)."""

    return h.c * (h.m**4 * h.t**2 * (h.t - 3 * sf.K))


@dataclass(frozen=True)
class TauHatTerms:
    omega0: QuadExtScalar
    omega1_trace: QuadExtScalar
    xi1: QuadExtScalar
    tau_hat: QuadExtScalar

    def is_zero(self) -> bool:
        return self.omega0.is_zero() and self.omega1_trace.is_zero() and self.xi1.is_zero() and self.tau_hat.is_zero()


def tau_hat4_terms(h: Hypersphere, sf: SpaceForm) -> TauHatTerms:
    """Ω₀, Ω₁ and ξ₁ of the ES-4 correction, and the resulting τ̂₄ coefficient."""

    frame = _frame(h)
    tau = tension_ladder(h, 0).vector(0, h.m)
    zero = tau.zero_like()

    omega0 = zero
    xi1 = zero
    for ei in frame:
        for ej in frame:
            inner = sf.curvature(ei, ej, tau)
            omega0 = omega0 + sf.curvature(ei, ej, inner)
            xi1 = xi1 - sf.curvature_derivative(ej, inner, tau, ei)

    omega1 = []
    for x in frame:
        acc = zero
        for ej in frame:
            acc = acc + sf.curvature(sf.curvature(x, ej, tau), tau, ej)
        omega1.append(acc)
    if any(not v.is_zero() for v in omega1):
        # d*Ω₁ would need derivatives of a non-constant field
        raise UnrepresentableTermError("Ω₁ does not vanish; its divergence has no rule here", context={"m": h.m})
    omega1_trace = QuadExtScalar(0, 0, h.t)
    for v in omega1:
        omega1_trace = omega1_trace + v.normal
    codiff_omega1 = QuadExtScalar(0, 0, h.t)

    for part in (omega0, xi1):
        if not part.is_normal():
            raise UnrepresentableTermError("ES-4 correction kept a tangential part", context={"m": h.m})

    # Δ̄(ω₀ν) = ω₀|A|²ν and Tr R(dφ, ω₀ν)dφ = -mKω₀ν
    w0 = omega0.normal
    tau_hat = -(xi1.normal * 2 + codiff_omega1 * 2 + w0 * h.norm_a2 - w0 * (h.m * sf.K)) / 2
    return TauHatTerms(omega0=w0, omega1_trace=omega1_trace, xi1=xi1.normal, tau_hat=tau_hat)


def es4_tension_coefficient(h: Hypersphere, sf: SpaceForm) -> QuadExtScalar:
    return tau4_coefficient(h, sf) + tau_hat4_terms(h, sf).tau_hat


def energy4_density(h: Hypersphere) -> Fraction:
    """½|Δ̄τ|² = ½ m⁴ t³, constant over the sphere."""

    level = tension_ladder(h, 1).coefficient(1)
    return (level * level).rational_value() / 2


_T_SAMPLES = (Fraction(2), Fraction(5), Fraction(6), Fraction(7))


def solve_proper_radius(m: int, sf: SpaceForm) -> Fraction:
    """The t > 0 at which the 4-tension vanishes.

    τ₄/(c t²) is sampled at non-square t, interpolated exactly (the last
    sample is held out) and its positive root returned.
    """

    values = []
    for t in _T_SAMPLES:
        h = Hypersphere(m, t, sigma=1)
        reduced = tau4_coefficient(h, sf) / (h.c * (t * t))
        values.append((t, reduced.rational_value()))
    coeffs = lagrange_coefficients(values[:-1])
    check_t, check_value = values[-1]
    if eval_univariate(coeffs, check_t) != check_value:
        raise NoProperRadiusError("Reduced 4-tension is not polynomial of degree <= 2 in t", context={"m": m})

    if len(coeffs) != 2:
        raise NoProperRadiusError(
            "Reduced 4-tension is not linear in t",
            context={"m": m, "coefficients": [str(c) for c in coeffs]},
        )
    root = -coeffs[0] / coeffs[1]
    if root <= 0:
        raise NoProperRadiusError("No positive proper radius", context={"m": m, "K": str(sf.K), "root": str(root)})
    logger.info("Proper radius for m=%d, K=%s: t*=%s", m, sf.K, root)
    return root
