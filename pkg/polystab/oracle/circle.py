"""Discretized circle S^1(a) in S^2 ⊂ R^3.

The domain is S^1(a) with its own fixed metric: e = ∂_θ / a, so for any map φ
(the circle or a normal variation of it)

    ∇̄_e W = a⁻¹ P(W_θ),   τ = a⁻² P(φ_θθ),   Δ̄W = -a⁻² P(∂_θ P(W_θ)),

with P the tangent projection of the unit sphere at φ, and
E₄ = ½ ∫ |Δ̄τ|² a dθ.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from ..core.enums import DerivativeScheme, OracleQuantity, Source
from ..core.errors import DomainError, OracleError, ValidationError
from ..exact.rational import RationalLike, to_rational
from ..forms import bundle_norm_polys, printed_bundle_norms, q4_form
from ..geometry import Hypersphere, SpaceForm, t_from_radius, tau4_coefficient
from ..logging import get_logger
from .derivatives import derivative
from .result import OracleResult

logger = get_logger(__name__)

SMALL_T = Fraction(3)


def _dot(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.einsum("ij,ij->i", u, v)


def project(x: np.ndarray, v: np.ndarray) -> np.ndarray:
    """P_x(v) = v - <v, x> x for unit x."""

    return v - _dot(v, x)[:, None] * x


@dataclass(frozen=True, eq=False)
class DiscreteImmersion:
    a: float
    N: int
    theta: np.ndarray
    x: np.ndarray
    nu: np.ndarray
    sigma: int = -1
    scheme: DerivativeScheme = DerivativeScheme.SPECTRAL
    filter_rtol: float = 1e-13
    hypersphere: Optional[Hypersphere] = None

    def __post_init__(self) -> None:
        checks = {
            "|x| = 1": np.max(np.abs(np.linalg.norm(self.x, axis=1) - 1.0)),
            "|ν| = 1": np.max(np.abs(np.linalg.norm(self.nu, axis=1) - 1.0)),
            "<ν, x> = 0": np.max(np.abs(_dot(self.nu, self.x))),
            "<ν, x_θ> = 0": np.max(np.abs(_dot(self.nu, self.d(self.x)))) / max(self.a, 1e-300),
        }
        bad = {k: float(v) for k, v in checks.items() if v > 1e-12}
        if bad:
            raise OracleError("Discrete immersion violates its frame invariants", context=bad)

    @property
    def weight(self) -> float:
        """Quadrature weight a·2π/N of the trapezoid rule."""

        return self.a * 2.0 * math.pi / self.N

    def d(self, values: np.ndarray, order: int = 1) -> np.ndarray:
        return derivative(values, order, self.scheme, filter_rtol=self.filter_rtol)

    def integrate(self, density: np.ndarray) -> float:
        return float(math.fsum(density) * self.weight)

    def mode(self, j: int, *, normalized: bool = True) -> np.ndarray:
        """cos(jθ), scaled to ∫f² a dθ = 1 unless ``normalized`` is off."""

        f = np.cos(j * self.theta)
        if normalized:
            f = f / math.sqrt(self.integrate(f * f))
        return f

    def eigenvalue(self, j: int) -> float:
        return j * j / (self.a * self.a)

    def varied(self, f: np.ndarray, eps: float) -> np.ndarray:
        """Geodesic normal variation cos(εf) x + sin(εf) ν."""

        return np.cos(eps * f)[:, None] * self.x + np.sin(eps * f)[:, None] * self.nu


def build_circle(
    a: Optional[float | RationalLike] = None,
    N: int = 256,
    *,
    t: Optional[RationalLike] = None,
    sigma: int = -1,
    scheme: DerivativeScheme = DerivativeScheme.SPECTRAL,
    filter_rtol: float = 1e-13,
) -> DiscreteImmersion:
    """x = (a cos θ, a sin θ, √(1-a²)), ν = σ·x × T̂.

    Give ``t`` (or a rational ``a``) to attach the exact hypersphere, which the
    symbolic references are computed from.
    """

    if (a is None) == (t is None):
        raise ValidationError("Give exactly one of a or t", context={"a": a, "t": t})
    if N < 16 or N % 2:
        raise ValidationError("Grid size must be even and at least 16", context={"N": N})

    hypersphere = None
    if t is not None:
        hypersphere = Hypersphere(1, to_rational(t), sigma)
        a_f = 1.0 / math.sqrt(1.0 + float(hypersphere.t))
    elif isinstance(a, float):
        a_f = a
    else:
        hypersphere = Hypersphere(1, t_from_radius(a), sigma)
        a_f = float(to_rational(a))
    if not (0.0 < a_f <= 1.0) or a_f < 1e-6:
        raise DomainError("Radius a must satisfy 0 < a <= 1", context={"a": a_f})

    theta = 2.0 * np.pi * np.arange(N) / N
    z0 = math.sqrt(max(0.0, 1.0 - a_f * a_f))
    cos, sin = np.cos(theta), np.sin(theta)
    x = np.stack([a_f * cos, a_f * sin, np.full(N, z0)], axis=1)
    nu = sigma * np.stack([-z0 * cos, -z0 * sin, np.full(N, a_f)], axis=1)
    return DiscreteImmersion(a_f, N, theta, x, nu, sigma, DerivativeScheme(scheme), filter_rtol, hypersphere)


def shape_operator_eigenvalue(im: DiscreteImmersion) -> float:
    """c from ∇̄_e ν = -c e, averaged over the grid."""

    x_t = im.d(im.x)
    nu_t = im.d(im.nu)
    samples = -_dot(nu_t, x_t) / _dot(x_t, x_t)
    if np.ptp(samples) > 1e-8:
        raise OracleError("Shape operator is not constant along the circle", context={"spread": float(np.ptp(samples))})
    return float(np.mean(samples))


def _covariant(im: DiscreteImmersion, phi: np.ndarray, W: np.ndarray) -> np.ndarray:
    return project(phi, im.d(W)) / im.a


def _rough_laplacian(im: DiscreteImmersion, phi: np.ndarray, W: np.ndarray) -> np.ndarray:
    return -project(phi, im.d(project(phi, im.d(W)))) / (im.a * im.a)


def rough_laplacian_num(im: DiscreteImmersion, s: np.ndarray, *, tangency_tol: float = 1e-10) -> np.ndarray:
    scale = max(float(np.max(np.abs(s))), 1.0)
    off = float(np.max(np.abs(_dot(s, im.x))))
    if off > tangency_tol * scale:
        raise OracleError("Section is not tangent to the sphere", context={"max_normal_part": off})
    return _rough_laplacian(im, im.x, s)


def _tension(im: DiscreteImmersion, phi: np.ndarray) -> np.ndarray:
    return project(phi, im.d(phi, 2)) / (im.a * im.a)


def energy4_num(im: DiscreteImmersion, phi: Optional[np.ndarray] = None, *, cusp_tol: float = 1e-3) -> float:
    """E₄ of the map ``phi`` (default: the circle itself) from the fixed domain S^1(a)."""

    phi = im.x if phi is None else phi
    speed = np.linalg.norm(im.d(phi), axis=1)
    if np.min(speed) < cusp_tol * im.a:
        raise OracleError("Varied curve is close to a cusp", context={"min_speed": float(np.min(speed))})
    lap_tau = _rough_laplacian(im, phi, _tension(im, phi))
    return 0.5 * im.integrate(_dot(lap_tau, lap_tau))


def _require_exact(im: DiscreteImmersion) -> Hypersphere:
    if im.hypersphere is None:
        raise ValidationError("Symbolic references need the circle built from an exact t or a")
    return im.hypersphere


def bundle_norms_num(im: DiscreteImmersion, j: int, *, rtol: float = 1e-7) -> OracleResult:
    """∫|Δ̄(fν)|², ∫|∇̄Δ̄(fν)|², ∫|Δ̄²(fν)|² for f = cos(jθ) normalized."""

    h = _require_exact(im)
    f = im.mode(j)
    s0 = f[:, None] * im.nu
    s1 = rough_laplacian_num(im, s0)
    s2 = rough_laplacian_num(im, s1)
    grad_s1 = _covariant(im, im.x, s1)
    values = {
        "N1": im.integrate(_dot(s1, s1)),
        "N2": im.integrate(_dot(grad_s1, grad_s1)),
        "N3": im.integrate(_dot(s2, s2)),
    }

    lam = Fraction(j * j) * (1 + h.t)
    references = {"composition": {k: float(p(lam)) for k, p in zip(values, bundle_norm_polys(h).as_tuple())}}
    if h.t == SMALL_T:
        references["printed"] = {k: float(p(lam)) for k, p in zip(values, printed_bundle_norms(1).as_tuple())}
    return OracleResult(
        OracleQuantity.BUNDLE_NORMS,
        values,
        references,
        rtol,
        metadata={"m": 1, "t": str(h.t), "j": j, "lambda": str(lam), "N": im.N, "scheme": im.scheme.value},
    )


def _richardson(coarse: float, fine: float) -> float:
    return (4.0 * fine - coarse) / 3.0


def first_variation_num(
    im: DiscreteImmersion,
    f: Optional[np.ndarray] = None,
    step: float = 1e-3,
    *,
    richardson: bool = True,
    rtol: float = 1e-4,
    atol: float = 1e-6,
) -> OracleResult:
    """d/dε E₄(φ_ε) at ε = 0 against -τ₄ ∫f a dθ; f defaults to 1."""

    f = np.ones(im.N) if f is None else f

    def central(eps: float) -> float:
        return (energy4_num(im, im.varied(f, eps)) - energy4_num(im, im.varied(f, -eps))) / (2.0 * eps)

    coarse = central(step)
    value = _richardson(coarse, central(step / 2)) if richardson else coarse
    references = {}
    if im.hypersphere is not None:
        tau4 = float(tau4_coefficient(im.hypersphere, SpaceForm()))
        references["closed-form"] = {"dE": -tau4 * im.integrate(f)}
    return OracleResult(
        OracleQuantity.FIRST_VARIATION,
        {"dE": value},
        references,
        rtol,
        atol,
        metadata={"a": im.a, "N": im.N, "step": step, "richardson": richardson, "central": coarse},
    )


def second_variation_num(
    im: DiscreteImmersion,
    j: int,
    step: float = 1e-3,
    *,
    richardson: bool = True,
    rtol: float = 1e-3,
    atol: float = 1e-4,
) -> OracleResult:
    """d²/dε² E₄(φ_ε) for f = cos(jθ), against every symbolic Q₄ route at λ = j²/a²."""

    h = _require_exact(im)
    f = im.mode(j)
    e0 = energy4_num(im)

    def second(eps: float) -> float:
        return (energy4_num(im, im.varied(f, eps)) - 2.0 * e0 + energy4_num(im, im.varied(f, -eps))) / (eps * eps)

    coarse = second(step)
    fine = second(step / 2)
    value = _richardson(coarse, fine) if richardson else coarse

    lam = Fraction(j * j) * (1 + h.t)
    references = {"general": {"Q": float(q4_form(h, Source.GENERAL).evaluate(lam))}}
    if h.t == SMALL_T:
        references["small-sphere/composition"] = {
            "Q": float(q4_form(h, Source.SMALL_SPHERE, norms=Source.COMPOSITION).evaluate(lam))
        }
        references["printed"] = {"Q": float(q4_form(h, Source.PRINTED).evaluate(lam))}
    logger.debug("second variation a=%.6g j=%d: %.10g (h=%g), %.10g (h/2)", im.a, j, coarse, step, fine)
    return OracleResult(
        OracleQuantity.SECOND_VARIATION,
        {"Q": value},
        references,
        rtol,
        atol,
        metadata={
            "m": 1,
            "t": str(h.t),
            "j": j,
            "lambda": str(lam),
            "N": im.N,
            "scheme": im.scheme.value,
            "richardson": richardson,
            "step_convergence": {str(step): coarse, str(step / 2): fine},
        },
    )


def self_adjointness_num(im: DiscreteImmersion, s1: np.ndarray, s2: np.ndarray) -> tuple[float, float]:
    """(∫<Δ̄s1, s2>, ∫<s1, Δ̄s2>)."""

    return (
        im.integrate(_dot(rough_laplacian_num(im, s1), s2)),
        im.integrate(_dot(s1, rough_laplacian_num(im, s2))),
    )


def bochner_num(im: DiscreteImmersion, j: int) -> float:
    """∫|∇²f|² for f = cos(jθ) normalized; equals λ² since Ric = 0 on S^1."""

    f = im.mode(j)
    hess = im.d(f[:, None], 2)[:, 0] / (im.a * im.a)
    return im.integrate(hess * hess)
