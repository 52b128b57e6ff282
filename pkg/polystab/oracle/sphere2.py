"""S^2(a) in S^3 ⊂ R^4 on a Gauss-Legendre × uniform longitude grid.

Points of the domain are a·y with y on the unit sphere of R^3; the map is
x(y) = (a y, √(1-a²)) with unit normal ν = σ(-√(1-a²) y, a). Derivatives along
e_i are taken on the domain geodesic y(s) = cos(s/a) y + sin(s/a) u_i by
fourth-order central differences, so ∇_{e_i} e_i = 0 and

    ∇̄_i V = P(V'),   Δ̄V = -Σ_i (P(V''_i) + <V, x'_i> x'_i),   τ = Σ_i P(x''_i).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np
from numpy.polynomial.legendre import leggauss

from ..core.enums import OracleQuantity
from ..core.errors import OracleError, ValidationError
from ..exact.rational import RationalLike, to_rational
from ..forms.routes import QHAT_TERMS, qhat_form, term_values
from ..geometry import Hypersphere
from ..logging import get_logger
from .derivatives import geodesic_fd
from .result import OracleResult

logger = get_logger(__name__)

QHAT_WEIGHTS = (1.0, -1.0, 2.0, -2.0, 1.0, -1.0)

# f on the unit sphere, with its Laplace degree l (λ = l(l+1)/a²)
MODES: dict[str, tuple[int, Callable[[np.ndarray], np.ndarray]]] = {
    "const": (0, lambda y: np.ones(y.shape[0])),
    "x": (1, lambda y: y[:, 0]),
    "y": (1, lambda y: y[:, 1]),
    "z": (1, lambda y: y[:, 2]),
    "xy": (2, lambda y: y[:, 0] * y[:, 1]),
}


@dataclass(frozen=True, eq=False)
class SphereGrid:
    a: float
    sigma: int
    y: np.ndarray
    frame: tuple[np.ndarray, np.ndarray]
    weights: np.ndarray

    @property
    def z0(self) -> float:
        return math.sqrt(1.0 - self.a * self.a)

    def embed(self, y: np.ndarray) -> np.ndarray:
        return np.concatenate([self.a * y, np.full((y.shape[0], 1), self.z0)], axis=1)

    def normal(self, y: np.ndarray) -> np.ndarray:
        return self.sigma * np.concatenate([-self.z0 * y, np.full((y.shape[0], 1), self.a)], axis=1)

    def geodesic(self, u: np.ndarray, s: float) -> np.ndarray:
        return math.cos(s / self.a) * self.y + math.sin(s / self.a) * u

    def integrate(self, density: np.ndarray) -> float:
        return float(math.fsum(density * self.weights))


def sphere_grid(a: float, n_lat: int, n_lon: int, *, sigma: int = -1, pole_tol: float = 1e-8) -> SphereGrid:
    if not (0.0 < a < 1.0):
        raise ValidationError("Radius must satisfy 0 < a < 1", context={"a": a})
    if n_lat < 4 or n_lon < 8:
        raise ValidationError("Grid too coarse", context={"n_lat": n_lat, "n_lon": n_lon})
    nodes, w = leggauss(n_lat)
    lon = 2.0 * np.pi * np.arange(n_lon) / n_lon
    ct, ph = np.meshgrid(nodes, lon, indexing="ij")
    ct, ph = ct.ravel(), ph.ravel()
    st = np.sqrt(1.0 - ct * ct)
    if np.min(st) < pole_tol:
        raise OracleError("Quadrature node too close to a pole", context={"min_sin": float(np.min(st))})
    y = np.stack([st * np.cos(ph), st * np.sin(ph), ct], axis=1)
    e_theta = np.stack([ct * np.cos(ph), ct * np.sin(ph), -st], axis=1)
    e_phi = np.stack([-np.sin(ph), np.cos(ph), np.zeros_like(ph)], axis=1)
    weights = np.repeat(w, n_lon) * (2.0 * np.pi / n_lon) * a * a
    return SphereGrid(a, sigma, y, (e_theta, e_phi), weights)


def _dot(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.einsum("ij,ij->i", u, v)


def _project(x: np.ndarray, v: np.ndarray) -> np.ndarray:
    return v - _dot(v, x)[:, None] * x


def _along(grid: SphereGrid, u: np.ndarray, step: float, field: Callable[[np.ndarray], np.ndarray]):
    samples = {k: field(grid.geodesic(u, k * step)) for k in (-2, -1, 0, 1, 2)}
    return geodesic_fd(samples, step)


def _hessian_norm(grid: SphereGrid, f: Callable[[np.ndarray], np.ndarray], step: float) -> np.ndarray:
    """|∇²f|², off-diagonal entry by polarization along (e1 + e2)/√2."""

    e1, e2 = grid.frame
    w = (e1 + e2) / math.sqrt(2.0)
    _, h11 = _along(grid, e1, step, f)
    _, h22 = _along(grid, e2, step, f)
    _, hww = _along(grid, w, step, f)
    h12 = hww - 0.5 * (h11 + h22)
    return h11 * h11 + h22 * h22 + 2.0 * h12 * h12


def qhat_quadrature_m2(
    t: RationalLike = 3,
    mode: str = "z",
    *,
    n_lat: int = 32,
    n_lon: int = 64,
    step: float = 1e-3,
    sigma: int = -1,
    rtol: float = 1e-5,
    atol: float = 1e-5,
) -> OracleResult:
    """The six K²-terms of the curvature energy's second variation along V = fν, their signed total and ∫|∇²f|²."""

    if mode not in MODES:
        raise ValidationError(f"Unknown mode '{mode}'", context={"modes": sorted(MODES)})
    degree, f_raw = MODES[mode]
    h = Hypersphere(2, to_rational(t), sigma)
    a = 1.0 / math.sqrt(1.0 + float(h.t))
    grid = sphere_grid(a, n_lat, n_lon, sigma=sigma)
    norm = math.sqrt(grid.integrate(f_raw(grid.y) ** 2))

    def f(y: np.ndarray) -> np.ndarray:
        return f_raw(y) / norm

    def V(y: np.ndarray) -> np.ndarray:
        return f(y)[:, None] * grid.normal(y)

    x = grid.embed(grid.y)
    v = V(grid.y)
    grad_v, dphi, lap_v, tau = [], [], np.zeros_like(v), np.zeros_like(v)
    for u in grid.frame:
        v1, v2 = _along(grid, u, step, V)
        x1, x2 = _along(grid, u, step, grid.embed)
        grad_v.append(_project(x, v1))
        dphi.append(x1)
        lap_v -= _project(x, v2) + _dot(v, x1)[:, None] * x1
        tau += _project(x, x2)

    dphi2 = sum(_dot(d, d) for d in dphi)
    gram = [[_dot(di, dj) for dj in dphi] for di in dphi]
    tp = [_dot(g, tau) for g in grad_v]
    lt = [_dot(d, lap_v) for d in dphi]
    pairs = [(i, j) for i in range(2) for j in range(2)]
    densities = (
        sum(tp[i] * tp[i] for i in range(2)) * dphi2,
        sum(tp[i] * tp[j] * gram[i][j] for i, j in pairs),
        sum(tp[i] * gram[i][j] * lt[j] for i, j in pairs),
        dphi2 * sum(lt[i] * tp[i] for i in range(2)),
        dphi2 * sum(lt[i] * lt[i] for i in range(2)),
        sum(gram[i][j] * lt[i] * lt[j] for i, j in pairs),
    )
    labels = [term.label for term in QHAT_TERMS]
    values = {label: grid.integrate(d) for label, d in zip(labels, densities)}
    values["total"] = sum(w * values[label] for w, label in zip(QHAT_WEIGHTS, labels))
    values["hessian"] = grid.integrate(_hessian_norm(grid, f, step))

    lam = Fraction(degree * (degree + 1)) * (1 + h.t)
    closed = term_values(QHAT_TERMS, h)
    # term_values carries the signed weights; the grid values are unweighted
    refs = {label: float(poly(lam)) / w for (label, poly), w in zip(closed.items(), QHAT_WEIGHTS)}
    refs["total"] = float(qhat_form(h).evaluate(lam))
    refs["hessian"] = float(lam * lam - h.ricci * lam)

    logger.debug("qhat m=2 grid %dx%d mode %s total %.3e", n_lat, n_lon, mode, values["total"])
    return OracleResult(
        OracleQuantity.QHAT_M2,
        values,
        {"general": refs},
        rtol,
        atol,
        metadata={"m": 2, "a": a, "t": str(h.t), "mode": mode, "lambda": str(lam), "n_lat": n_lat, "n_lon": n_lon, "step": step},
    )
