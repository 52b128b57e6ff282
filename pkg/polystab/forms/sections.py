"""Normal sections p(λ) f ν + q(λ) ∇f on a Laplace eigenfunction f.

With Δf = λf and ∫f² = 1 every integral of a product of such sections is a
polynomial in λ; the pairing below is that integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from ..core.enums import Source
from ..exact import LambdaPoly, QuadExtScalar
from ..geometry import Hypersphere

PolyLike = Union[LambdaPoly, QuadExtScalar, int, Fraction]


@dataclass(frozen=True)
class SymbolicNormalSection:
    p: LambdaPoly
    q: LambdaPoly

    @classmethod
    def of(cls, p: PolyLike, q: PolyLike, t: Fraction) -> SymbolicNormalSection:
        def lift(x: PolyLike) -> LambdaPoly:
            return x if isinstance(x, LambdaPoly) else LambdaPoly.constant(x, t if not isinstance(x, QuadExtScalar) else None)

        return cls(lift(p), lift(q))

    @classmethod
    def normal(cls, h: Hypersphere) -> SymbolicNormalSection:
        """f ν."""

        return cls.of(1, 0, h.t)

    @classmethod
    def gradient(cls, h: Hypersphere) -> SymbolicNormalSection:
        """∇f."""

        return cls.of(0, 1, h.t)

    def __add__(self, other: SymbolicNormalSection) -> SymbolicNormalSection:
        return SymbolicNormalSection(self.p + other.p, self.q + other.q)

    def __sub__(self, other: SymbolicNormalSection) -> SymbolicNormalSection:
        return SymbolicNormalSection(self.p - other.p, self.q - other.q)

    def scale(self, k: PolyLike) -> SymbolicNormalSection:
        return SymbolicNormalSection(self.p * k, self.q * k)

    def to_dict(self) -> dict[str, Any]:
        return {"p": str(self.p), "q": str(self.q)}


def pairing(s1: SymbolicNormalSection, s2: SymbolicNormalSection) -> LambdaPoly:
    """∫<s1, s2> = p1 p2 + λ q1 q2, since ∫|∇f|² = λ."""

    lam = LambdaPoly.lam(s1.p.t)
    return s1.p * s2.p + lam * s1.q * s2.q


def apply_bar_laplacian(s: SymbolicNormalSection, h: Hypersphere) -> SymbolicNormalSection:
    """Rough Laplacian on the pull-back bundle.

    Δ̄(fν) = (λ + mt) f ν + 2c ∇f and Δ̄(∇f) = 2cλ f ν + (λ - r + t) ∇f, the
    latter from the Gauss formula, A = c Id and Δ∇f = (λ - r)∇f.
    """

    lam = LambdaPoly.lam(h.t)
    two_c = h.c * 2
    p = (lam + h.norm_a2) * s.p + lam * two_c * s.q
    q = s.p * two_c + (lam - h.ricci + h.t) * s.q
    return SymbolicNormalSection(p, q)


def gradient_norm(s: SymbolicNormalSection, h: Hypersphere) -> LambdaPoly:
    """∫|∇̄s|² from ∇̄_X(P fν + Q∇f) = (P + cQ)(Xf)ν - cPf X + Q∇_X∇f.

    Uses ∫|∇²f|² = λ² - rλ and ∫ f Δf = λ.
    """

    lam = LambdaPoly.lam(h.t)
    P, Q = s.p, s.q
    normal_part = lam * (P + Q * h.c) ** 2
    shape_part = P * P * h.norm_a2
    cross = lam * P * Q * (h.c * 2)
    hessian_part = Q * Q * (lam * lam - lam * h.ricci)
    return normal_part + shape_part + cross + hessian_part


@dataclass(frozen=True)
class BundleNorms:
    """∫|Δ̄(fν)|², ∫|∇̄Δ̄(fν)|², ∫|Δ̄²(fν)|²."""

    laplace: LambdaPoly
    gradient_laplace: LambdaPoly
    bilaplace: LambdaPoly
    source: Source

    def as_tuple(self) -> tuple[LambdaPoly, LambdaPoly, LambdaPoly]:
        return (self.laplace, self.gradient_laplace, self.bilaplace)

    def to_dict(self) -> dict[str, Any]:
        return {
            "source": self.source.value,
            "laplace": [str(c) for c in self.laplace.coeffs],
            "gradientLaplace": [str(c) for c in self.gradient_laplace.coeffs],
            "bilaplace": [str(c) for c in self.bilaplace.coeffs],
        }


def bundle_norm_polys(h: Hypersphere) -> BundleNorms:
    s0 = SymbolicNormalSection.normal(h)
    s1 = apply_bar_laplacian(s0, h)
    s2 = apply_bar_laplacian(s1, h)
    return BundleNorms(
        laplace=pairing(s1, s1),
        gradient_laplace=gradient_norm(s1, h),
        bilaplace=pairing(s2, s2),
        source=Source.COMPOSITION,
    )
