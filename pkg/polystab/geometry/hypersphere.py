from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from ..core.errors import DomainError, ValidationError
from ..exact import QuadExtScalar
from ..exact.rational import RationalLike, exact_sqrt, format_rational, to_rational
from .spaceform import FrameVector


@dataclass(frozen=True)
class Hypersphere:
    """Small hypersphere S^m(a) in S^(m+1), recorded through t = (1 - a^2)/a^2.

    All downstream algebra needs only t and the orientation sign, so a radius
    with irrational a but rational t (a = 1/sqrt(2) gives t = 1) stays exact.
    Principal curvature c = sigma*sqrt(t), A = c Id, H = c.
    """

    m: int
    t: Fraction
    sigma: int = -1

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or isinstance(self.m, bool) or self.m < 1:
            raise DomainError("Dimension m must be a positive integer", context={"m": self.m})
        object.__setattr__(self, "t", to_rational(self.t))
        if self.t < 0:
            raise DomainError("t = (1-a^2)/a^2 must be non-negative", context={"t": str(self.t)})
        if self.sigma not in (-1, 1):
            raise ValidationError("Orientation sign must be -1 or +1", context={"sigma": self.sigma})

    @property
    def c(self) -> QuadExtScalar:
        return QuadExtScalar.sqrt(self.t, self.sigma)

    @property
    def H(self) -> QuadExtScalar:
        return self.c

    @property
    def norm_a2(self) -> Fraction:
        return self.m * self.t

    @property
    def ricci(self) -> Fraction:
        return (self.m - 1) * (1 + self.t)

    @property
    def a2(self) -> Fraction:
        return 1 / (1 + self.t)

    def radius(self) -> Optional[Fraction]:
        """Exact a when a^2 is a rational square."""

        return exact_sqrt(self.a2)

    def is_totally_geodesic(self) -> bool:
        return self.t == 0

    def scalar(self, value: RationalLike) -> QuadExtScalar:
        """A rational lifted to this sphere's radicand."""

        return QuadExtScalar(value, 0, self.t)

    def flipped(self) -> Hypersphere:
        return Hypersphere(self.m, self.t, -self.sigma)

    def shape_operator(self, X: FrameVector) -> FrameVector:
        """A X for a tangent X; A = c Id."""

        return FrameVector(self.scalar(0), tuple(a * self.c for a in X.tangent))

    def normal_derivative(self, k: QuadExtScalar, i: int) -> FrameVector:
        """∇̄_{e_i}(k ν) = -k A e_i for constant k (Weingarten)."""

        return -self.shape_operator(FrameVector.frame(i, self.m, self.t)).scale(k)

    def to_dict(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "t": format_rational(self.t),
            "sigma": self.sigma,
            "H": self.H.to_dict(),
            "normA2": format_rational(self.norm_a2),
            "ricci": format_rational(self.ricci),
        }


def t_from_radius(a: RationalLike) -> Fraction:
    a_q = to_rational(a)
    if not (0 < a_q <= 1):
        raise DomainError("Radius a must satisfy 0 < a <= 1", context={"a": str(a_q)})
    return (1 - a_q * a_q) / (a_q * a_q)


def new_hypersphere(
    m: int,
    a: RationalLike | None = None,
    *,
    t: RationalLike | None = None,
    sigma: int = -1,
) -> Hypersphere:
    """Build the record from exactly one of the radius ``a`` or ``t``."""

    if (a is None) == (t is None):
        raise ValidationError("Give exactly one of a or t", context={"a": a, "t": t})
    t_q = t_from_radius(a) if a is not None else to_rational(t)
    return Hypersphere(m, t_q, sigma)
