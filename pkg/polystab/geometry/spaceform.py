from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..core.errors import ValidationError
from ..exact import QuadExtScalar
from ..exact.rational import RationalLike, to_rational


@dataclass(frozen=True)
class FrameVector:
    """Vector of the pull-back bundle at a point, in the frame (ν, e_1, ..., e_m)."""

    normal: QuadExtScalar
    tangent: tuple[QuadExtScalar, ...]

    @classmethod
    def along_normal(cls, k: QuadExtScalar, m: int) -> FrameVector:
        zero = QuadExtScalar(0, 0, k.t)
        return cls(k, (zero,) * m)

    @classmethod
    def frame(cls, i: int, m: int, t: RationalLike) -> FrameVector:
        """dφ(e_i) for an isometric immersion."""

        zero = QuadExtScalar(0, 0, t)
        one = QuadExtScalar(1, 0, t)
        return cls(zero, tuple(one if j == i else zero for j in range(m)))

    @property
    def dim(self) -> int:
        return len(self.tangent)

    def _check(self, other: FrameVector) -> None:
        if other.dim != self.dim:
            raise ValidationError("Frame vectors of different dimension", context={"left": self.dim, "right": other.dim})

    def __add__(self, other: FrameVector) -> FrameVector:
        self._check(other)
        return FrameVector(self.normal + other.normal, tuple(a + b for a, b in zip(self.tangent, other.tangent)))

    def __sub__(self, other: FrameVector) -> FrameVector:
        return self + (-other)

    def __neg__(self) -> FrameVector:
        return FrameVector(-self.normal, tuple(-a for a in self.tangent))

    def scale(self, k: QuadExtScalar | int | Fraction) -> FrameVector:
        return FrameVector(self.normal * k, tuple(a * k for a in self.tangent))

    def inner(self, other: FrameVector) -> QuadExtScalar:
        self._check(other)
        acc = self.normal * other.normal
        for a, b in zip(self.tangent, other.tangent):
            acc = acc + a * b
        return acc

    def is_zero(self) -> bool:
        return self.normal.is_zero() and all(a.is_zero() for a in self.tangent)

    def is_normal(self) -> bool:
        return all(a.is_zero() for a in self.tangent)

    def zero_like(self) -> FrameVector:
        return self.scale(0)


@dataclass(frozen=True)
class SpaceForm:
    """Target of constant sectional curvature K."""

    K: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "K", to_rational(self.K))

    def curvature(self, X: FrameVector, Y: FrameVector, Z: FrameVector) -> FrameVector:
        """R(X,Y)Z = K(<Y,Z>X - <X,Z>Y)."""

        return (X.scale(Y.inner(Z)) - Y.scale(X.inner(Z))).scale(self.K)

    def curvature_derivative(self, W: FrameVector, X: FrameVector, Y: FrameVector, Z: FrameVector) -> FrameVector:
        """(∇_W R)(X,Y)Z, identically zero for a space form."""

        return Z.zero_like()
