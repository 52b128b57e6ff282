from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from typing import Any, Literal, Union

from ..core.errors import DomainError, RadicandMismatchError, ValidationError, ZeroDivisorError
from .rational import RationalLike, exact_sqrt, format_rational, parse_rational, sqrt_upper_bound, to_rational


@total_ordering
class QuadExtScalar:
    """Exact element ``rat + irr*sqrt(t)`` of Q(sqrt(t)).

    The radicand ``t`` travels with every value. Two scalars only combine when
    their radicands agree; plain ints and Fractions are lifted to the radicand
    of the other operand. When ``t`` is a rational square the split
    representation is kept as is, while equality, hashing and sign look at the
    value. A zero radicand folds the sqrt part away.
    """

    __slots__ = ("_rat", "_irr", "_t")

    def __init__(self, rat: RationalLike = 0, irr: RationalLike = 0, t: RationalLike = 0) -> None:
        self._rat: Fraction = to_rational(rat)
        self._irr: Fraction = to_rational(irr)
        self._t: Fraction = to_rational(t)
        if self._t < 0:
            raise DomainError("Radicand must be non-negative", context={"t": str(self._t)})
        if self._t == 0:
            self._irr = Fraction(0)

    @property
    def rat(self) -> Fraction:
        return self._rat

    @property
    def irr(self) -> Fraction:
        return self._irr

    @property
    def t(self) -> Fraction:
        return self._t

    @classmethod
    def from_rational(cls, x: RationalLike, t: RationalLike = 0) -> QuadExtScalar:
        return cls(x, 0, t)

    @classmethod
    def sqrt(cls, t: RationalLike, sign: int = 1) -> QuadExtScalar:
        """``sign * sqrt(t)``; zero when t = 0."""

        return cls(0, sign, t)

    # -- coercion -------------------------------------------------------

    def _coerce(self, other: Any) -> QuadExtScalar:
        if isinstance(other, QuadExtScalar):
            if other.t != self._t:
                raise RadicandMismatchError(
                    "Cannot combine scalars with different radicands",
                    context={"left": str(self._t), "right": str(other.t)},
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadExtScalar(other, 0, self._t)
        return NotImplemented

    def with_radicand(self, t: RationalLike) -> QuadExtScalar:
        """Re-tag a value whose sqrt part is zero."""

        if self._irr != 0:
            raise RadicandMismatchError(
                "Only rational values can change radicand",
                context={"value": str(self), "t": str(t)},
            )
        return QuadExtScalar(self._rat, 0, t)

    # -- predicates -----------------------------------------------------

    def _square_root_of_t(self) -> Fraction | None:
        return exact_sqrt(self._t)

    def is_rational(self) -> bool:
        return self._irr == 0

    def is_zero(self) -> bool:
        if self._rat == 0 and self._irr == 0:
            return True
        root = self._square_root_of_t()
        return root is not None and self._rat + self._irr * root == 0

    def rational_value(self) -> Fraction:
        """The value as a Fraction; raises if it is irrational."""

        if self._irr == 0:
            return self._rat
        root = self._square_root_of_t()
        if root is None:
            raise ValidationError("Scalar is irrational", context={"value": str(self)})
        return self._rat + self._irr * root

    def sign(self) -> int:
        x, y = self._rat, self._irr
        if y == 0 or self._t == 0:
            return (x > 0) - (x < 0)
        sx, sy = (x > 0) - (x < 0), (y > 0) - (y < 0)
        if sx == 0 or sx == sy:
            return sy
        # opposite signs: compare |x| with |y|sqrt(t)
        lhs, rhs = x * x, y * y * self._t
        if lhs == rhs:
            return 0
        return sx if lhs > rhs else sy

    # -- arithmetic -----------------------------------------------------

    def conjugate(self) -> QuadExtScalar:
        return QuadExtScalar(self._rat, -self._irr, self._t)

    def norm(self) -> Fraction:
        return self._rat * self._rat - self._irr * self._irr * self._t

    def abs_upper_bound(self) -> Fraction:
        """A rational >= |value|."""

        if self._irr == 0:
            return abs(self._rat)
        return abs(self._rat) + abs(self._irr) * sqrt_upper_bound(self._t)

    def __neg__(self) -> QuadExtScalar:
        return QuadExtScalar(-self._rat, -self._irr, self._t)

    def __pos__(self) -> QuadExtScalar:
        return self

    def __add__(self, other: Any) -> QuadExtScalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExtScalar(self._rat + o.rat, self._irr + o.irr, self._t)

    def __radd__(self, other: Any) -> QuadExtScalar:
        return self + other

    def __sub__(self, other: Any) -> QuadExtScalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExtScalar(self._rat - o.rat, self._irr - o.irr, self._t)

    def __rsub__(self, other: Any) -> QuadExtScalar:
        return (-self) + other

    def __mul__(self, other: Any) -> QuadExtScalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExtScalar(
            self._rat * o.rat + self._irr * o.irr * self._t,
            self._rat * o.irr + self._irr * o.rat,
            self._t,
        )

    def __rmul__(self, other: Any) -> QuadExtScalar:
        return self * other

    def __truediv__(self, other: Any) -> QuadExtScalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisorError("Division by zero in Q(sqrt(t))", context={"t": str(self._t)})
        if o.irr == 0 or o._square_root_of_t() is not None:
            v = o.rational_value()
            return QuadExtScalar(self._rat / v, self._irr / v, self._t)
        n = o.norm()
        num = self * o.conjugate()
        return QuadExtScalar(num.rat / n, num.irr / n, self._t)

    def __rtruediv__(self, other: Any) -> QuadExtScalar:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, exponent: int) -> QuadExtScalar:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return QuadExtScalar(1, 0, self._t) / (self ** (-exponent))
        result = QuadExtScalar(1, 0, self._t)
        base = self
        n = exponent
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadExtScalar) and other.t != self._t:
            # different tags: equal only when both collapse to the same rational
            try:
                return self.rational_value() == other.rational_value()
            except ValidationError:
                return False
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self - o).is_zero()

    def __lt__(self, other: Any) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        try:
            return hash(self.rational_value())
        except ValidationError:
            return hash((self._rat, self._irr, self._t))

    def __float__(self) -> float:
        return float(self._rat) + float(self._irr) * math.sqrt(self._t)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- presentation ---------------------------------------------------

    def __repr__(self) -> str:
        return f"QuadExtScalar({self._rat!s}, {self._irr!s}, t={self._t!s})"

    def __str__(self) -> str:
        if self._irr == 0 or self._t == 0:
            return format_rational(self._rat)
        exact_root = self._square_root_of_t()
        if exact_root is not None:
            return format_rational(self._rat + self._irr * exact_root)
        root = f"√{format_rational(self._t)}" if self._t.denominator == 1 else f"√({self._t})"
        if self._irr == 1:
            irr = root
        elif self._irr == -1:
            irr = f"-{root}"
        else:
            irr = f"{format_rational(self._irr)}{root}"
        if self._rat == 0:
            return irr
        sep = "" if irr.startswith("-") else "+"
        return f"{format_rational(self._rat)}{sep}{irr}"

    def to_dict(self) -> dict[str, str]:
        return {
            "rat": format_rational(self._rat),
            "irr": format_rational(self._irr),
            "t": format_rational(self._t),
        }

    @classmethod
    def from_dict(cls, data: dict[str, str]) -> QuadExtScalar:
        return cls(parse_rational(data["rat"]), parse_rational(data["irr"]), parse_rational(data["t"]))


ScalarLike = Union[QuadExtScalar, int, Fraction]


def quadext_arith(
    a: QuadExtScalar, b: ScalarLike, op: Literal["add", "sub", "mul", "div"]
) -> QuadExtScalar:
    """Exact field arithmetic in Q(sqrt(t))."""

    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValidationError(f"Unknown operation '{op}'", context={"op": op})
