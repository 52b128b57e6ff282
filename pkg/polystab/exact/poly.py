from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence, Union

from ..core.errors import (
    InconsistentSamplesError,
    RadicandMismatchError,
    RootBoundError,
    ValidationError,
)
from .quadext import QuadExtScalar, ScalarLike
from .rational import RationalLike, format_rational, to_rational

CoefficientLike = Union[QuadExtScalar, int, Fraction]


def _lift(value: CoefficientLike, t: Fraction) -> QuadExtScalar:
    if isinstance(value, QuadExtScalar):
        if value.t == t:
            return value
        return value.with_radicand(t)
    return QuadExtScalar(value, 0, t)


class LambdaPoly:
    """Dense polynomial in the Laplace eigenvalue λ over Q(sqrt(t)).

    ``coeffs[k]`` multiplies λ**k; trailing zeros are trimmed so the zero
    polynomial has no coefficients and degree -1. A rational-only operand is
    re-tagged to the radicand of the other side; otherwise radicands must match.
    """

    __slots__ = ("_coeffs", "_t")

    def __init__(self, coeffs: Iterable[CoefficientLike] = (), t: RationalLike | None = None) -> None:
        items = list(coeffs)
        if t is None:
            tags = {c.t for c in items if isinstance(c, QuadExtScalar) and not c.is_rational()}
            if len(tags) > 1:
                raise RadicandMismatchError("Coefficients carry different radicands", context={"radicands": sorted(map(str, tags))})
            t = tags.pop() if tags else next((c.t for c in items if isinstance(c, QuadExtScalar)), 0)
        self._t: Fraction = to_rational(t)
        lifted = [_lift(c, self._t) for c in items]
        while lifted and lifted[-1].is_zero():
            lifted.pop()
        self._coeffs: tuple[QuadExtScalar, ...] = tuple(lifted)

    @classmethod
    def zero(cls, t: RationalLike = 0) -> LambdaPoly:
        return cls((), t)

    @classmethod
    def constant(cls, value: CoefficientLike, t: RationalLike | None = None) -> LambdaPoly:
        return cls((value,), t)

    @classmethod
    def lam(cls, t: RationalLike = 0) -> LambdaPoly:
        """The formal variable λ."""

        return cls((0, 1), t)

    @property
    def coeffs(self) -> tuple[QuadExtScalar, ...]:
        return self._coeffs

    @property
    def t(self) -> Fraction:
        return self._t

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def leading(self) -> QuadExtScalar:
        if not self._coeffs:
            return QuadExtScalar(0, 0, self._t)
        return self._coeffs[-1]

    def coefficient(self, k: int) -> QuadExtScalar:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return QuadExtScalar(0, 0, self._t)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_rational_only(self) -> bool:
        return all(c.is_rational() for c in self._coeffs)

    def rational_coeffs(self) -> tuple[Fraction, ...]:
        if not self.is_rational_only():
            raise ValidationError("Polynomial has irrational coefficients", context={"poly": str(self)})
        return tuple(c.rat for c in self._coeffs)

    def with_radicand(self, t: RationalLike) -> LambdaPoly:
        return LambdaPoly((c.with_radicand(t) for c in self._coeffs), t)

    # -- arithmetic -----------------------------------------------------

    def _align(self, other: LambdaPoly) -> tuple[LambdaPoly, LambdaPoly]:
        if other.t == self._t:
            return self, other
        if other.is_rational_only():
            return self, other.with_radicand(self._t)
        if self.is_rational_only():
            return self.with_radicand(other.t), other
        raise RadicandMismatchError(
            "Cannot combine polynomials with different radicands",
            context={"left": str(self._t), "right": str(other.t)},
        )

    def _as_poly(self, other: Any) -> LambdaPoly | Any:
        if isinstance(other, LambdaPoly):
            return other
        if isinstance(other, (QuadExtScalar, int, Fraction)) and not isinstance(other, bool):
            return LambdaPoly.constant(other, self._t if not isinstance(other, QuadExtScalar) else None)
        return NotImplemented

    def __add__(self, other: Any) -> LambdaPoly:
        o = self._as_poly(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self._align(o)
        n = max(len(a.coeffs), len(b.coeffs))
        return LambdaPoly((a.coefficient(k) + b.coefficient(k) for k in range(n)), a.t)

    def __radd__(self, other: Any) -> LambdaPoly:
        return self + other

    def __neg__(self) -> LambdaPoly:
        return LambdaPoly((-c for c in self._coeffs), self._t)

    def __sub__(self, other: Any) -> LambdaPoly:
        o = self._as_poly(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> LambdaPoly:
        return (-self) + other

    def __mul__(self, other: Any) -> LambdaPoly:
        o = self._as_poly(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self._align(o)
        if a.is_zero() or b.is_zero():
            return LambdaPoly.zero(a.t)
        out = [QuadExtScalar(0, 0, a.t)] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            for j, y in enumerate(b.coeffs):
                out[i + j] = out[i + j] + x * y
        return LambdaPoly(out, a.t)

    def __rmul__(self, other: Any) -> LambdaPoly:
        return self * other

    def __pow__(self, exponent: int) -> LambdaPoly:
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = LambdaPoly.constant(1, self._t)
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, lam: ScalarLike) -> QuadExtScalar:
        return lambda_poly_eval(self, lam)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, QuadExtScalar)) and not isinstance(other, bool):
            other = LambdaPoly.constant(other, self._t if not isinstance(other, QuadExtScalar) else None)
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        if len(self._coeffs) != len(other.coeffs):
            return False
        return all(x == y for x, y in zip(self._coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"LambdaPoly({[str(c) for c in self._coeffs]}, t={self._t})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c.is_zero():
                continue
            text = str(c)
            needs_parens = not c.is_rational() and c.rat != 0
            if k == 0:
                term = f"({text})" if needs_parens else text
            else:
                power = "λ" if k == 1 else f"λ^{k}"
                if c == 1:
                    term = power
                elif c == -1:
                    term = f"-{power}"
                else:
                    term = f"({text}){power}" if needs_parens else f"{text}{power}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def to_list(self) -> list[dict[str, str]]:
        return [c.to_dict() for c in self._coeffs]


def lambda_poly_eval(p: LambdaPoly, lam: ScalarLike) -> QuadExtScalar:
    """Horner evaluation at ``lam``, exact."""

    acc = QuadExtScalar(0, 0, p.t)
    for c in reversed(p.coeffs):
        acc = acc * lam + c
    return acc


# ---------------------------------------------------------------------------
# interpolation in m
# ---------------------------------------------------------------------------


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    items = list(coeffs)
    while items and items[-1] == 0:
        items.pop()
    return tuple(items)


def eval_univariate(coeffs: Sequence[Fraction], x: RationalLike) -> Fraction:
    acc = Fraction(0)
    xv = to_rational(x)
    for c in reversed(coeffs):
        acc = acc * xv + c
    return acc


def lagrange_coefficients(points: Sequence[tuple[RationalLike, RationalLike]]) -> tuple[Fraction, ...]:
    """Ascending monomial coefficients of the interpolant through ``points`` (Newton form, expanded)."""

    xs = [to_rational(x) for x, _ in points]
    ys = [to_rational(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise InconsistentSamplesError("Interpolation nodes must be distinct", context={"nodes": [str(x) for x in xs]})
    table = list(ys)
    newton: list[Fraction] = []
    n = len(xs)
    for level in range(n):
        newton.append(table[0])
        table = [(table[i + 1] - table[i]) / (xs[i + level + 1] - xs[i]) for i in range(n - level - 1)]
    coeffs = [Fraction(0)]
    basis = [Fraction(1)]
    for k, d in enumerate(newton):
        scaled = [d * b for b in basis]
        coeffs = [
            (coeffs[i] if i < len(coeffs) else Fraction(0)) + (scaled[i] if i < len(scaled) else Fraction(0))
            for i in range(max(len(coeffs), len(scaled)))
        ]
        basis = _poly_mul(basis, [-xs[k], Fraction(1)])
    return _trim(coeffs)


def format_m_poly(coeffs: Sequence[Fraction], symbol: str = "m") -> str:
    """``(588, -420, 39, -36)`` -> ``"-36m^3+39m^2-420m+588"``."""

    out = ""
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        text = format_rational(mag)
        if k > 0 and mag == 1:
            text = ""
        elif k > 0 and mag.denominator != 1:
            text = f"({text})"
        power = "" if k == 0 else (symbol if k == 1 else f"{symbol}^{k}")
        sign = "-" if c < 0 else ("+" if out else "")
        out += f"{sign}{text}{power}"
    return out or "0"


@dataclass(frozen=True)
class MCoeffPoly:
    """λ-polynomial whose coefficients are polynomials in the dimension m.

    ``coeffs[k]`` holds the ascending m-coefficients multiplying λ**k.
    """

    coeffs: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        trimmed = [_trim([to_rational(c) for c in row]) for row in self.coeffs]
        while trimmed and not trimmed[-1]:
            trimmed.pop()
        object.__setattr__(self, "coeffs", tuple(trimmed))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[RationalLike]]) -> MCoeffPoly:
        return cls(tuple(tuple(to_rational(c) for c in row) for row in rows))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def m_polynomial(self, k: int) -> tuple[Fraction, ...]:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ()

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for row in self.coeffs for c in row)

    def evaluate(self, m: int, t: RationalLike = 0) -> LambdaPoly:
        return LambdaPoly((eval_univariate(row, m) for row in self.coeffs), t)

    def format_row(self, k: int) -> str:
        return format_m_poly(self.m_polynomial(k))

    def to_dict(self) -> dict[str, str]:
        return {f"lambda^{k}": self.format_row(k) for k in range(len(self.coeffs))}

    def __str__(self) -> str:
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            row = self.format_row(k)
            if row == "0":
                continue
            power = "" if k == 0 else ("λ" if k == 1 else f"λ^{k}")
            parts.append(f"({row}){power}" if power else f"({row})")
        return " + ".join(parts) or "0"


def interpolate_m(
    samples: Sequence[tuple[int, LambdaPoly]], max_degree: int = 4
) -> MCoeffPoly:
    """Recover symbolic-m coefficients by exact Lagrange interpolation.

    The first ``max_degree + 1`` samples are interpolation nodes; any further
    samples are held out and must be reproduced exactly.
    """

    if not samples:
        raise ValidationError("interpolate_m needs at least one sample")
    ms = [m for m, _ in samples]
    if len(set(ms)) != len(ms):
        raise InconsistentSamplesError("Sample dimensions must be distinct", context={"m": ms})
    for m, poly in samples:
        if not poly.is_rational_only():
            raise ValidationError("Samples must be rational-only", context={"m": m, "poly": str(poly)})

    nodes = list(samples[: max_degree + 1])
    holdout = list(samples[max_degree + 1 :])
    width = max(len(poly.coeffs) for _, poly in samples)
    rows = []
    for k in range(width):
        rows.append(lagrange_coefficients([(m, poly.coefficient(k).rat) for m, poly in nodes]))
    result = MCoeffPoly(tuple(rows))

    for m, poly in holdout:
        if result.evaluate(m, poly.t) != poly:
            raise InconsistentSamplesError(
                f"Interpolant disagrees with held-out sample at m={m}",
                context={"m": m, "expected": str(poly), "interpolated": str(result.evaluate(m))},
            )
    return result


def cauchy_root_bound(p: LambdaPoly) -> Fraction:
    """B = 1 + max |a_i / a_d|; p has the sign of its leading coefficient for λ >= B."""

    lead = p.leading
    if p.is_zero() or not lead.is_rational() or lead.rat <= 0:
        raise RootBoundError(
            "Leading coefficient must be a positive rational",
            context={"leading": str(lead), "poly": str(p)},
        )
    a_d = lead.rat
    lower = [c.abs_upper_bound() / a_d for c in p.coeffs[:-1]]
    return Fraction(1) + max(lower, default=Fraction(0))
