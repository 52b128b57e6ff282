"""Laplace spectrum of round spheres S^p(R), keyed by R^2 so R = 1/2 stays rational."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from scipy.special import comb

from .core.errors import DomainError
from .exact.rational import RationalLike, format_rational, to_rational


@dataclass(frozen=True)
class SpectrumLevel:
    j: int
    lam: Fraction
    mult: int

    def to_dict(self) -> dict[str, Any]:
        return {"j": self.j, "lambda": format_rational(self.lam), "multiplicity": self.mult}


def _check(p: int, R2: Fraction) -> None:
    if p < 1:
        raise DomainError("Sphere dimension must be positive", context={"p": p})
    if R2 <= 0:
        raise DomainError("R^2 must be positive", context={"R2": str(R2)})


def eigenvalue(p: int, R2: RationalLike, j: int) -> Fraction:
    """λ_j = j(j+p-1)/R^2."""

    r2 = to_rational(R2)
    _check(p, r2)
    if j < 0:
        raise DomainError("Level must be non-negative", context={"j": j})
    return Fraction(j * (j + p - 1)) / r2


def _binomial(n: int, k: int) -> int:
    # C(n, k) = 0 for k < 0
    if k < 0:
        return 0
    return int(comb(n, k, exact=True))


def multiplicity(p: int, j: int) -> int:
    """C(p+j, j) - C(p+j-2, j-2)."""

    if p < 1 or j < 0:
        raise DomainError("Need p >= 1 and j >= 0", context={"p": p, "j": j})
    mult = _binomial(p + j, j) - _binomial(p + j - 2, j - 2)
    if j == 0:
        assert mult == 1
    elif j == 1:
        assert mult == p + 1
    return mult


def cumulative_multiplicity(p: int, J: int) -> int:
    return sum(multiplicity(p, j) for j in range(J + 1))


def spectrum_iter(p: int, R2: RationalLike, cap: RationalLike) -> list[SpectrumLevel]:
    """All levels with λ_j < cap, increasing in j."""

    lam_cap = to_rational(cap)
    if lam_cap < 0:
        raise DomainError("Eigenvalue cap must be non-negative", context={"cap": str(lam_cap)})
    levels = []
    j = 0
    while True:
        lam = eigenvalue(p, R2, j)
        if lam >= lam_cap:
            return levels
        levels.append(SpectrumLevel(j, lam, multiplicity(p, j)))
        j += 1


def spectrum_levels(p: int, R2: RationalLike, count: int) -> list[SpectrumLevel]:
    """The first ``count`` levels."""

    if count < 0:
        raise DomainError("Level count must be non-negative", context={"count": count})
    return [SpectrumLevel(j, eigenvalue(p, R2, j), multiplicity(p, j)) for j in range(count)]
