"""Published coefficient tables for the small hypersphere a = 1/2, t = 3, K = 1.

Rows are ascending powers of m; row k multiplies λ^k. Nothing in this module
is derived: it is a transcription to compare the derivation routes against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..core.enums import Energy, Source
from ..core.errors import DomainError
from ..exact import LambdaPoly, MCoeffPoly
from .sections import BundleNorms

PRINTED_T = Fraction(3)
PRINTED_K = Fraction(1)

PRINTED_Q4 = MCoeffPoly.from_rows(
    [
        [0, 0, 0, 0, -216],
        [588, -924, 327, -36],
        [480, 286, 25],
        [72, 10],
        [1],
    ]
)

PRINTED_Q4_ES = MCoeffPoly.from_rows(
    [
        [0, 0, 0, 0, -216],
        [576, -900, 312, -33],
        [480, 286, 25],
        [72, 10],
        [1],
    ]
)

# 3(m-1)(m-2)^2 λ
PRINTED_QHAT = MCoeffPoly.from_rows([[], [-12, 24, -15, 3]])

PRINTED_LAPLACE_NORM = MCoeffPoly.from_rows([[0, 0, 9], [12, 6], [1]])
PRINTED_GRADIENT_LAPLACE_NORM = MCoeffPoly.from_rows([[0, 0, 0, 27], [84, 24, 27], [36, 9], [1]])
PRINTED_BILAPLACE_NORM = MCoeffPoly.from_rows(
    [
        [0, 0, 0, 0, 81],
        [588, -672, 516, 108],
        [480, 382, 54],
        [72, 12],
        [1],
    ]
)


@dataclass(frozen=True)
class FirstLevelDisplay:
    """A published value of Q at the first nonzero eigenvalue λ = 4m, as a polynomial in m."""

    energy: Energy
    m_poly: tuple[Fraction, ...]


PRINTED_FIRST_LEVEL = {
    Energy.E4: FirstLevelDisplay(Energy.E4, tuple(Fraction(c) for c in (0, 2352, 3984, 10672, 936))),
    Energy.ES4: FirstLevelDisplay(Energy.ES4, tuple(Fraction(c) for c in (0, 2304, 4080, 10432, 948))),
}

_TABLES = {
    Energy.E4: PRINTED_Q4,
    Energy.ES4: PRINTED_Q4_ES,
    Energy.HAT: PRINTED_QHAT,
}


def printed_table(energy: Energy) -> MCoeffPoly:
    return _TABLES[Energy(energy)]


def printed_poly(energy: Energy, m: int) -> LambdaPoly:
    if m < 1:
        raise DomainError("m must be >= 1", context={"m": m})
    return printed_table(energy).evaluate(m, PRINTED_T)


def printed_bundle_norms(m: int) -> BundleNorms:
    if m < 1:
        raise DomainError("m must be >= 1", context={"m": m})
    return BundleNorms(
        laplace=PRINTED_LAPLACE_NORM.evaluate(m, PRINTED_T),
        gradient_laplace=PRINTED_GRADIENT_LAPLACE_NORM.evaluate(m, PRINTED_T),
        bilaplace=PRINTED_BILAPLACE_NORM.evaluate(m, PRINTED_T),
        source=Source.PRINTED,
    )
