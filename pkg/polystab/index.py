"""Normal Morse index from a quadratic-form polynomial and the sphere spectrum.

Q is assumed diagonal over distinct eigenspaces, so the index is the total
multiplicity of the levels with Q(λ_j) < 0. Levels at or beyond the Cauchy
bound of Q are positive and never enumerated.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

from .core.enums import Energy, Source
from .exact import QuadExtScalar, cauchy_root_bound, format_rational
from .exact.rational import RationalLike, to_rational
from .forms import FormRegistry, QuadraticFormPoly
from .geometry import Hypersphere
from .logging import get_logger
from .spectrum import SpectrumLevel, spectrum_iter

logger = get_logger(__name__)

SMALL_SPHERE_T = Fraction(3)


@dataclass(frozen=True)
class LevelValue:
    level: SpectrumLevel
    value: Fraction

    def to_dict(self) -> dict[str, Any]:
        return {**self.level.to_dict(), "Q": format_rational(self.value)}


@dataclass(frozen=True)
class IndexReport:
    energy: Energy
    m: int
    source: str
    negative_levels: tuple[LevelValue, ...]
    zero_levels: tuple[LevelValue, ...]
    cutoff_bound: Optional[Fraction]
    vanishes_identically: bool = False

    @property
    def index(self) -> int:
        return sum(lv.level.mult for lv in self.negative_levels)

    @property
    def nullity(self) -> int:
        """Σ mult over levels with Q(λ_j) = 0 below the cutoff."""

        return sum(lv.level.mult for lv in self.zero_levels)

    def to_dict(self) -> dict[str, Any]:
        return {
            "energy": self.energy.value,
            "m": self.m,
            "source": self.source,
            "index": self.index,
            "nullity": self.nullity,
            "vanishesIdentically": self.vanishes_identically,
            "cutoffBound": format_rational(self.cutoff_bound) if self.cutoff_bound is not None else None,
            "negativeLevels": [lv.to_dict() for lv in self.negative_levels],
            "zeroLevels": [lv.to_dict() for lv in self.zero_levels],
        }

    def to_row(self) -> dict[str, Any]:
        return {
            "energy": self.energy.value,
            "m": self.m,
            "source": self.source,
            "index": self.index,
            "nullity": self.nullity,
            "negative_j": " ".join(str(lv.level.j) for lv in self.negative_levels),
            "zero_j": " ".join(str(lv.level.j) for lv in self.zero_levels),
            "cutoff": format_rational(self.cutoff_bound) if self.cutoff_bound is not None else "",
        }


def evaluate_on_spectrum(
    qf: QuadraticFormPoly, p: int, R2: RationalLike, cap: RationalLike
) -> list[tuple[SpectrumLevel, QuadExtScalar]]:
    return [(level, qf.poly(level.lam)) for level in spectrum_iter(p, R2, cap)]


def normal_index(qf: QuadraticFormPoly, p: Optional[int] = None, R2: Optional[RationalLike] = None) -> IndexReport:
    """Index of ``qf`` on S^p(R); p and R^2 default to the domain of the hypersphere."""

    p = qf.m if p is None else p
    r2 = Fraction(1) / (1 + qf.t) if R2 is None else to_rational(R2)

    if qf.poly.is_zero():
        logger.debug("%s/%s vanishes identically at m=%d", qf.energy.value, qf.route, qf.m)
        return IndexReport(qf.energy, qf.m, qf.route, (), (), None, vanishes_identically=True)

    bound = cauchy_root_bound(qf.poly)
    negative, zero = [], []
    # every level with λ_j < B; Q has the sign of its leading coefficient beyond B
    for level, value in evaluate_on_spectrum(qf, p, r2, bound):
        q = value.rational_value()
        if q < 0:
            negative.append(LevelValue(level, q))
        elif q == 0:
            zero.append(LevelValue(level, q))
    report = IndexReport(qf.energy, qf.m, qf.route, tuple(negative), tuple(zero), bound)
    logger.debug("index %s/%s m=%d: %d (cutoff %s)", qf.energy.value, qf.route, qf.m, report.index, bound)
    return report


def _sweep_one(energy: Energy, m: int, source: Source, norms: Source, t: Fraction) -> IndexReport:
    qf = FormRegistry.create(energy, source, Hypersphere(m, t), norms=norms)
    return normal_index(qf)


def index_sweep(
    energy: Energy,
    m_range: Iterable[int],
    sources: Sequence[Source] = (Source.PRINTED, Source.GENERAL, Source.SMALL_SPHERE),
    *,
    norms: Source = Source.COMPOSITION,
    t: RationalLike = SMALL_SPHERE_T,
    workers: int = 1,
) -> list[IndexReport]:
    """One report per (m, source), ordered by m then by the given source order."""

    t_q = to_rational(t)
    jobs = [(m, Source(s)) for m in m_range for s in sources]
    if workers <= 1:
        return [_sweep_one(Energy(energy), m, s, norms, t_q) for m, s in jobs]
    # map keeps submission order
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda job: _sweep_one(Energy(energy), job[0], job[1], norms, t_q), jobs))


def harmonic_limit_index(m: int) -> IndexReport:
    """General-form Q₄ of the totally geodesic S^m(1); equals λ²(λ-m)²."""

    qf = FormRegistry.create(Energy.E4, Source.GENERAL, Hypersphere(m, 0))
    return normal_index(qf, m, 1)
