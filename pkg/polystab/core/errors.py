from __future__ import annotations

from typing import Any, Optional


class PolystabError(Exception):
    """Base error for polystab."""

    def __init__(self, message: str, *, context: Optional[dict[str, Any]] = None) -> None:  # noqa: D401
        super().__init__(message)
        self.context = context or {}


class ValidationError(PolystabError, ValueError):
    """Input validation failed."""


class DomainError(ValidationError):
    """Radius, dimension or curvature outside the admissible domain."""


class RadicandMismatchError(PolystabError):
    """Two quadratic-extension scalars with different radicands were combined."""


class ZeroDivisorError(PolystabError, ZeroDivisionError):
    """Exact division by a scalar whose value is zero."""


class RootBoundError(PolystabError):
    """Positivity tail bound requested for a polynomial without a positive rational leading coefficient."""


class InconsistentSamplesError(PolystabError):
    """Interpolation samples are not reproduced by the interpolant."""


class UnrepresentableTermError(PolystabError):
    """A quadratic-form term has no evaluation rule in the eigenfunction algebra."""


class IrrationalFormError(PolystabError):
    """A quadratic form kept a nonzero sqrt(t) part."""


class OffSmallSphereError(DomainError):
    """A small-sphere-only formula was called away from t = 3, K = 1."""


class NoProperRadiusError(PolystabError):
    """The 4-tension coefficient has no positive root in t."""


class OracleError(PolystabError):
    """Discrete input violates the oracle's preconditions."""
