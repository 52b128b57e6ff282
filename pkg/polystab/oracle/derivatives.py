"""θ-derivatives of periodic samples on a uniform grid of [0, 2π)."""

from __future__ import annotations

import numpy as np

from ..core.enums import DerivativeScheme
from ..core.errors import ValidationError


def spectral_derivative(values: np.ndarray, order: int = 1, *, filter_rtol: float = 1e-13) -> np.ndarray:
    """Fourier derivative along axis 0.

    Coefficients below ``filter_rtol`` times the largest one are dropped first,
    and the Nyquist mode is zeroed for odd orders.
    """

    n = values.shape[0]
    coeffs = np.fft.fft(values, axis=0)
    if filter_rtol > 0:
        floor = filter_rtol * np.max(np.abs(coeffs))
        coeffs = np.where(np.abs(coeffs) < floor, 0.0, coeffs)
    k = np.fft.fftfreq(n, d=1.0 / n)
    if order % 2 == 1 and n % 2 == 0:
        k[n // 2] = 0.0
    factor = (1j * k) ** order
    shape = (n,) + (1,) * (values.ndim - 1)
    return np.real(np.fft.ifft(coeffs * factor.reshape(shape), axis=0))


def fd4_derivative(values: np.ndarray, order: int = 1) -> np.ndarray:
    """Periodic fourth-order central differences along axis 0."""

    n = values.shape[0]
    h = 2.0 * np.pi / n
    out = values
    while order > 0:
        if order >= 2:
            out = (
                -np.roll(out, -2, axis=0)
                + 16.0 * np.roll(out, -1, axis=0)
                - 30.0 * out
                + 16.0 * np.roll(out, 1, axis=0)
                - np.roll(out, 2, axis=0)
            ) / (12.0 * h * h)
            order -= 2
        else:
            out = (
                -np.roll(out, -2, axis=0)
                + 8.0 * np.roll(out, -1, axis=0)
                - 8.0 * np.roll(out, 1, axis=0)
                + np.roll(out, 2, axis=0)
            ) / (12.0 * h)
            order -= 1
    return out


def derivative(
    values: np.ndarray,
    order: int = 1,
    scheme: DerivativeScheme = DerivativeScheme.SPECTRAL,
    *,
    filter_rtol: float = 1e-13,
) -> np.ndarray:
    if order < 0:
        raise ValidationError("Derivative order must be non-negative", context={"order": order})
    if order == 0:
        return values
    scheme = DerivativeScheme(scheme)
    if scheme == DerivativeScheme.SPECTRAL:
        return spectral_derivative(values, order, filter_rtol=filter_rtol)
    return fd4_derivative(values, order)


def geodesic_fd(samples: dict[int, np.ndarray], step: float) -> tuple[np.ndarray, np.ndarray]:
    """First and second derivatives at s = 0 from samples at s = k·step, k = -2..2."""

    fm2, fm1, f0, fp1, fp2 = (samples[k] for k in (-2, -1, 0, 1, 2))
    first = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * step)
    second = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * step * step)
    return first, second
