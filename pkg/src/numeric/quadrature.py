"""
Trapezoidal torus quadrature for Laurent coefficients.

With N equispaced angles per axis the rule is exact for every Laurent
polynomial whose exponents satisfy |α_i| < N/2.
"""

from __future__ import annotations

from collections.abc import Callable

import numpy as np

from src.core.errors import DimensionMismatchError
from src.numeric.models import Exponent, TorusSpec

SampledFunction = Callable[..., np.ndarray]


def _samples(f: SampledFunction, torus: TorusSpec) -> tuple[list[np.ndarray], np.ndarray]:
    grid = torus.grid()
    values = np.asarray(f(*grid), dtype=complex)
    if values.shape != grid[0].shape:
        values = np.broadcast_to(values, grid[0].shape)
    return grid, values


def torus_coefficient(f: SampledFunction, alpha: Exponent, torus: TorusSpec) -> complex:
    """c_α(f) as the torus mean of f · z^-α."""
    if len(alpha) != torus.dimension:
        raise DimensionMismatchError(torus.dimension, len(alpha), "torus_coefficient")
    grid, values = _samples(f, torus)
    weight = np.ones_like(values)
    for z, a in zip(grid, alpha, strict=True):
        weight = weight * z ** (-a)
    return complex(np.mean(values * weight))


def torus_coefficients(f: SampledFunction, torus: TorusSpec) -> dict[Exponent, complex]:
    """All coefficients with |α_i| < N/2 from a single FFT."""
    _, values = _samples(f, torus)
    n, half = torus.nodes, torus.nodes // 2
    spectrum = np.fft.fftn(values) / values.size
    result: dict[Exponent, complex] = {}
    for index in np.ndindex(*spectrum.shape):
        alpha = tuple(k if k < half else k - n for k in index)
        if any(abs(a) >= half for a in alpha):
            continue
        scale = np.prod([r ** float(a) for r, a in zip(torus.radii, alpha, strict=True)])
        result[alpha] = complex(spectrum[index] / scale)
    return dict(sorted(result.items()))


def coefficient_consistency(f: SampledFunction, alpha: Exponent, first: TorusSpec, second: TorusSpec) -> float:
    """|c_α on first - c_α on second| / (1 + |c_α on first|)."""
    a = torus_coefficient(f, alpha, first)
    b = torus_coefficient(f, alpha, second)
    return abs(a - b) / (1.0 + abs(a))
