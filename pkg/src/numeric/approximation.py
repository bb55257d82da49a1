"""
Approximation experiments on circles: Runge density decay, residue
obstructions to density, and least-squares polynomial candidates.
"""

from __future__ import annotations

from collections.abc import Callable

import numpy as np
from numpy.polynomial import Polynomial

from src.core.config import config
from src.core.errors import QuadratureDomainError
from src.numeric.models import DensityResult, ObstructionResult

ComplexFunction = Callable[[np.ndarray], np.ndarray]

# errors below this are roundoff and carry no rate information
_ERROR_FLOOR = 1e-13


def _circle(radius: float, samples: int) -> np.ndarray:
    return radius * np.exp(2j * np.pi * np.arange(samples) / samples)


def _next_power_of_two(value: int) -> int:
    return 1 << max(2, int(value - 1).bit_length())


def taylor_coefficients(target: ComplexFunction, radius: float, count: int) -> np.ndarray:
    """First count Taylor coefficients from an FFT on the circle |z| = radius."""
    nodes = _next_power_of_two(max(1024, 4 * count))
    values = np.asarray(target(_circle(radius, nodes)), dtype=complex)
    coefficients = np.fft.fft(values)[:count] / nodes
    return coefficients / radius ** np.arange(count)


def density_decay(
    target: ComplexFunction,
    approx_radius: float,
    singularity_radius: float,
    degrees: list[int],
    samples: int | None = None,
) -> DensityResult:
    """
    Sup errors of Taylor truncations of target on |z| = approx_radius.

    target must be holomorphic on the disc of radius singularity_radius. The
    errors decay like (approx_radius / singularity_radius)^N; the fitted
    ratio is exp of the slope of log error against degree.
    """
    if not 0 < approx_radius < singularity_radius:
        raise QuadratureDomainError(
            f"approximation radius {approx_radius} must lie in (0, {singularity_radius})"
        )
    if not degrees or min(degrees) < 0:
        raise ValueError("degrees must be a nonempty list of non-negative integers")
    samples = samples or config.numeric.sup_samples

    coefficients = taylor_coefficients(target, (approx_radius + singularity_radius) / 2, max(degrees) + 1)
    z = _circle(approx_radius, samples)
    exact = np.asarray(target(z), dtype=complex)

    errors = []
    for degree in degrees:
        partial = Polynomial(coefficients[: degree + 1])(z)
        errors.append(float(np.max(np.abs(exact - partial))))

    usable = [(d, e) for d, e in zip(degrees, errors, strict=True) if e > _ERROR_FLOOR]
    if len(usable) < 2:
        fitted = 0.0
    else:
        xs, ys = zip(*usable, strict=True)
        slope = Polynomial.fit(np.array(xs, dtype=float), np.log(ys), 1).convert().coef[-1]
        fitted = float(np.exp(slope))

    return DensityResult(
        approx_radius=approx_radius,
        singularity_radius=singularity_radius,
        degrees=list(degrees),
        errors=errors,
        fitted_ratio=fitted,
    )


def density_table(result: DensityResult) -> str:
    """Two-column gnuplot table: degree and sup error."""
    lines = [
        f"# approx_radius={result.approx_radius:.12g} singularity_radius={result.singularity_radius:.12g}",
        f"# fitted_ratio={result.fitted_ratio:.12g} expected_ratio={result.expected_ratio:.12g}",
        "# degree sup_error",
    ]
    lines += [f"{d} {e:.12e}" for d, e in zip(result.degrees, result.errors, strict=True)]
    return "\n".join(lines) + "\n"


def obstruction_bound(
    k: int,
    radius: float,
    candidate: ComplexFunction,
    domain_radius: float = float("inf"),
    samples: int | None = None,
) -> ObstructionResult:
    """
    Lower bound on sup_{|z|=radius} |z^-k - candidate(z)|.

    For candidate holomorphic on a disc containing the circle, the residue
    functional c_{-k} vanishes on it and equals 1 on z^-k, while
    |c_{-k}(h)| <= radius^k sup |h|. The functional is evaluated on the same
    samples used for the sampled sup, so bound <= sampled_sup holds exactly.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if not 0 < radius < domain_radius:
        raise QuadratureDomainError(f"circle radius {radius} must lie in (0, {domain_radius})")
    samples = samples or config.numeric.sup_samples

    z = _circle(radius, samples)
    h = z ** (-k) - np.asarray(candidate(z), dtype=complex)
    residue = np.mean(h * z**k)
    return ObstructionResult(
        k=k,
        radius=radius,
        bound=float(abs(residue) / radius**k),
        sampled_sup=float(np.max(np.abs(h))),
    )


def least_squares_polynomial(
    target: ComplexFunction,
    radius: float,
    degree: int,
    samples: int | None = None,
) -> Polynomial:
    """Best polynomial of the given degree for target on |z| = radius, in the least-squares sense."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    samples = samples or config.numeric.sup_samples
    z = _circle(radius, samples)
    basis = np.vander(z / radius, degree + 1, increasing=True)
    solution, *_ = np.linalg.lstsq(basis, np.asarray(target(z), dtype=complex), rcond=None)
    return Polynomial(solution / radius ** np.arange(degree + 1))
