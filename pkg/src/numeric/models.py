"""
Numeric harness data types.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.core.errors import DimensionMismatchError, QuadratureDomainError
from src.domains import Disc, ReinhardtBoxDomain

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class LaurentPolynomial:
    """Finite Laurent sum of c_α z^α, terms kept in sorted exponent order."""

    dimension: int
    terms: tuple[tuple[Exponent, complex], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        for alpha, _ in self.terms:
            if len(alpha) != self.dimension:
                raise DimensionMismatchError(self.dimension, len(alpha), "LaurentPolynomial exponent")

    @classmethod
    def from_dict(cls, dimension: int, coefficients: Mapping[Exponent, complex]) -> LaurentPolynomial:
        terms = tuple(sorted((tuple(alpha), complex(c)) for alpha, c in coefficients.items() if c != 0))
        return cls(dimension, terms)

    @classmethod
    def monomial(cls, alpha: Exponent, coefficient: complex = 1.0) -> LaurentPolynomial:
        return cls.from_dict(len(alpha), {alpha: coefficient})

    @classmethod
    def random(
        cls,
        rng: np.random.Generator,
        exponents: list[Exponent],
        count: int,
    ) -> LaurentPolynomial:
        """count distinct exponents drawn from exponents, complex normal coefficients."""
        if not exponents:
            raise ValueError("no exponents to draw from")
        chosen = rng.choice(len(exponents), size=min(count, len(exponents)), replace=False)
        coefficients = rng.standard_normal(len(chosen)) + 1j * rng.standard_normal(len(chosen))
        return cls.from_dict(
            len(exponents[0]),
            {exponents[int(i)]: complex(c) for i, c in zip(chosen, coefficients, strict=True)},
        )

    @property
    def coefficients(self) -> dict[Exponent, complex]:
        return dict(self.terms)

    def coefficient(self, alpha: Exponent) -> complex:
        return self.coefficients.get(tuple(alpha), 0j)

    def max_abs_exponent(self) -> int:
        return max((abs(a) for alpha, _ in self.terms for a in alpha), default=0)

    def eval(self, z: tuple[complex, ...] | list[complex]) -> complex:
        """
        Value at a single point, summed in sorted exponent order.

        Raises:
            QuadratureDomainError: a coordinate is 0 where some exponent is negative.
        """
        if len(z) != self.dimension:
            raise DimensionMismatchError(self.dimension, len(z), "LaurentPolynomial.eval")
        total = 0j
        for alpha, c in self.terms:
            value = c
            for zi, ai in zip(z, alpha, strict=True):
                if zi == 0 and ai < 0:
                    raise QuadratureDomainError(f"z^{alpha} is not defined where a coordinate is 0")
                value *= complex(zi) ** ai
            total += value
        return total

    def __call__(self, *z: np.ndarray) -> np.ndarray:
        """Vectorized evaluation on broadcastable coordinate arrays."""
        if len(z) != self.dimension:
            raise DimensionMismatchError(self.dimension, len(z), "LaurentPolynomial.__call__")
        arrays = [np.asarray(zi, dtype=complex) for zi in z]
        total = np.zeros(np.broadcast_shapes(*(a.shape for a in arrays)), dtype=complex)
        for alpha, c in self.terms:
            term = np.full(total.shape, c, dtype=complex)
            for zi, ai in zip(arrays, alpha, strict=True):
                term = term * zi**ai
            total += term
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c:.6g})·z^{alpha}" for alpha, c in self.terms)


@dataclass(frozen=True)
class TorusSpec:
    """Torus |z_i| = radii_i sampled at nodes equispaced angles per axis."""

    radii: tuple[float, ...]
    nodes: int = 64

    def __post_init__(self) -> None:
        if not self.radii:
            raise QuadratureDomainError("a torus needs at least one radius")
        if any(not 0 < r < np.inf for r in self.radii):
            raise QuadratureDomainError(f"torus radii must be positive and finite, got {self.radii}")
        if self.nodes < 4 or self.nodes & (self.nodes - 1):
            raise QuadratureDomainError(f"nodes per axis must be a power of two and at least 4, got {self.nodes}")

    @classmethod
    def inside(cls, domain: ReinhardtBoxDomain, nodes: int = 64) -> TorusSpec:
        """A torus in the middle of each factor of the domain."""
        radii = []
        for factor in domain.factors:
            outer = factor.outer.to_float()
            if isinstance(factor, Disc):
                radii.append(outer / 2 if np.isfinite(outer) else 1.0)
            else:
                inner = factor.inner.to_float()
                radii.append((inner + outer) / 2 if np.isfinite(outer) else 2 * inner)
        return cls(tuple(radii), nodes)

    @property
    def dimension(self) -> int:
        return len(self.radii)

    def check_inside(self, domain: ReinhardtBoxDomain) -> None:
        """Raise unless every radius lies strictly inside the matching factor."""
        if domain.dimension != self.dimension:
            raise DimensionMismatchError(domain.dimension, self.dimension, "TorusSpec.check_inside")
        for r, factor in zip(self.radii, domain.factors, strict=True):
            inner = 0.0 if isinstance(factor, Disc) else factor.inner.to_float()
            if not inner < r < factor.outer.to_float():
                raise QuadratureDomainError(f"radius {r} is not strictly inside {factor}")

    def grid(self) -> list[np.ndarray]:
        """Broadcast-ready sample coordinates, one array per axis."""
        angles = np.exp(2j * np.pi * np.arange(self.nodes) / self.nodes)
        axes = [r * angles for r in self.radii]
        return list(np.meshgrid(*axes, indexing="ij"))


class DensityResult(BaseModel):
    """Sup errors of Taylor truncations and their fitted geometric rate."""

    model_config = ConfigDict(frozen=True)

    approx_radius: float
    singularity_radius: float
    degrees: list[int]
    errors: list[float]
    fitted_ratio: float

    @property
    def expected_ratio(self) -> float:
        return self.approx_radius / self.singularity_radius


class ObstructionResult(BaseModel):
    """Residue-functional lower bound on sup |z^-k - candidate| over |z| = radius."""

    model_config = ConfigDict(frozen=True)

    k: int
    radius: float
    bound: float
    sampled_sup: float

    @property
    def consistent(self) -> bool:
        return self.bound <= self.sampled_sup + 1e-9


class NumericCheck(BaseModel):
    """Outcome of one numeric spot check run by the verification harness."""

    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool
    details: dict[str, Any] = Field(default_factory=dict)
