"""
Elementary Reinhardt domains: discs, annuli, their products and Hartogs figures.

All domains are open; boundary circles are excluded. Radii are exact so that
classifications that branch on equal radii never suffer floating error.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.errors import DimensionMismatchError, DomainValidationError, NotAContainmentError
from src.domains.radius import Radius
from src.lattice import NEG_INF, POS_INF, ExtInt

RadiusInput = Radius | Fraction | int | str


class Disc(BaseModel):
    """The disc |z| < outer (outer may be infinite: the plane)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["disc"] = "disc"
    outer: Radius

    @property
    def inner(self) -> None:
        return None

    def contains_zero(self) -> bool:
        return True

    def spectrum_interval(self) -> tuple[ExtInt, ExtInt]:
        return (0, POS_INF)

    def scale(self, factor: Fraction | int) -> Disc:
        return Disc(outer=self.outer.scale(factor))

    def dsl(self) -> str:
        return f"disc({self.outer})"

    def __str__(self) -> str:
        if self.outer.infinite:
            return "ℂ"
        if self.outer == Radius.of(1):
            return "Δ"
        return f"Δ_{{{self.outer}}}"


class Annulus(BaseModel):
    """The annulus inner < |z| < outer with 0 < inner < outer <= inf."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["annulus"] = "annulus"
    inner: Radius
    outer: Radius

    @model_validator(mode="after")
    def _check_radii(self) -> Annulus:
        if not self.inner < self.outer:
            raise DomainValidationError(f"annulus requires inner < outer, got ({self.inner}, {self.outer})")
        return self

    def contains_zero(self) -> bool:
        return False

    def spectrum_interval(self) -> tuple[ExtInt, ExtInt]:
        return (NEG_INF, POS_INF)

    def scale(self, factor: Fraction | int) -> Annulus:
        return Annulus(inner=self.inner.scale(factor), outer=self.outer.scale(factor))

    def dsl(self) -> str:
        return f"annulus({self.inner},{self.outer})"

    def __str__(self) -> str:
        return f"A({self.inner},{self.outer})"


Factor1D = Disc | Annulus


def disc(outer: RadiusInput) -> Disc:
    return Disc(outer=Radius.of(outer))


def annulus(inner: RadiusInput, outer: RadiusInput) -> Annulus:
    return Annulus(inner=Radius.of(inner), outer=Radius.of(outer))


def factor_contains(inner: Factor1D, outer: Factor1D) -> bool:
    """Containment of open one-dimensional factors."""
    if isinstance(outer, Disc):
        return inner.outer <= outer.outer
    if isinstance(inner, Disc):
        # 0 lies in every disc and in no annulus
        return False
    return outer.inner <= inner.inner and inner.outer <= outer.outer


class ReinhardtBoxDomain(BaseModel):
    """Product of one-dimensional discs and annuli."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    factors: tuple[Factor1D, ...] = Field(min_length=1)

    @classmethod
    def of(cls, *factors: Factor1D) -> ReinhardtBoxDomain:
        return cls(factors=tuple(factors))

    @property
    def dimension(self) -> int:
        return len(self.factors)

    def product(self, other: ReinhardtBoxDomain) -> ReinhardtBoxDomain:
        return ReinhardtBoxDomain(factors=self.factors + other.factors)

    def transpose(self, permutation: tuple[int, ...]) -> ReinhardtBoxDomain:
        if sorted(permutation) != list(range(self.dimension)):
            raise ValueError(f"{permutation} is not a permutation of {self.dimension} coordinates")
        return ReinhardtBoxDomain(factors=tuple(self.factors[j] for j in permutation))

    def scale(self, factor: Fraction | int) -> ReinhardtBoxDomain:
        return ReinhardtBoxDomain(factors=tuple(f.scale(factor) for f in self.factors))

    def dsl(self) -> str:
        return " x ".join(f.dsl() for f in self.factors)

    def __str__(self) -> str:
        return "×".join(str(f) for f in self.factors)


def check_same_dimension(a: ReinhardtBoxDomain, b: ReinhardtBoxDomain, context: str) -> None:
    if a.dimension != b.dimension:
        raise DimensionMismatchError(a.dimension, b.dimension, context)


class HartogsFigure(BaseModel):
    """
    The generalized Hartogs figure (X x Y0) ∪ (X0 x Y).

    Both (X0, X) and (Y0, Y) must be proper containments.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    X: ReinhardtBoxDomain
    X0: ReinhardtBoxDomain
    Y: ReinhardtBoxDomain
    Y0: ReinhardtBoxDomain

    @model_validator(mode="after")
    def _check_pairs(self) -> HartogsFigure:
        for name, inner, outer in (("X0 ⊂ X", self.X0, self.X), ("Y0 ⊂ Y", self.Y0, self.Y)):
            check_same_dimension(inner, outer, name)
            if not all(factor_contains(a, b) for a, b in zip(inner.factors, outer.factors, strict=True)):
                raise NotAContainmentError(f"{name} violated: {inner} is not contained in {outer}")
            if inner == outer:
                raise NotAContainmentError(f"{name} must be a proper containment, both are {inner}")
        return self

    @property
    def dimension(self) -> int:
        return self.X.dimension + self.Y.dimension

    def swapped(self) -> HartogsFigure:
        """The same figure with the roles of the two factors exchanged."""
        return HartogsFigure(X=self.Y, X0=self.Y0, Y=self.X, Y0=self.X0)

    def swap_permutation(self) -> tuple[int, ...]:
        """Coordinate permutation taking swapped-figure coordinates back to ours."""
        m, n = self.X.dimension, self.Y.dimension
        return tuple(range(n, n + m)) + tuple(range(n))

    def dsl(self) -> str:
        return f"hartogs(X={self.X.dsl()}, X0={self.X0.dsl()}, Y={self.Y.dsl()}, Y0={self.Y0.dsl()})"

    def __str__(self) -> str:
        return f"({self.X}×{self.Y0}) ∪ ({self.X0}×{self.Y})"
