"""
Data types for Stein pair classification.
"""

from __future__ import annotations

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field

from src.domains import LaurentModel, ReinhardtBoxDomain


class PairTag(StrEnum):
    """How O(Z) restricts into O(Z0)."""

    RUNGE = "runge"
    SPLIT = "split"
    QUASI_SPLIT = "quasi_split"
    UNSUPPORTED = "unsupported"
    # factor pairs with Z0 == Z inside a product
    EQUAL = "equal"


class PairRule(StrEnum):
    """Row of the classification table that produced a result."""

    DISC_IN_DISC = "disc in disc: polynomials dense in both, Runge"
    ANNULUS_IN_DISC_SAME_OUTER = "annulus in disc with equal outer radius: restriction closed and complemented, split"
    ANNULUS_IN_DISC_SMALLER_OUTER = (
        "annulus in disc with smaller outer radius: split into the disc of the annulus' outer radius, then Runge, "
        "quasi-split"
    )
    NESTED_ANNULI = "nested annuli: Laurent polynomials dense in both, Runge (extension of the disc case)"
    IDENTICAL_FACTOR = "identical factor"
    PRODUCT_RUNGE = "product: every proper factor pair Runge"
    PRODUCT_SPLIT = "product: every proper factor pair split"
    PRODUCT_QUASI_SPLIT = "product: proper factor pairs split or quasi-split, at least one quasi-split"
    PRODUCT_MIXED = "product: Runge factors mixed with split or quasi-split factors"


class PairClass(BaseModel):
    """
    Classification of a Stein pair (Z0, Z).

    complement is Q(Z0, Z) for split pairs and Q_r(Z0, Z) = Q(Z0, X1) for
    quasi-split pairs; closure_of_restriction models the closure of O(Z)|Z0
    inside O(Z0).
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    tag: PairTag
    inner: ReinhardtBoxDomain
    outer: ReinhardtBoxDomain
    witness_rule: PairRule
    complement: LaurentModel | None = None
    closure_of_restriction: LaurentModel | None = None
    intermediate: ReinhardtBoxDomain | None = None
    factors: tuple[PairClass, ...] = Field(default_factory=tuple)
    reason: str | None = None

    @property
    def is_supported(self) -> bool:
        return self.tag is not PairTag.UNSUPPORTED

    def __str__(self) -> str:
        return f"({self.inner}, {self.outer}): {self.tag.value}"
