"""
Exact radii: positive rationals or +inf.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering

from src.core.errors import DomainValidationError


@total_ordering
class Radius:
    """A positive exact rational radius, or infinity. Immutable and hashable."""

    __slots__ = ("_value",)

    def __init__(self, value: Fraction | None) -> None:
        # None encodes +inf
        if value is not None and value <= 0:
            raise DomainValidationError(f"radius must be positive, got {value}")
        self._value = value

    @classmethod
    def of(cls, value: Radius | Fraction | int | str | float) -> Radius:
        """Build from a rational, an integer, a fraction/decimal string or 'inf'."""
        if isinstance(value, Radius):
            return value
        if isinstance(value, str) and value.strip().lower() in ("inf", "+inf", "∞"):
            return cls.infinity()
        if isinstance(value, float):
            if math.isinf(value) and value > 0:
                return cls.infinity()
            raise DomainValidationError("radii are exact; pass a Fraction or a string instead of a float")
        try:
            fraction = Fraction(value)
        except (ValueError, ZeroDivisionError) as e:
            raise DomainValidationError(f"invalid radius literal {value!r}") from e
        return cls(fraction)

    @classmethod
    def infinity(cls) -> Radius:
        return cls(None)

    @property
    def infinite(self) -> bool:
        return self._value is None

    @property
    def value(self) -> Fraction:
        if self._value is None:
            raise DomainValidationError("infinite radius has no rational value")
        return self._value

    def scale(self, factor: Fraction | int) -> Radius:
        factor = Fraction(factor)
        if factor <= 0:
            raise DomainValidationError("scaling factor must be positive")
        return self if self._value is None else Radius(self._value * factor)

    def log(self) -> float:
        """Natural logarithm as a float; only evaluated for geometry."""
        return math.inf if self._value is None else math.log(self._value)

    def to_float(self) -> float:
        return math.inf if self._value is None else float(self._value)

    def __setattr__(self, name: str, value: object) -> None:
        if hasattr(self, "_value"):
            raise AttributeError("Radius is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Radius):
            return NotImplemented
        return self._value == other._value

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Radius):
            return NotImplemented
        if self._value is None:
            return False
        return other._value is None or self._value < other._value

    def __hash__(self) -> int:
        return hash(("Radius", self._value))

    def __repr__(self) -> str:
        return f"Radius({self})"

    def __str__(self) -> str:
        if self._value is None:
            return "inf"
        if self._value.denominator == 1:
            return str(self._value.numerator)
        return f"{self._value.numerator}/{self._value.denominator}"
