"""
Core error classes for the Hartogs cohomology engine.
"""

from typing import Any


class HartogsError(Exception):
    """Base class for every error raised by the engine."""

    pass


class DimensionMismatchError(HartogsError, ValueError):
    """Raised when lattice boxes, spectra or domains of different dimensions are combined."""

    def __init__(self, expected: int, actual: int, context: str = "") -> None:
        self.expected = expected
        self.actual = actual
        suffix = f" ({context})" if context else ""
        super().__init__(f"Dimension mismatch: expected {expected}, got {actual}{suffix}")


class DomainValidationError(HartogsError, ValueError):
    """Raised when a radius, factor or figure violates its invariants."""

    pass


class NotAContainmentError(DomainValidationError):
    """Raised when a Stein pair or a Hartogs figure is not a proper containment."""

    pass


class UnsupportedShapeError(HartogsError):
    """Raised when an input lies outside the shapes the geometry code handles."""

    pass


class UnsupportedClassificationError(HartogsError):
    """Raised when a pair (or a combination of pairs) has no rule in the decision table."""

    def __init__(self, message: str, classifications: list[Any] | None = None) -> None:
        self.classifications = classifications or []
        super().__init__(message)


class DslSyntaxError(HartogsError):
    """Raised when DSL text does not match the grammar."""

    def __init__(self, message: str, line: int, column: int) -> None:
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class DslSemanticError(HartogsError):
    """Raised when a parsed DSL expression describes an invalid domain or figure."""

    pass


class CrossCheckError(HartogsError):
    """Raised when an internal cross-check (oracle or numeric) disagrees with the engine."""

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        self.details = details or {}
        super().__init__(message)


class QuadratureDomainError(HartogsError, ValueError):
    """Raised when a torus or circle radius is outside the admissible region."""

    pass
