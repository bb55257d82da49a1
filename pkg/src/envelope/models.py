"""
Log-space geometry types.

Coordinates are floats; -inf marks an unbounded direction (a disc factor
reaches |z| = 0). Upper ends are always finite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from pydantic import BaseModel, ConfigDict

from src.core.errors import DimensionMismatchError, UnsupportedShapeError
from src.domains import Disc, Radius, ReinhardtBoxDomain

Point = tuple[float, ...]


@dataclass(frozen=True, slots=True)
class LogBox:
    """Open box prod (lo_i, hi_i) in log-modulus coordinates."""

    lo: tuple[float, ...]
    hi: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.lo) != len(self.hi):
            raise DimensionMismatchError(len(self.lo), len(self.hi), "LogBox bounds")
        for lo, hi in zip(self.lo, self.hi, strict=True):
            if not math.isfinite(hi):
                raise UnsupportedShapeError("log boxes need finite upper bounds (bounded domains only)")
            if not lo < hi:
                raise UnsupportedShapeError(f"empty log interval ({lo}, {hi})")

    @classmethod
    def from_domain(cls, domain: ReinhardtBoxDomain) -> LogBox:
        lo, hi = [], []
        for factor in domain.factors:
            if factor.outer.infinite:
                raise UnsupportedShapeError(f"{domain} is unbounded; its log image has no finite upper bound")
            hi.append(factor.outer.log())
            lo.append(-math.inf if isinstance(factor, Disc) else factor.inner.log())
        return cls(tuple(lo), tuple(hi))

    @property
    def dimension(self) -> int:
        return len(self.lo)

    def contains(self, point: Point) -> bool:
        return all(lo < x < hi for lo, x, hi in zip(self.lo, point, self.hi, strict=True))

    def vertices(self) -> list[Point]:
        """Finite corners of the closure; -inf ends contribute no corner."""
        corners: list[Point] = [()]
        for lo, hi in zip(self.lo, self.hi, strict=True):
            ends = [hi] if lo == -math.inf else [lo, hi]
            corners = [corner + (end,) for corner in corners for end in ends]
        return corners

    def directions(self) -> list[Point]:
        """Recession directions -e_i along unbounded axes."""
        n = self.dimension
        return [tuple(-1.0 if j == i else 0.0 for j in range(n)) for i in range(n) if self.lo[i] == -math.inf]


@dataclass(frozen=True, slots=True)
class LogRegion:
    """Finite union of log boxes."""

    boxes: tuple[LogBox, ...]

    def __post_init__(self) -> None:
        if not self.boxes:
            raise UnsupportedShapeError("log regions are nonempty")
        n = self.boxes[0].dimension
        for box in self.boxes:
            if box.dimension != n:
                raise DimensionMismatchError(n, box.dimension, "LogRegion")

    @property
    def dimension(self) -> int:
        return self.boxes[0].dimension

    def contains(self, point: Point) -> bool:
        return any(box.contains(point) for box in self.boxes)


@dataclass(frozen=True, slots=True)
class HalfPlane:
    """Constraint normal . x <= offset."""

    normal: Point
    offset: float

    def slack(self, point: Point) -> float:
        """offset - normal . point; positive strictly inside."""
        return self.offset - sum(a * x for a, x in zip(self.normal, point, strict=True))

    def is_axis_aligned(self, tolerance: float) -> bool:
        return sum(1 for a in self.normal if abs(a) > tolerance) == 1


@dataclass(frozen=True, slots=True)
class LogHull:
    """
    Closed convex hull conv(points) + cone(directions) and its facet presentation.

    The generators are kept so that taking the hull again reproduces the same
    presentation.
    """

    points: tuple[Point, ...]
    directions: tuple[Point, ...]
    halfplanes: tuple[HalfPlane, ...]
    tolerance: float

    @property
    def dimension(self) -> int:
        return len(self.points[0])

    def contains(self, point: Point, strict: bool = False) -> bool:
        """Membership in the closed hull, or in its interior by at least the tolerance when strict."""
        if strict:
            return all(h.slack(point) > self.tolerance for h in self.halfplanes)
        return all(h.slack(point) >= -self.tolerance for h in self.halfplanes)

    def is_box(self) -> bool:
        return all(h.is_axis_aligned(self.tolerance) for h in self.halfplanes)

    def bounds(self) -> tuple[tuple[float, float], ...]:
        """Per-axis (lo, hi) read from the axis-aligned constraints."""
        result = []
        for axis in range(self.dimension):
            lo, hi = -math.inf, math.inf
            for h in self.halfplanes:
                if not h.is_axis_aligned(self.tolerance):
                    continue
                if h.normal[axis] > self.tolerance:
                    hi = min(hi, h.offset / h.normal[axis])
                elif h.normal[axis] < -self.tolerance:
                    lo = max(lo, h.offset / h.normal[axis])
            result.append((lo, hi))
        return tuple(result)


class SteinCertificate(BaseModel):
    """
    Witness that a Hartogs figure is not Stein.

    extension_point gives the moduli (|z1|, |z2|) of a point outside the figure
    to which every holomorphic function extends; log_point is its image in log
    coordinates, outside the log image and strictly inside the hull.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    is_stein: bool
    extension_point: tuple[Radius, ...]
    log_point: tuple[float, ...]
    envelope: ReinhardtBoxDomain | None
    bounding_box: ReinhardtBoxDomain
    hull: LogHull
