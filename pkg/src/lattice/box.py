"""
Extended integers and axis-aligned integer boxes.

An extended integer is a Python ``int`` or one of the two float infinities;
ordinary comparison is then total (``-inf < k < inf``). Boxes are closed in
every coordinate: ``[lo, hi]`` contains ``k`` iff ``lo <= k <= hi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from src.core.errors import DimensionMismatchError

ExtInt = int | float

NEG_INF: float = -math.inf
POS_INF: float = math.inf

Interval = tuple[ExtInt, ExtInt]


def check_ext_int(value: ExtInt) -> ExtInt:
    """Return value if it is an integer or an infinity, raise ValueError otherwise."""
    if isinstance(value, bool):
        raise ValueError("booleans are not extended integers")
    if isinstance(value, int):
        return value
    if isinstance(value, float) and math.isinf(value):
        return value
    if isinstance(value, float) and value.is_integer():
        return int(value)
    raise ValueError(f"not an extended integer: {value!r}")


def format_ext_int(value: ExtInt) -> str:
    """Serialize with the '-inf' / 'inf' sentinels used in reports."""
    if value == NEG_INF:
        return "-inf"
    if value == POS_INF:
        return "inf"
    return str(int(value))


def parse_ext_int(text: str | int) -> ExtInt:
    """Inverse of format_ext_int."""
    if isinstance(text, int):
        return text
    if text == "-inf":
        return NEG_INF
    if text in ("inf", "+inf"):
        return POS_INF
    return int(text)


def _interval_order_key(value: ExtInt) -> tuple[int, int]:
    # total order usable inside tuples: (-inf) < integers < (+inf)
    if value == NEG_INF:
        return (0, 0)
    if value == POS_INF:
        return (2, 0)
    return (1, int(value))


@dataclass(frozen=True, slots=True)
class LatticeBox:
    """
    Product of closed extended-integer intervals.

    Plain frozen dataclass rather than a pydantic model: boxes are created in
    large numbers by the sweep and the window oracles.
    """

    lo: tuple[ExtInt, ...]
    hi: tuple[ExtInt, ...]

    def __post_init__(self) -> None:
        if len(self.lo) != len(self.hi):
            raise DimensionMismatchError(len(self.lo), len(self.hi), "box bounds")
        if not self.lo:
            raise ValueError("boxes must have dimension at least 1")
        for lo, hi in zip(self.lo, self.hi, strict=True):
            check_ext_int(lo)
            check_ext_int(hi)
            if lo == POS_INF or hi == NEG_INF:
                raise ValueError(f"invalid interval [{lo}, {hi}]")
            if lo > hi:
                raise ValueError(f"empty interval [{lo}, {hi}]")

    @classmethod
    def from_intervals(cls, intervals: list[Interval] | tuple[Interval, ...]) -> LatticeBox:
        return cls(tuple(i[0] for i in intervals), tuple(i[1] for i in intervals))

    @property
    def dimension(self) -> int:
        return len(self.lo)

    @property
    def intervals(self) -> tuple[Interval, ...]:
        return tuple(zip(self.lo, self.hi, strict=True))

    def contains_point(self, point: tuple[int, ...]) -> bool:
        if len(point) != self.dimension:
            raise DimensionMismatchError(self.dimension, len(point), "point membership")
        return all(lo <= x <= hi for lo, x, hi in zip(self.lo, point, self.hi, strict=True))

    def contains_box(self, other: LatticeBox) -> bool:
        return all(
            a_lo <= b_lo and b_hi <= a_hi
            for a_lo, a_hi, b_lo, b_hi in zip(self.lo, self.hi, other.lo, other.hi, strict=True)
        )

    def intersection(self, other: LatticeBox) -> LatticeBox | None:
        """Box intersection, None when empty."""
        if other.dimension != self.dimension:
            raise DimensionMismatchError(self.dimension, other.dimension, "box intersection")
        lo = tuple(max(a, b) for a, b in zip(self.lo, other.lo, strict=True))
        hi = tuple(min(a, b) for a, b in zip(self.hi, other.hi, strict=True))
        if any(low > high for low, high in zip(lo, hi, strict=True)):
            return None
        return LatticeBox(lo, hi)

    def subtract(self, other: LatticeBox) -> list[LatticeBox]:
        """
        Pairwise disjoint boxes covering self minus other.

        Slab splitting: along each axis peel off the parts of the remainder
        below and above ``other``, then shrink the remainder to the overlap.
        """
        if self.intersection(other) is None:
            return [self]

        pieces: list[LatticeBox] = []
        lo = list(self.lo)
        hi = list(self.hi)
        for axis in range(self.dimension):
            # strict comparisons: [a, b-1] is nonempty iff a < b, also at -inf
            if lo[axis] < other.lo[axis]:
                below_hi = list(hi)
                below_hi[axis] = other.lo[axis] - 1
                pieces.append(LatticeBox(tuple(lo), tuple(below_hi)))
                lo[axis] = other.lo[axis]
            if other.hi[axis] < hi[axis]:
                above_lo = list(lo)
                above_lo[axis] = other.hi[axis] + 1
                pieces.append(LatticeBox(tuple(above_lo), tuple(hi)))
                hi[axis] = other.hi[axis]
        return pieces

    def product(self, other: LatticeBox) -> LatticeBox:
        return LatticeBox(self.lo + other.lo, self.hi + other.hi)

    def transpose(self, permutation: tuple[int, ...]) -> LatticeBox:
        """Coordinate i of the result is coordinate permutation[i] of self."""
        return LatticeBox(
            tuple(self.lo[j] for j in permutation),
            tuple(self.hi[j] for j in permutation),
        )

    def clip(self, window: int) -> LatticeBox | None:
        """Intersection with the cube [-window, window]^n."""
        cube = LatticeBox((-window,) * self.dimension, (window,) * self.dimension)
        return self.intersection(cube)

    def is_bounded(self) -> bool:
        return all(not math.isinf(v) for v in self.lo + self.hi)

    def order_key(self) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
        """Lexicographic key on (lo, hi) with -inf < integers < +inf."""
        return (
            tuple(_interval_order_key(v) for v in self.lo),
            tuple(_interval_order_key(v) for v in self.hi),
        )

    def __str__(self) -> str:
        return "×".join(f"[{format_ext_int(lo)},{format_ext_int(hi)}]" for lo, hi in self.intervals)
