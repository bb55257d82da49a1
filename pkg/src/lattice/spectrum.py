"""
Spectra: regions of Z^n given as finite unions of integer boxes.

Canonical form is the per-axis sweep form. Along the first axis the line is
cut into maximal runs on which the cross-section (itself a canonical
spectrum of one dimension less) does not change; every run with a nonempty
cross-section contributes ``run x box`` for each box of the cross-section.
The form depends only on the point set, so two canonical spectra are equal
as sets iff their box lists are identical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce

import structlog

from src.core.errors import DimensionMismatchError
from src.lattice.box import NEG_INF, POS_INF, ExtInt, Interval, LatticeBox

logger = structlog.get_logger()

_Cells = tuple[tuple[Interval, ...], ...]


@dataclass(frozen=True, slots=True)
class Spectrum:
    """A finite union of lattice boxes of a fixed dimension."""

    dimension: int
    boxes: tuple[LatticeBox, ...] = ()
    canonical: bool = False

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ValueError("spectra must have dimension at least 1")

    # -- constructors -------------------------------------------------------

    @classmethod
    def of(cls, dimension: int, boxes: list[LatticeBox] | tuple[LatticeBox, ...]) -> Spectrum:
        """Canonical spectrum of the union of boxes."""
        return canonicalize(cls(dimension, tuple(boxes)))

    @classmethod
    def from_intervals(cls, *boxes: tuple[Interval, ...]) -> Spectrum:
        """Convenience: ``Spectrum.from_intervals(((0, inf), (NEG_INF, -1)))``."""
        if not boxes:
            raise ValueError("use Spectrum.empty(n) for the empty spectrum")
        built = [LatticeBox.from_intervals(b) for b in boxes]
        return cls.of(built[0].dimension, built)

    @classmethod
    def empty(cls, dimension: int) -> Spectrum:
        return cls(dimension, (), True)

    @classmethod
    def full(cls, dimension: int) -> Spectrum:
        return cls(dimension, (LatticeBox((NEG_INF,) * dimension, (POS_INF,) * dimension),), True)

    # -- predicates ---------------------------------------------------------

    def is_empty(self) -> bool:
        return not self.boxes

    def contains_point(self, point: tuple[int, ...]) -> bool:
        return any(box.contains_point(point) for box in self.boxes)

    def is_subset(self, other: Spectrum) -> bool:
        return difference(self, other).is_empty()

    def is_disjoint(self, other: Spectrum) -> bool:
        return intersect(self, other).is_empty()

    def is_single_box(self) -> bool:
        return len(self.boxes) == 1

    # -- algebra ------------------------------------------------------------

    def __and__(self, other: Spectrum) -> Spectrum:
        return intersect(self, other)

    def __or__(self, other: Spectrum) -> Spectrum:
        return union(self, other)

    def __sub__(self, other: Spectrum) -> Spectrum:
        return difference(self, other)

    def product(self, other: Spectrum) -> Spectrum:
        """Cartesian product; dimensions add."""
        boxes = [a.product(b) for a, b in itertools.product(self.boxes, other.boxes)]
        return Spectrum.of(self.dimension + other.dimension, boxes)

    def transpose(self, permutation: tuple[int, ...]) -> Spectrum:
        if sorted(permutation) != list(range(self.dimension)):
            raise ValueError(f"{permutation} is not a permutation of {self.dimension} coordinates")
        return Spectrum.of(self.dimension, [box.transpose(permutation) for box in self.boxes])

    def restrict_to_window(self, window: int) -> Spectrum:
        """Intersection with the cube [-window, window]^n."""
        clipped = [c for c in (box.clip(window) for box in self.boxes) if c is not None]
        return Spectrum.of(self.dimension, clipped)

    def __str__(self) -> str:
        if not self.boxes:
            return "∅"
        return " ∪ ".join(str(box) for box in self.boxes)


def _check_dimensions(a: Spectrum, b: Spectrum, context: str) -> None:
    if a.dimension != b.dimension:
        raise DimensionMismatchError(a.dimension, b.dimension, context)


def _sweep(cells: _Cells) -> _Cells:
    """Canonical disjoint cover of a union of boxes given as interval tuples."""
    if not cells:
        return ()
    if not cells[0]:
        return ((),)

    starts: set[ExtInt] = {NEG_INF}
    for cell in cells:
        lo, hi = cell[0]
        starts.add(lo)
        if hi != POS_INF:
            starts.add(hi + 1)
    points = sorted(starts)

    runs: list[tuple[Interval, _Cells]] = []
    for index, start in enumerate(points):
        end = points[index + 1] - 1 if index + 1 < len(points) else POS_INF
        active = tuple(cell[1:] for cell in cells if cell[0][0] <= start <= cell[0][1])
        section = _sweep(active)
        if runs and runs[-1][1] == section:
            (run_lo, _), _ = runs[-1]
            runs[-1] = ((run_lo, end), section)
        else:
            runs.append(((start, end), section))

    return tuple((run,) + rest for run, section in runs if section for rest in section)


def canonicalize(s: Spectrum) -> Spectrum:
    """Equal-as-set canonical spectrum; idempotent."""
    if s.canonical:
        return s
    for box in s.boxes:
        if box.dimension != s.dimension:
            raise DimensionMismatchError(s.dimension, box.dimension, "canonicalize")
    cells = _sweep(tuple(box.intervals for box in s.boxes))
    boxes = sorted((LatticeBox.from_intervals(cell) for cell in cells), key=LatticeBox.order_key)
    return Spectrum(s.dimension, tuple(boxes), True)


def intersect(a: Spectrum, b: Spectrum) -> Spectrum:
    """Set intersection, canonical."""
    _check_dimensions(a, b, "intersect")
    pieces = [p for x, y in itertools.product(a.boxes, b.boxes) if (p := x.intersection(y)) is not None]
    return canonicalize(Spectrum(a.dimension, tuple(pieces)))


def union(a: Spectrum, b: Spectrum) -> Spectrum:
    """Set union, canonical."""
    _check_dimensions(a, b, "union")
    return canonicalize(Spectrum(a.dimension, a.boxes + b.boxes))


def _subtract_all(box: LatticeBox, removed: tuple[LatticeBox, ...]) -> list[LatticeBox]:
    return reduce(lambda parts, cut: [piece for part in parts for piece in part.subtract(cut)], removed, [box])


def difference(a: Spectrum, b: Spectrum) -> Spectrum:
    """Set difference a minus b, canonical."""
    _check_dimensions(a, b, "difference")
    pieces = [piece for box in a.boxes for piece in _subtract_all(box, b.boxes)]
    return canonicalize(Spectrum(a.dimension, tuple(pieces)))


def enumerate_window(s: Spectrum, window: int) -> list[tuple[int, ...]]:
    """Points of s with every |coordinate| <= window, in lexicographic order."""
    if window < 1:
        raise ValueError("window must be at least 1")
    points: set[tuple[int, ...]] = set()
    for box in s.boxes:
        clipped = box.clip(window)
        if clipped is None:
            continue
        ranges = [range(int(lo), int(hi) + 1) for lo, hi in clipped.intervals]
        points.update(itertools.product(*ranges))
    return sorted(points)
