"""
Log images of Hartogs figures and their closed convex hulls in the plane.

A hull is generated by finitely many points and the recession directions
-e_i of unbounded axes. Its facets are found exactly from the generators:
candidate normals are the edge normals of the point hull and the axis
normals; a candidate survives when it lies in the polar cone of the
directions and touches the hull along an edge or a ray.
"""

from __future__ import annotations

import math

import structlog

from src.core.config import config
from src.core.errors import UnsupportedShapeError
from src.domains import HartogsFigure
from src.envelope.models import HalfPlane, LogBox, LogHull, LogRegion, Point

logger = structlog.get_logger()


def log_image(figure: HartogsFigure) -> LogRegion:
    """log(X0)×log(Y) ∪ log(X)×log(Y0) for a figure with one-dimensional factors."""
    if figure.X.dimension != 1 or figure.Y.dimension != 1:
        raise UnsupportedShapeError(f"log images are computed for planar figures only, got dimension {figure.dimension}")
    return LogRegion(
        (
            LogBox.from_domain(figure.X0.product(figure.Y)),
            LogBox.from_domain(figure.X.product(figure.Y0)),
        )
    )


def _cross(o: Point, a: Point, b: Point) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _monotone_chain(points: list[Point]) -> list[Point]:
    """Hull vertices in counter-clockwise order, collinear points dropped."""
    ordered = sorted(set(points))
    if len(ordered) <= 2:
        return ordered

    lower: list[Point] = []
    for p in ordered:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0.0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(ordered):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0.0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _unit(vector: Point) -> Point:
    length = math.hypot(*vector)
    return (vector[0] / length, vector[1] / length)


def _candidate_normals(vertices: list[Point]) -> list[Point]:
    normals: list[Point] = [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)]
    if len(vertices) == 2:
        (ax, ay), (bx, by) = vertices
        edge_normal = _unit((by - ay, ax - bx))
        normals += [edge_normal, (-edge_normal[0], -edge_normal[1])]
    elif len(vertices) > 2:
        for (ax, ay), (bx, by) in zip(vertices, vertices[1:] + vertices[:1], strict=True):
            # outward for a counter-clockwise polygon
            normals.append(_unit((by - ay, ax - bx)))
    return normals


def _dot(a: Point, b: Point) -> float:
    return sum(x * y for x, y in zip(a, b, strict=True))


def _facet(normal: Point, points: list[Point], directions: list[Point], tolerance: float) -> HalfPlane | None:
    if any(_dot(normal, d) > tolerance for d in directions):
        return None
    offset = max(_dot(normal, p) for p in points)
    tight_points = {p for p in points if abs(_dot(normal, p) - offset) <= tolerance}
    tight_directions = [d for d in directions if abs(_dot(normal, d)) <= tolerance]
    if len(tight_points) >= 2 or (tight_points and tight_directions):
        return HalfPlane(normal, offset)
    return None


def _same_halfplane(a: HalfPlane, b: HalfPlane, tolerance: float) -> bool:
    return all(abs(x - y) <= tolerance for x, y in zip(a.normal, b.normal, strict=True))


def _hull_from_generators(points: list[Point], directions: list[Point], tolerance: float) -> LogHull:
    vertices = _monotone_chain(points)
    halfplanes: list[HalfPlane] = []
    for normal in _candidate_normals(vertices):
        facet = _facet(normal, vertices, directions, tolerance)
        if facet is not None and not any(_same_halfplane(facet, h, tolerance) for h in halfplanes):
            halfplanes.append(facet)
    halfplanes.sort(key=lambda h: (h.normal, h.offset))
    return LogHull(
        points=tuple(vertices),
        directions=tuple(sorted(set(directions))),
        halfplanes=tuple(halfplanes),
        tolerance=tolerance,
    )


def log_convex_hull(region: LogRegion | LogHull, tolerance: float | None = None) -> LogHull:
    """
    Closed convex hull of a planar log region (or of an existing hull).

    Raises:
        UnsupportedShapeError: the region is not two-dimensional.
    """
    tolerance = config.geometry.hull_tolerance if tolerance is None else tolerance
    if isinstance(region, LogHull):
        return _hull_from_generators(list(region.points), list(region.directions), tolerance)
    if region.dimension != 2:
        raise UnsupportedShapeError(f"log-convex hulls are computed in the plane, got dimension {region.dimension}")

    points = [v for box in region.boxes for v in box.vertices()]
    directions = sorted({d for box in region.boxes for d in box.directions()})
    hull = _hull_from_generators(points, directions, tolerance)
    logger.debug("log_hull_computed", facets=len(hull.halfplanes), is_box=hull.is_box())
    return hull
