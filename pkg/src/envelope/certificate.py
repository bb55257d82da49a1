"""
Non-Steinness certificates for Hartogs figures.

The log image of a proper figure is not convex: a corner formed by the
boundaries of X0 and Y0 lies outside it but strictly inside its hull. Every
holomorphic function on the figure extends past that point.
"""

from __future__ import annotations

import itertools
import math

import structlog

from src.core.errors import CrossCheckError
from src.domains import Annulus, Factor1D, HartogsFigure, Radius
from src.envelope.hull import log_convex_hull, log_image
from src.envelope.models import LogBox, LogHull, SteinCertificate

logger = structlog.get_logger()


def _boundary_radii(inner: Factor1D, outer: Factor1D) -> list[Radius]:
    """Boundary radii of the inner factor, those strictly inside the outer factor first."""
    candidates: list[Radius] = []
    if inner.outer < outer.outer:
        candidates.append(inner.outer)
    if isinstance(inner, Annulus):
        candidates.append(inner.inner)
    if inner.outer not in candidates:
        candidates.append(inner.outer)
    return candidates


def _matches_bounding_box(hull: LogHull, bounding: LogBox) -> bool:
    for (lo, hi), b_lo, b_hi in zip(hull.bounds(), bounding.lo, bounding.hi, strict=True):
        if not math.isclose(hi, b_hi, abs_tol=hull.tolerance):
            return False
        if not (lo == b_lo == -math.inf or math.isclose(lo, b_lo, abs_tol=hull.tolerance)):
            return False
    return True


def stein_certificate(figure: HartogsFigure) -> SteinCertificate:
    """
    Certify that the figure is not Stein and locate its envelope.

    The envelope is reported as a Reinhardt box only when the hull of the log
    image is a box, in which case it is X×Y.

    Raises:
        UnsupportedShapeError: the figure is not planar or is unbounded.
        CrossCheckError: no candidate point separates the log image from its hull.
    """
    region = log_image(figure)
    hull = log_convex_hull(region)
    bounding = figure.X.product(figure.Y)

    envelope = None
    if hull.is_box():
        if _matches_bounding_box(hull, LogBox.from_domain(bounding)):
            envelope = bounding
        else:
            logger.warning("hull_box_mismatch", figure=figure.dsl(), bounds=hull.bounds())

    x_radii = _boundary_radii(figure.X0.factors[0], figure.X.factors[0])
    y_radii = _boundary_radii(figure.Y0.factors[0], figure.Y.factors[0])
    for rx, ry in itertools.product(x_radii, y_radii):
        log_point = (rx.log(), ry.log())
        if not region.contains(log_point) and hull.contains(log_point, strict=True):
            logger.debug("extension_point_found", figure=figure.dsl(), point=(str(rx), str(ry)))
            return SteinCertificate(
                is_stein=False,
                extension_point=(rx, ry),
                log_point=log_point,
                envelope=envelope,
                bounding_box=bounding,
                hull=hull,
            )

    raise CrossCheckError(
        "no boundary corner separates the log image from its convex hull",
        details={"figure": figure.dsl(), "x_radii": [str(r) for r in x_radii], "y_radii": [str(r) for r in y_radii]},
    )
