"""
Operations on Reinhardt box domains: containment, spectra, Hartogs covers and
natural domains of convergence.
"""

from __future__ import annotations

from src.core.errors import DimensionMismatchError, DomainValidationError, UnsupportedShapeError
from src.domains.models import (
    Annulus,
    Disc,
    Factor1D,
    HartogsFigure,
    ReinhardtBoxDomain,
    check_same_dimension,
    factor_contains,
)
from src.domains.radius import Radius
from src.lattice import LatticeBox, Spectrum


def contains(inner: ReinhardtBoxDomain, outer: ReinhardtBoxDomain) -> bool:
    """True iff inner ⊆ outer, decided factorwise."""
    check_same_dimension(inner, outer, "contains")
    return all(factor_contains(a, b) for a, b in zip(inner.factors, outer.factors, strict=True))


def spectrum_of(domain: ReinhardtBoxDomain) -> Spectrum:
    """Exponents of monomials holomorphic on the domain: ℕ on discs, ℤ on annuli."""
    intervals = [factor.spectrum_interval() for factor in domain.factors]
    return Spectrum.of(domain.dimension, [LatticeBox.from_intervals(intervals)])


def hartogs_cover(
    figure: HartogsFigure,
) -> tuple[ReinhardtBoxDomain, ReinhardtBoxDomain, ReinhardtBoxDomain]:
    """The Stein cover (U1, U2) of the figure and their intersection U12."""
    u1 = figure.X0.product(figure.Y)
    u2 = figure.X.product(figure.Y0)
    u12 = figure.X0.product(figure.Y0)
    return u1, u2, u12


def _as_box(region: LatticeBox | Spectrum) -> LatticeBox:
    if isinstance(region, LatticeBox):
        return region
    if not region.is_single_box():
        raise UnsupportedShapeError(f"natural domains are defined for single boxes, got {region}")
    return region.boxes[0]


def _natural_factor(lo: float, hi: float, factor: Factor1D, axis: int) -> Factor1D:
    if lo >= 0:
        return Disc(outer=factor.outer)
    if isinstance(factor, Disc):
        raise DomainValidationError(
            f"exponents below zero on coordinate {axis} are not holomorphic on the disc {factor}"
        )
    if hi <= -1:
        return Annulus(inner=factor.inner, outer=Radius.infinity())
    return factor


def natural_domain(region: LatticeBox | Spectrum, base: ReinhardtBoxDomain) -> ReinhardtBoxDomain:
    """
    Largest elementary domain on which every series with exponents in the box,
    converging on base, still converges.

    Per coordinate: exponents bounded below by 0 extend over the full disc of
    the same outer radius; exponents bounded above by -1 extend to the annulus
    reaching infinity; anything else keeps the base factor.
    """
    box = _as_box(region)
    if box.dimension != base.dimension:
        raise DimensionMismatchError(base.dimension, box.dimension, "natural_domain")
    factors = tuple(
        _natural_factor(lo, hi, factor, axis)
        for axis, (lo, hi, factor) in enumerate(zip(box.lo, box.hi, base.factors, strict=True))
    )
    return ReinhardtBoxDomain(factors=factors)
