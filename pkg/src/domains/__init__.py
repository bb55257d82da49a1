"""
Elementary Reinhardt domains and their Laurent spectra.
"""

from src.domains.laurent import LaurentModel
from src.domains.models import (
    Annulus,
    Disc,
    Factor1D,
    HartogsFigure,
    ReinhardtBoxDomain,
    annulus,
    disc,
    factor_contains,
)
from src.domains.operations import contains, hartogs_cover, natural_domain, spectrum_of
from src.domains.radius import Radius

__all__ = [
    "Annulus",
    "Disc",
    "Factor1D",
    "HartogsFigure",
    "LaurentModel",
    "Radius",
    "ReinhardtBoxDomain",
    "annulus",
    "contains",
    "disc",
    "factor_contains",
    "hartogs_cover",
    "natural_domain",
    "spectrum_of",
]
