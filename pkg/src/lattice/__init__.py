"""
Exact set algebra over regions of Z^n.

Regions are finite unions of axis-aligned integer boxes whose endpoints may
be infinite; they house the monomial index sets of Laurent expansions.
"""

from src.lattice.box import (
    NEG_INF,
    POS_INF,
    ExtInt,
    LatticeBox,
    check_ext_int,
    format_ext_int,
    parse_ext_int,
)
from src.lattice.spectrum import (
    Spectrum,
    canonicalize,
    difference,
    enumerate_window,
    intersect,
    union,
)

__all__ = [
    "NEG_INF",
    "POS_INF",
    "ExtInt",
    "LatticeBox",
    "Spectrum",
    "canonicalize",
    "check_ext_int",
    "difference",
    "enumerate_window",
    "format_ext_int",
    "intersect",
    "parse_ext_int",
    "union",
]
