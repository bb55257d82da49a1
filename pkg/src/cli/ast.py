"""
Syntax tree of the domain description language.

Radii are kept exactly as written (a rational or inf) and are only checked
for positivity when the tree is turned into domains.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Number = Fraction | float


def format_number(value: Number) -> str:
    if isinstance(value, float):
        if value == math.inf:
            return "inf"
        raise ValueError(f"radii are exact; unexpected float {value}")
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class DiscExpr:
    radius: Number


@dataclass(frozen=True)
class AnnulusExpr:
    inner: Number
    outer: Number


FactorExpr = DiscExpr | AnnulusExpr


@dataclass(frozen=True)
class ProductExpr:
    """Product of two or more one-dimensional factors."""

    factors: tuple[FactorExpr, ...]


DomainExpr = DiscExpr | AnnulusExpr | ProductExpr


@dataclass(frozen=True)
class HartogsExpr:
    X: DomainExpr
    X0: DomainExpr
    Y: DomainExpr
    Y0: DomainExpr


@dataclass(frozen=True)
class PairExpr:
    """A Stein pair (Z0, Z) written as (inner, outer)."""

    inner: DomainExpr
    outer: DomainExpr


Expr = DomainExpr | HartogsExpr | PairExpr


def format_expr(expr: Expr) -> str:
    """Canonical text; parse(format_expr(e)) == e."""
    match expr:
        case DiscExpr(radius):
            return f"disc({format_number(radius)})"
        case AnnulusExpr(inner, outer):
            return f"annulus({format_number(inner)},{format_number(outer)})"
        case ProductExpr(factors):
            return " x ".join(format_expr(f) for f in factors)
        case HartogsExpr(x, x0, y, y0):
            return (
                f"hartogs(X={format_expr(x)}, X0={format_expr(x0)}, "
                f"Y={format_expr(y)}, Y0={format_expr(y0)})"
            )
        case PairExpr(inner, outer):
            return f"({format_expr(inner)}, {format_expr(outer)})"
    raise TypeError(f"not a DSL expression: {expr!r}")
