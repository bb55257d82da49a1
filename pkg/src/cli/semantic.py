"""
Turn parsed expressions into validated domains, pairs and figures.
"""

from __future__ import annotations

from src.cli.ast import AnnulusExpr, DiscExpr, DomainExpr, Expr, HartogsExpr, PairExpr, ProductExpr
from src.core.config import config
from src.core.errors import DslSemanticError, HartogsError
from src.domains import Annulus, Disc, Factor1D, HartogsFigure, Radius, ReinhardtBoxDomain

Built = ReinhardtBoxDomain | HartogsFigure | tuple[ReinhardtBoxDomain, ReinhardtBoxDomain]


def _factor(expr: DiscExpr | AnnulusExpr) -> Factor1D:
    if isinstance(expr, DiscExpr):
        return Disc(outer=Radius.of(expr.radius))
    return Annulus(inner=Radius.of(expr.inner), outer=Radius.of(expr.outer))


def _domain(expr: DomainExpr) -> ReinhardtBoxDomain:
    factors = expr.factors if isinstance(expr, ProductExpr) else (expr,)
    return ReinhardtBoxDomain(factors=tuple(_factor(f) for f in factors))


def build(expr: Expr) -> Built:
    """
    Validate an expression.

    Raises:
        DslSemanticError: nonpositive radii, r >= R, a violated containment or
            a dimension above HARTOGS_MAX_DIMENSION.
    """
    try:
        built: Built
        if isinstance(expr, HartogsExpr):
            built = HartogsFigure(X=_domain(expr.X), X0=_domain(expr.X0), Y=_domain(expr.Y), Y0=_domain(expr.Y0))
            dimension = built.dimension
        elif isinstance(expr, PairExpr):
            built = (_domain(expr.inner), _domain(expr.outer))
            dimension = built[0].dimension
        else:
            built = _domain(expr)
            dimension = built.dimension
    except (HartogsError, ValueError) as e:
        # pydantic reports validator failures as ValidationError, a ValueError
        raise DslSemanticError(str(e)) from e

    if dimension > config.engine.max_dimension:
        raise DslSemanticError(f"dimension {dimension} exceeds HARTOGS_MAX_DIMENSION={config.engine.max_dimension}")
    return built


def build_figure(expr: Expr) -> HartogsFigure:
    built = build(expr)
    if not isinstance(built, HartogsFigure):
        raise DslSemanticError("this command expects hartogs(X=..., X0=..., Y=..., Y0=...)")
    return built


def build_pair(expr: Expr) -> tuple[ReinhardtBoxDomain, ReinhardtBoxDomain]:
    built = build(expr)
    if not isinstance(built, tuple):
        raise DslSemanticError("this command expects a pair (inner, outer)")
    return built
