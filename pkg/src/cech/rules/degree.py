"""Rules that only look at the bidegree."""

from __future__ import annotations

import structlog

from src.cech.context import CechContext
from src.cech.models import CohomClass
from src.cech.rule_ids import RuleID
from src.cech.rules.base import BaseRule, RuleOutcome
from src.core.errors import UnsupportedShapeError
from src.domains import LaurentModel, spectrum_of
from src.envelope import stein_certificate

logger = structlog.get_logger()


class VanishingRule(BaseRule):
    """Nothing survives past degree one on a two-set cover."""

    rule_id = RuleID.VANISHING

    def applies(self, context: CechContext) -> bool:
        return context.q > 1

    def fire(self, context: CechContext) -> RuleOutcome:
        return RuleOutcome(cohom_class=CohomClass.ZERO, reduced=LaurentModel.empty(context.u12))


class DegreeZeroRule(BaseRule):
    """Holomorphic functions on the figure, modelled on its envelope when that is a box."""

    rule_id = RuleID.DEGREE_ZERO

    def applies(self, context: CechContext) -> bool:
        return context.q == 0

    def fire(self, context: CechContext) -> RuleOutcome:
        figure = context.figure
        spectrum = spectrum_of(context.u1) & spectrum_of(context.u2)
        bounding = figure.X.product(figure.Y)
        notes: list[str] = []
        try:
            certificate = stein_certificate(figure)
            convergence = certificate.envelope or certificate.bounding_box
            if certificate.envelope is None:
                notes.append("log-convex hull is not a box; convergence shown on the bounding box")
        except UnsupportedShapeError as e:
            logger.debug("envelope_unavailable", figure=str(figure), reason=str(e))
            convergence = bounding
            notes.append(f"envelope not computed ({e}); convergence shown on the bounding box")

        return RuleOutcome(
            cohom_class=CohomClass.HAUSDORFF,
            reduced=LaurentModel(spectrum=spectrum, convergence=convergence),
            notes=tuple(notes),
            informational=True,
        )
