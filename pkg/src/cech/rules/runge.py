"""Rule for figures with a Runge pair and no split pair."""

from __future__ import annotations

from src.cech.context import CechContext
from src.cech.models import CohomClass, IndiscreteModel
from src.cech.rule_ids import RuleID
from src.cech.rules.base import BaseRule, RuleOutcome
from src.domains import LaurentModel
from src.pairs import PairTag


class RungeAnyRule(BaseRule):
    """O(U1)| + O(U2)| dense in O(U12): H^{0,1} is indiscrete."""

    rule_id = RuleID.RUNGE_ANY

    def applies(self, context: CechContext) -> bool:
        return context.q == 1 and PairTag.RUNGE in context.tags and PairTag.SPLIT not in context.tags

    def fire(self, context: CechContext) -> RuleOutcome:
        # a Runge (X0,X) makes O(U2) dense in O(U12), a Runge (Y0,Y) does the same for O(U1)
        sides = ((context.x_pair, context.u2), (context.y_pair, context.u1))
        dense = [side for pair, side in sides if pair.tag is PairTag.RUNGE]
        indiscrete = IndiscreteModel(
            numerator=LaurentModel.of_domain(context.u12),
            denominators=tuple(LaurentModel.of_domain(side) for side in dense),
        )
        extra = (RuleID.QUASI_UNDETERMINED,) if PairTag.QUASI_SPLIT in context.tags else ()
        return RuleOutcome(
            cohom_class=CohomClass.INDISCRETE,
            reduced=LaurentModel.empty(context.u12),
            indiscrete=indiscrete,
            extra_rules=extra,
        )
