"""Rules for figures whose first pair is split."""

from __future__ import annotations

from src.cech.context import CechContext
from src.cech.models import CohomClass, IndiscreteModel
from src.cech.rule_ids import RuleID
from src.cech.rules.base import BaseRule, RuleOutcome
from src.core.errors import CrossCheckError
from src.domains import LaurentModel
from src.pairs import PairTag


def _degree_one_with(context: CechContext, y_tag: PairTag) -> bool:
    return context.q == 1 and context.tags == (PairTag.SPLIT, y_tag)


def _complement(pair_model: LaurentModel | None) -> LaurentModel:
    if pair_model is None:
        raise ValueError("split and quasi-split pairs always carry a complement model")
    return pair_model


class SplitSplitRule(BaseRule):
    """H^{0,1} = Q(X0,X) ⊗̂ Q(Y0,Y)."""

    rule_id = RuleID.SPLIT_SPLIT

    def applies(self, context: CechContext) -> bool:
        return _degree_one_with(context, PairTag.SPLIT)

    def fire(self, context: CechContext) -> RuleOutcome:
        q_x = _complement(context.x_pair.complement)
        q_y = _complement(context.y_pair.complement)
        reduced = q_x.tensor(q_y)

        # Second derivation: Q(X0,X) ⊗̂ O(Y0) modulo the restrictions from Y.
        numerator = q_x.tensor(LaurentModel.of_domain(context.figure.Y0))
        denominator = q_x.tensor(LaurentModel.of_domain(context.figure.Y))
        quotient = numerator.spectrum - denominator.spectrum
        if quotient != reduced.spectrum:
            raise CrossCheckError(
                "split ⊗ split derivations disagree",
                details={"product": str(reduced.spectrum), "quotient": str(quotient)},
            )
        return RuleOutcome(cohom_class=CohomClass.HAUSDORFF, reduced=reduced)


class SplitQuasiSplitRule(BaseRule):
    """Hausdorff part Q ⊗̂ Q_r plus an indiscrete quotient."""

    rule_id = RuleID.SPLIT_QUASI_SPLIT

    def applies(self, context: CechContext) -> bool:
        return _degree_one_with(context, PairTag.QUASI_SPLIT)

    def fire(self, context: CechContext) -> RuleOutcome:
        q_x = _complement(context.x_pair.complement)
        q_r = _complement(context.y_pair.complement)
        closure = context.y_pair.closure_of_restriction
        if closure is None:
            raise ValueError("quasi-split pairs always carry a closure model")
        indiscrete = IndiscreteModel(
            numerator=q_x.tensor(closure),
            denominators=(q_x.tensor(LaurentModel.of_domain(context.figure.Y)),),
        )
        return RuleOutcome(cohom_class=CohomClass.MIXED, reduced=q_x.tensor(q_r), indiscrete=indiscrete)


class SplitRungeRule(BaseRule):
    """Q(X0,X) ⊗̂ O(Y0) divided by its dense subspace Q(X0,X) ⊗̂ O(Y)|Y0."""

    rule_id = RuleID.SPLIT_RUNGE

    def applies(self, context: CechContext) -> bool:
        return _degree_one_with(context, PairTag.RUNGE)

    def fire(self, context: CechContext) -> RuleOutcome:
        q_x = _complement(context.x_pair.complement)
        indiscrete = IndiscreteModel(
            numerator=q_x.tensor(LaurentModel.of_domain(context.figure.Y0)),
            denominators=(q_x.tensor(LaurentModel.of_domain(context.figure.Y)),),
        )
        return RuleOutcome(
            cohom_class=CohomClass.INDISCRETE,
            reduced=LaurentModel.empty(context.u12),
            indiscrete=indiscrete,
        )
