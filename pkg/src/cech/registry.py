"""
Registry for the cohomology decision rules.

Maps RuleIDs to rule classes and fixes the order in which rules are tried.
"""

import structlog

from src.cech.context import CechContext
from src.cech.rule_ids import RuleID
from src.cech.rules import (
    BaseRule,
    DegreeZeroRule,
    RungeAnyRule,
    SplitQuasiSplitRule,
    SplitRungeRule,
    SplitSplitRule,
    VanishingRule,
)
from src.core.errors import UnsupportedClassificationError

logger = structlog.get_logger()

RULE_ID_TO_RULE: dict[RuleID, type[BaseRule]] = {
    RuleID.VANISHING: VanishingRule,
    RuleID.DEGREE_ZERO: DegreeZeroRule,
    RuleID.SPLIT_SPLIT: SplitSplitRule,
    RuleID.SPLIT_QUASI_SPLIT: SplitQuasiSplitRule,
    RuleID.SPLIT_RUNGE: SplitRungeRule,
    RuleID.RUNGE_ANY: RungeAnyRule,
}

# Bidegree rules first; they hold whatever the pair classes are.
AVAILABLE_RULES: list[type[BaseRule]] = [
    VanishingRule,
    DegreeZeroRule,
    SplitSplitRule,
    SplitQuasiSplitRule,
    SplitRungeRule,
    RungeAnyRule,
]


class RuleRegistry:
    """Registry for looking up and selecting decision rules."""

    @staticmethod
    def get_rule_class_by_id(rule_id: RuleID) -> type[BaseRule] | None:
        """Get rule class by RuleID."""
        return RULE_ID_TO_RULE.get(rule_id)

    @staticmethod
    def select(context: CechContext) -> BaseRule:
        """
        First rule that applies to the context.

        Raises:
            UnsupportedClassificationError: no rule covers the pair classes,
                e.g. two quasi-split pairs in degree one.
        """
        for rule_cls in AVAILABLE_RULES:
            rule = rule_cls()
            if rule.applies(context):
                logger.debug("rule_selected", rule=rule.rule_id.value, bidegree=(context.p, context.q))
                return rule
        raise UnsupportedClassificationError(
            f"no decision rule covers the pair classes {context.tags[0].value} ⊗ {context.tags[1].value}",
            classifications=[context.x_pair, context.y_pair],
        )
