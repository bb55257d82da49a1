"""Base rule interface for the cohomology decision engine.

Each rule recognises the situation it covers and produces the class and
Laurent models of H^{0,q} in normalized coordinates.
"""

from __future__ import annotations

from abc import ABC, abstractmethod

from pydantic import BaseModel, ConfigDict, Field

from src.cech.context import CechContext
from src.cech.models import CohomClass, IndiscreteModel
from src.cech.rule_ids import RULE_ID_TO_ANCHOR, RULE_ID_TO_STATEMENT, RuleID
from src.domains import LaurentModel


class RuleOutcome(BaseModel):
    """What a fired rule contributes to a report."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    cohom_class: CohomClass
    reduced: LaurentModel
    indiscrete: IndiscreteModel | None = None
    extra_rules: tuple[RuleID, ...] = Field(default_factory=tuple)
    notes: tuple[str, ...] = Field(default_factory=tuple)
    informational: bool = False


class BaseRule(ABC):
    """Abstract base class for all decision rules.

    Attributes:
        rule_id: Identifier recorded in the justification trail.
    """

    rule_id: RuleID

    @property
    def anchor(self) -> str:
        return RULE_ID_TO_ANCHOR[self.rule_id]

    @property
    def statement(self) -> str:
        return RULE_ID_TO_STATEMENT[self.rule_id]

    @abstractmethod
    def applies(self, context: CechContext) -> bool:
        """Whether the rule decides the bidegree and pair classes in context."""

    @abstractmethod
    def fire(self, context: CechContext) -> RuleOutcome:
        """Compute the outcome; only called when applies() holds."""
