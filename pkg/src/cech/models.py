"""
Data types for cohomology reports.
"""

from __future__ import annotations

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.cech.rule_ids import RULE_ID_TO_ANCHOR, RULE_ID_TO_STATEMENT, RuleID
from src.domains import LaurentModel
from src.pairs import PairTag


class CohomClass(StrEnum):
    """Topological type of a cohomology group E = E_ind ⊕ E_red."""

    ZERO = "zero"
    INDISCRETE = "indiscrete"
    HAUSDORFF = "hausdorff"
    MIXED = "mixed"


class Cardinality(StrEnum):
    """Dimension of a cohomology group: zero or uncountable, nothing in between."""

    ZERO = "zero"
    UNCOUNTABLE = "uncountable"


class JustificationEntry(BaseModel):
    """One fired rule in a report's trail."""

    model_config = ConfigDict(frozen=True)

    rule_id: RuleID
    anchor: str
    statement: str

    @classmethod
    def for_rule(cls, rule_id: RuleID) -> JustificationEntry:
        return cls(rule_id=rule_id, anchor=RULE_ID_TO_ANCHOR[rule_id], statement=RULE_ID_TO_STATEMENT[rule_id])


class IndiscreteModel(BaseModel):
    """
    Indiscrete part presented as numerator modulo a dense subspace.

    The dense subspace is the sum of the restrictions listed in denominators.
    They are kept in a canonical order, so two presentations of the same sum
    compare equal whatever order the rule produced them in.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    numerator: LaurentModel
    denominators: tuple[LaurentModel, ...] = Field(min_length=1)

    @field_validator("denominators")
    @classmethod
    def _canonical_order(cls, models: tuple[LaurentModel, ...]) -> tuple[LaurentModel, ...]:
        unique = {(m.convergence.dsl(), str(m.spectrum)): m for m in models}
        return tuple(unique[key] for key in sorted(unique))

    def transpose(self, permutation: tuple[int, ...]) -> IndiscreteModel:
        return IndiscreteModel(
            numerator=self.numerator.transpose(permutation),
            denominators=tuple(m.transpose(permutation) for m in self.denominators),
        )


class CohomologyReport(BaseModel):
    """H^{p,q} of a Hartogs figure with models of its reduced and indiscrete parts."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    bidegree: tuple[int, int]
    cohom_class: CohomClass
    cardinality: Cardinality
    multiplicity: int = Field(ge=1)
    reduced: LaurentModel
    indiscrete: IndiscreteModel | None = None
    pair_tags: tuple[PairTag, PairTag]
    justification: tuple[JustificationEntry, ...] = Field(default_factory=tuple)
    notes: tuple[str, ...] = Field(default_factory=tuple)
    informational: bool = False

    @model_validator(mode="after")
    def _check_class(self) -> CohomologyReport:
        p, q = self.bidegree
        if q > 1 and self.cohom_class is not CohomClass.ZERO:
            raise ValueError(f"H^{{{p},{q}}} of a two-set Stein cover must be zero")
        expected = Cardinality.ZERO if self.cohom_class is CohomClass.ZERO else Cardinality.UNCOUNTABLE
        if self.cardinality is not expected:
            raise ValueError(f"cardinality {self.cardinality} inconsistent with class {self.cohom_class}")

        has_reduced = not self.reduced.is_empty()
        has_indiscrete = self.indiscrete is not None
        shape = {
            CohomClass.ZERO: (False, False),
            CohomClass.INDISCRETE: (False, True),
            CohomClass.HAUSDORFF: (True, False),
            CohomClass.MIXED: (True, True),
        }[self.cohom_class]
        if (has_reduced, has_indiscrete) != shape:
            raise ValueError(
                f"class {self.cohom_class} requires reduced={'nonempty' if shape[0] else 'empty'} "
                f"and indiscrete={'present' if shape[1] else 'absent'}"
            )
        return self

    @property
    def p(self) -> int:
        return self.bidegree[0]

    @property
    def q(self) -> int:
        return self.bidegree[1]


class OracleCheck(BaseModel):
    """Comparison of the engine's reduced spectrum with the graded brute force."""

    model_config = ConfigDict(frozen=True)

    window: int
    engine_points: int
    oracle_points: int
    only_in_engine: list[tuple[int, ...]] = Field(default_factory=list)
    only_in_oracle: list[tuple[int, ...]] = Field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return not self.only_in_engine and not self.only_in_oracle
