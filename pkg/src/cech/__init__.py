"""
Čech cohomology of generalized Hartogs figures on their two-set Leray cover.
"""

from src.cech.engine import cohomology, cohomology_table, justification_trail
from src.cech.models import (
    Cardinality,
    CohomClass,
    CohomologyReport,
    IndiscreteModel,
    JustificationEntry,
    OracleCheck,
)
from src.cech.oracle import graded_reduced_spectrum, verify_oracle
from src.cech.registry import RuleRegistry
from src.cech.rule_ids import RULE_ID_TO_ANCHOR, RULE_ID_TO_STATEMENT, RuleID

__all__ = [
    "RULE_ID_TO_ANCHOR",
    "RULE_ID_TO_STATEMENT",
    "Cardinality",
    "CohomClass",
    "CohomologyReport",
    "IndiscreteModel",
    "JustificationEntry",
    "OracleCheck",
    "RuleID",
    "RuleRegistry",
    "cohomology",
    "cohomology_table",
    "graded_reduced_spectrum",
    "justification_trail",
    "verify_oracle",
]
