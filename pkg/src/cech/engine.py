"""
Cohomology decision engine for generalized Hartogs figures.

H^{p,q} is computed on the Leray cover U1 = X0×Y, U2 = X×Y0. The figure is
first normalized so that a split pair comes first; the selected rule works
in those coordinates and the report is transposed back.
"""

from __future__ import annotations

import math

import structlog

from src.cech.context import CechContext
from src.cech.models import Cardinality, CohomClass, CohomologyReport, JustificationEntry
from src.cech.registry import RuleRegistry
from src.cech.rule_ids import RuleID
from src.domains import HartogsFigure

logger = structlog.get_logger()


def _check_bidegree(figure: HartogsFigure, p: int, q: int) -> None:
    if q < 0:
        raise ValueError(f"q must be non-negative, got {q}")
    if not 0 <= p <= figure.dimension:
        raise ValueError(f"p must lie in [0, {figure.dimension}], got {p}")


def cohomology(figure: HartogsFigure, p: int, q: int) -> CohomologyReport:
    """
    Classify H^{p,q} of the figure and model its reduced and indiscrete parts.

    Args:
        figure: The Hartogs figure (X×Y0) ∪ (X0×Y).
        p: Form degree, 0 <= p <= dim.
        q: Cohomological degree, q >= 0.

    Returns:
        The report in the figure's own coordinates.

    Raises:
        ValueError: p or q out of range.
        UnsupportedClassificationError: a pair, or the combination of both,
            lies outside the decision table.
        CrossCheckError: two derivations of the same group disagree.
    """
    _check_bidegree(figure, p, q)
    context = CechContext.build(figure, p, q)
    rule = RuleRegistry.select(context)
    result = rule.fire(context)

    rules = [RuleID.SYMMETRY] if context.swapped else []
    rules += [rule.rule_id, *result.extra_rules]
    multiplicity = math.comb(figure.dimension, p)
    if p >= 1:
        rules.append(RuleID.MULTIPLICITY)

    reduced, indiscrete = result.reduced, result.indiscrete
    if context.swapped:
        permutation = figure.swap_permutation()
        reduced = reduced.transpose(permutation)
        indiscrete = indiscrete.transpose(permutation) if indiscrete is not None else None

    report = CohomologyReport(
        bidegree=(p, q),
        cohom_class=result.cohom_class,
        cardinality=Cardinality.ZERO if result.cohom_class is CohomClass.ZERO else Cardinality.UNCOUNTABLE,
        multiplicity=multiplicity,
        reduced=reduced,
        indiscrete=indiscrete,
        pair_tags=(context.y_pair.tag, context.x_pair.tag) if context.swapped else context.tags,
        justification=tuple(JustificationEntry.for_rule(rule_id) for rule_id in rules),
        notes=result.notes,
        informational=result.informational,
    )
    logger.debug(
        "cohomology_computed",
        figure=figure.dsl(),
        bidegree=(p, q),
        rule=rule.rule_id.value,
        cohom_class=report.cohom_class.value,
    )
    return report


def cohomology_table(figure: HartogsFigure, max_q: int = 2) -> list[CohomologyReport]:
    """Reports for every p in [0, dim] and q in [0, max_q], ordered by (q, p)."""
    return [cohomology(figure, p, q) for q in range(max_q + 1) for p in range(figure.dimension + 1)]


def justification_trail(report: CohomologyReport) -> list[tuple[str, str, str]]:
    """(rule id, anchor, statement) for each fired rule, in firing order."""
    return [(entry.rule_id.value, entry.anchor, entry.statement) for entry in report.justification]
