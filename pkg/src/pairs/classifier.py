"""
Decision table for Stein pairs of elementary Reinhardt domains.

One-dimensional pairs are classified directly. Products are classified from
their factor pairs: all Runge, all split, or split/quasi-split with at least
one quasi-split; every other mix is reported as unsupported.
"""

from __future__ import annotations

import structlog
from cachetools import LRUCache, cached

from src.core.errors import NotAContainmentError
from src.domains import (
    Annulus,
    Disc,
    LaurentModel,
    ReinhardtBoxDomain,
    contains,
    spectrum_of,
)
from src.domains.models import check_same_dimension
from src.pairs.models import PairClass, PairRule, PairTag

logger = structlog.get_logger()

_PROPER_TAGS = frozenset({PairTag.RUNGE, PairTag.SPLIT, PairTag.QUASI_SPLIT})


def _check_pair(inner: ReinhardtBoxDomain, outer: ReinhardtBoxDomain) -> None:
    check_same_dimension(inner, outer, "Stein pair")
    if not contains(inner, outer):
        raise NotAContainmentError(f"{inner} is not contained in {outer}")
    if inner == outer:
        raise NotAContainmentError(f"Stein pair must be a proper containment, both are {inner}")


def _complement(inner: ReinhardtBoxDomain, outer: ReinhardtBoxDomain) -> LaurentModel:
    """Q(inner, outer): exponents of inner not available on outer."""
    return LaurentModel.natural(spectrum_of(inner) - spectrum_of(outer), inner)


@cached(cache=LRUCache(maxsize=512))
def classify_pair(inner: ReinhardtBoxDomain, outer: ReinhardtBoxDomain) -> PairClass:
    """Classify a one-dimensional Stein pair (Z0, Z)."""
    _check_pair(inner, outer)
    if inner.dimension != 1:
        raise ValueError("classify_pair takes one-dimensional domains; use classify_product_pair")

    z0, z = inner.factors[0], outer.factors[0]
    result: PairClass
    if isinstance(z0, Disc):
        result = PairClass(
            tag=PairTag.RUNGE,
            inner=inner,
            outer=outer,
            witness_rule=PairRule.DISC_IN_DISC,
            closure_of_restriction=LaurentModel.of_domain(inner),
        )
    elif isinstance(z, Annulus):
        result = PairClass(
            tag=PairTag.RUNGE,
            inner=inner,
            outer=outer,
            witness_rule=PairRule.NESTED_ANNULI,
            closure_of_restriction=LaurentModel.of_domain(inner),
        )
    elif z0.outer == z.outer:
        result = PairClass(
            tag=PairTag.SPLIT,
            inner=inner,
            outer=outer,
            witness_rule=PairRule.ANNULUS_IN_DISC_SAME_OUTER,
            complement=_complement(inner, outer),
            closure_of_restriction=LaurentModel.of_domain(outer),
        )
    else:
        intermediate = ReinhardtBoxDomain.of(Disc(outer=z0.outer))
        result = PairClass(
            tag=PairTag.QUASI_SPLIT,
            inner=inner,
            outer=outer,
            witness_rule=PairRule.ANNULUS_IN_DISC_SMALLER_OUTER,
            complement=_complement(inner, intermediate),
            closure_of_restriction=LaurentModel.of_domain(intermediate),
            intermediate=intermediate,
        )

    logger.debug("pair_classified", pair=str(result), rule=result.witness_rule.name)
    return result


def _factor_classes(inner: ReinhardtBoxDomain, outer: ReinhardtBoxDomain) -> tuple[PairClass, ...]:
    classes = []
    for z0, z in zip(inner.factors, outer.factors, strict=True):
        a, b = ReinhardtBoxDomain.of(z0), ReinhardtBoxDomain.of(z)
        if a == b:
            classes.append(PairClass(tag=PairTag.EQUAL, inner=a, outer=b, witness_rule=PairRule.IDENTICAL_FACTOR))
        else:
            classes.append(classify_pair(a, b))
    return tuple(classes)


@cached(cache=LRUCache(maxsize=512))
def classify_product_pair(inner: ReinhardtBoxDomain, outer: ReinhardtBoxDomain) -> PairClass:
    """
    Classify a Stein pair of products of discs and annuli.

    One-dimensional pairs go through the same table as classify_pair. For
    quasi-split products the intermediate domain X1 replaces each quasi-split
    annulus A(r,R) by the disc of radius R; (inner, X1) is then split and
    (X1, outer) Runge.
    """
    _check_pair(inner, outer)
    if inner.dimension == 1:
        return classify_pair(inner, outer)

    factors = _factor_classes(inner, outer)
    proper = {f.tag for f in factors if f.tag in _PROPER_TAGS}

    result: PairClass
    if proper == {PairTag.RUNGE}:
        result = PairClass(
            tag=PairTag.RUNGE,
            inner=inner,
            outer=outer,
            witness_rule=PairRule.PRODUCT_RUNGE,
            closure_of_restriction=LaurentModel.of_domain(inner),
            factors=factors,
        )
    elif proper == {PairTag.SPLIT}:
        result = PairClass(
            tag=PairTag.SPLIT,
            inner=inner,
            outer=outer,
            witness_rule=PairRule.PRODUCT_SPLIT,
            complement=_complement(inner, outer),
            closure_of_restriction=LaurentModel.of_domain(outer),
            factors=factors,
        )
    elif PairTag.RUNGE not in proper:
        intermediate = ReinhardtBoxDomain(
            factors=tuple(
                f.intermediate.factors[0] if f.intermediate is not None else f.outer.factors[0] for f in factors
            )
        )
        result = PairClass(
            tag=PairTag.QUASI_SPLIT,
            inner=inner,
            outer=outer,
            witness_rule=PairRule.PRODUCT_QUASI_SPLIT,
            complement=_complement(inner, intermediate),
            closure_of_restriction=LaurentModel.of_domain(intermediate),
            intermediate=intermediate,
            factors=factors,
        )
    else:
        result = PairClass(
            tag=PairTag.UNSUPPORTED,
            inner=inner,
            outer=outer,
            witness_rule=PairRule.PRODUCT_MIXED,
            factors=factors,
            reason="factor pairs mix "
            + ", ".join(sorted(tag.value for tag in proper))
            + "; no tensorization rule covers this combination",
        )

    logger.debug("product_pair_classified", pair=str(result), rule=result.witness_rule.name)
    return result
