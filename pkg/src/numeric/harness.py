"""
Numeric spot checks run alongside the symbolic engine.

Checks never prove topological statements; they exercise finite truncations
that are consistent with a figure's pair classifications.
"""

from __future__ import annotations

import itertools
import math

import numpy as np
import structlog

from src.core.config import config
from src.domains import Annulus, Disc, HartogsFigure, ReinhardtBoxDomain, hartogs_cover, spectrum_of
from src.lattice import enumerate_window
from src.numeric.approximation import density_decay, least_squares_polynomial, obstruction_bound
from src.numeric.models import DensityResult, LaurentPolynomial, NumericCheck, TorusSpec
from src.numeric.quadrature import coefficient_consistency, torus_coefficient
from src.pairs import PairClass, PairTag, classify_product_pair

logger = structlog.get_logger()

_EXPONENT_WINDOW = 8
# largest tolerated ratio between monomial magnitudes on a torus
_DYNAMIC_RANGE = 1e4
_RANDOM_TERMS = 12
_CANDIDATE_DEGREE = 50
_DENSITY_DEGREES = list(range(4, 41, 4))


def _exponent_window(tori: tuple[TorusSpec, ...], nodes: int) -> int:
    """Exponent range keeping monomial magnitudes within _DYNAMIC_RANGE of each other."""
    spread = max(abs(math.log(r)) for torus in tori for r in torus.radii)
    window = _EXPONENT_WINDOW if spread == 0 else int(math.log(_DYNAMIC_RANGE) / (2 * spread))
    return max(1, min(window, _EXPONENT_WINDOW, nodes // 2 - 1))


def quadrature_check(figure: HartogsFigure, nodes: int | None = None, seed: int | None = None) -> NumericCheck:
    """
    Recover the coefficients of a random Laurent polynomial on tori in U12 and U1.

    The polynomial uses exponents of O(U1) so the same expansion is valid on
    both tori; recovered coefficients must agree with each other and with
    the stored ones.
    """
    nodes = nodes or config.numeric.quadrature_nodes
    seed = config.numeric.seed if seed is None else seed
    u1, _, u12 = hartogs_cover(figure)
    rng = np.random.default_rng(seed)

    first, second = TorusSpec.inside(u12, nodes), TorusSpec.inside(u1, nodes)
    first.check_inside(u12)
    second.check_inside(u1)

    window = _exponent_window((first, second), nodes)
    exponents = enumerate_window(spectrum_of(u1), window)
    polynomial = LaurentPolynomial.random(rng, exponents, _RANDOM_TERMS)

    recovery = 0.0
    consistency = 0.0
    for alpha, c in polynomial.terms:
        recovered = torus_coefficient(polynomial, alpha, first)
        recovery = max(recovery, abs(recovered - c) / abs(c))
        consistency = max(consistency, coefficient_consistency(polynomial, alpha, first, second))

    tolerance = config.numeric.coefficient_tolerance
    return NumericCheck(
        name="quadrature",
        passed=recovery < tolerance and consistency < tolerance,
        details={
            "nodes": nodes,
            "seed": seed,
            "terms": len(polynomial.terms),
            "torus_u12": list(first.radii),
            "torus_u1": list(second.radii),
            "max_recovery_error": recovery,
            "max_consistency": consistency,
        },
    )


def _one_dimensional_pairs(figure: HartogsFigure) -> list[tuple[str, PairClass]]:
    pairs = []
    for name, inner, outer in (("X", figure.X0, figure.X), ("Y", figure.Y0, figure.Y)):
        for axis, (z0, z) in enumerate(zip(inner.factors, outer.factors, strict=True)):
            if z0 != z:
                pair = classify_product_pair(ReinhardtBoxDomain.of(z0), ReinhardtBoxDomain.of(z))
                pairs.append((f"{name}[{axis}]", pair))
    return pairs


def obstruction_check(label: str, pair: PairClass) -> NumericCheck:
    """Least-squares polynomials stay 1/ρ away from 1/z on a circle inside the annulus."""
    annulus = pair.inner.factors[0]
    if not isinstance(annulus, Annulus):
        raise ValueError(f"obstruction checks need an annulus inside a disc, got {pair}")
    radius = (annulus.inner.to_float() + annulus.outer.to_float()) / 2
    if not np.isfinite(radius):
        radius = 2 * annulus.inner.to_float()

    def target(z: np.ndarray) -> np.ndarray:
        return 1 / z

    candidate = least_squares_polynomial(target, radius, _CANDIDATE_DEGREE)
    result = obstruction_bound(1, radius, candidate)
    tolerance = config.numeric.sup_tolerance
    passed = result.consistent and result.sampled_sup >= 1 / radius - tolerance
    return NumericCheck(
        name=f"obstruction {label}",
        passed=passed,
        details={"pair": str(pair), "radius": radius, "bound": result.bound, "sampled_sup": result.sampled_sup},
    )


def density_experiment(pair: PairClass) -> DensityResult:
    """Taylor truncations of 1/(R - z) on |z| = r for a Runge pair (Δ_r, Δ_R)."""
    if not _bounded_discs(pair):
        raise ValueError(f"density experiments need two bounded discs, got {pair}")
    rho, s = pair.inner.factors[0].outer.to_float(), pair.outer.factors[0].outer.to_float()

    def target(z: np.ndarray) -> np.ndarray:
        return 1 / (s - z)

    return density_decay(target, rho, s, _DENSITY_DEGREES)


def density_experiments(figure: HartogsFigure) -> list[tuple[str, DensityResult]]:
    """One experiment per bounded Runge disc pair of the figure."""
    return [(label, density_experiment(pair)) for label, pair in _one_dimensional_pairs(figure) if _is_disc_runge(pair)]


def density_check(label: str, pair: PairClass) -> NumericCheck:
    """Fitted decay rate must match r/R."""
    result = density_experiment(pair)
    passed = abs(result.fitted_ratio - result.expected_ratio) <= config.numeric.density_slack
    return NumericCheck(
        name=f"density {label}",
        passed=passed,
        details={
            "pair": str(pair),
            "fitted_ratio": result.fitted_ratio,
            "expected_ratio": result.expected_ratio,
        },
    )


def _bounded_discs(pair: PairClass) -> bool:
    inner, outer = pair.inner.factors[0], pair.outer.factors[0]
    return isinstance(inner, Disc) and isinstance(outer, Disc) and not outer.outer.infinite


def _is_disc_runge(pair: PairClass) -> bool:
    return pair.tag is PairTag.RUNGE and _bounded_discs(pair)


def numeric_checks(figure: HartogsFigure, nodes: int | None = None, seed: int | None = None) -> list[NumericCheck]:
    """Quadrature check plus one obstruction or density check per proper factor pair where applicable."""
    checks = [quadrature_check(figure, nodes, seed)]
    for label, pair in _one_dimensional_pairs(figure):
        if pair.tag in (PairTag.SPLIT, PairTag.QUASI_SPLIT):
            checks.append(obstruction_check(label, pair))
        elif _is_disc_runge(pair):
            checks.append(density_check(label, pair))

    for check in itertools.filterfalse(lambda c: c.passed, checks):
        logger.warning("numeric_check_failed", figure=figure.dsl(), check=check.name, details=check.details)
    return checks
