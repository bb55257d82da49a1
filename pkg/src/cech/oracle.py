"""
Brute-force graded oracle.

On a window of exponents, H^{0,1} of a Reinhardt figure splits by monomial:
z^α contributes iff it is holomorphic on U12 but on neither U1 nor U2. The
oracle tests exactly that, monomial by monomial, without the decision table.
"""

from __future__ import annotations

import itertools

import structlog

from src.cech.engine import cohomology
from src.cech.models import OracleCheck
from src.domains import HartogsFigure, hartogs_cover, spectrum_of
from src.lattice import enumerate_window

logger = structlog.get_logger()


def graded_reduced_spectrum(figure: HartogsFigure, window: int) -> list[tuple[int, ...]]:
    """Exponents α in [-window, window]^n with α ∈ S(U12) and α ∉ S(U1) ∪ S(U2), sorted."""
    if window < 1:
        raise ValueError("window must be at least 1")
    u1, u2, u12 = (spectrum_of(domain) for domain in hartogs_cover(figure))
    cube = itertools.product(range(-window, window + 1), repeat=figure.dimension)
    return [
        alpha
        for alpha in cube
        if u12.contains_point(alpha) and not u1.contains_point(alpha) and not u2.contains_point(alpha)
    ]


def verify_oracle(figure: HartogsFigure, window: int) -> OracleCheck:
    """Compare the engine's reduced H^{0,1} spectrum with the graded oracle on a window."""
    engine = set(enumerate_window(cohomology(figure, 0, 1).reduced.spectrum, window))
    oracle = set(graded_reduced_spectrum(figure, window))
    check = OracleCheck(
        window=window,
        engine_points=len(engine),
        oracle_points=len(oracle),
        only_in_engine=sorted(engine - oracle),
        only_in_oracle=sorted(oracle - engine),
    )
    if not check.agrees:
        logger.warning(
            "oracle_disagreement",
            figure=figure.dsl(),
            window=window,
            only_in_engine=len(check.only_in_engine),
            only_in_oracle=len(check.only_in_oracle),
        )
    return check
