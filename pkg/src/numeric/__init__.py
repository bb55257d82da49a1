"""
Numerical verification harness: torus quadrature, density decay and
residue obstructions.
"""

from src.numeric.approximation import (
    density_decay,
    density_table,
    least_squares_polynomial,
    obstruction_bound,
    taylor_coefficients,
)
from src.numeric.harness import (
    density_check,
    density_experiment,
    density_experiments,
    numeric_checks,
    obstruction_check,
    quadrature_check,
)
from src.numeric.models import (
    DensityResult,
    LaurentPolynomial,
    NumericCheck,
    ObstructionResult,
    TorusSpec,
)
from src.numeric.quadrature import coefficient_consistency, torus_coefficient, torus_coefficients

__all__ = [
    "DensityResult",
    "LaurentPolynomial",
    "NumericCheck",
    "ObstructionResult",
    "TorusSpec",
    "coefficient_consistency",
    "density_check",
    "density_decay",
    "density_experiment",
    "density_experiments",
    "density_table",
    "least_squares_polynomial",
    "numeric_checks",
    "obstruction_bound",
    "obstruction_check",
    "quadrature_check",
    "taylor_coefficients",
    "torus_coefficient",
    "torus_coefficients",
]
