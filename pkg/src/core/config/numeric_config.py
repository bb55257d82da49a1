"""
Numerical harness configuration.
"""

from dataclasses import dataclass


@dataclass
class NumericConfig:
    """Quadrature and approximation tolerances."""

    quadrature_nodes: int = 64
    coefficient_tolerance: float = 1e-10
    sup_tolerance: float = 1e-6
    sup_samples: int = 4096
    density_slack: float = 0.05
    seed: int = 0
