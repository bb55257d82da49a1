"""
Log-space geometry configuration.
"""

from dataclasses import dataclass


@dataclass
class GeometryConfig:
    """Tolerances for floating log coordinates."""

    hull_tolerance: float = 1e-9
    log_digits: int = 12
