"""
Decision engine configuration.
"""

from dataclasses import dataclass


@dataclass
class EngineConfig:
    """Lattice and cohomology engine configuration."""

    oracle_window: int = 16
    max_dimension: int = 4
