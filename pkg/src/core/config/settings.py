"""
Main configuration class that composes all configs.
"""

import os

from dotenv import load_dotenv

from src.core.config.engine_config import EngineConfig
from src.core.config.geometry_config import GeometryConfig
from src.core.config.logging_config import LoggingConfig
from src.core.config.numeric_config import NumericConfig

# Load environment variables from a .env file
load_dotenv()


class Config:
    """Main configuration class."""

    def __init__(self) -> None:
        self.logging = LoggingConfig(
            level=os.getenv("LOG_LEVEL", "INFO").upper(),
            renderer=os.getenv("LOG_FORMAT", "console").lower(),
        )

        self.engine = EngineConfig(
            oracle_window=int(os.getenv("HARTOGS_ORACLE_WINDOW", "16")),
            max_dimension=int(os.getenv("HARTOGS_MAX_DIMENSION", "4")),
        )

        self.numeric = NumericConfig(
            quadrature_nodes=int(os.getenv("HARTOGS_QUADRATURE_NODES", "64")),
            coefficient_tolerance=float(os.getenv("HARTOGS_COEFFICIENT_TOLERANCE", "1e-10")),
            sup_tolerance=float(os.getenv("HARTOGS_SUP_TOLERANCE", "1e-6")),
            sup_samples=int(os.getenv("HARTOGS_SUP_SAMPLES", "4096")),
            density_slack=float(os.getenv("HARTOGS_DENSITY_SLACK", "0.05")),
            seed=int(os.getenv("HARTOGS_SEED", "0")),
        )

        self.geometry = GeometryConfig(
            hull_tolerance=float(os.getenv("HARTOGS_HULL_TOLERANCE", "1e-9")),
            log_digits=int(os.getenv("HARTOGS_LOG_DIGITS", "12")),
        )

    def validate(self) -> bool:
        """Validate configuration."""
        errors = []

        if self.logging.level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            errors.append(f"LOG_LEVEL must be a standard level name, got {self.logging.level}")

        if self.logging.renderer not in {"console", "json"}:
            errors.append(f"LOG_FORMAT must be 'console' or 'json', got {self.logging.renderer}")

        if self.engine.oracle_window < 1:
            errors.append("HARTOGS_ORACLE_WINDOW must be at least 1")

        if self.engine.max_dimension < 1:
            errors.append("HARTOGS_MAX_DIMENSION must be at least 1")

        nodes = self.numeric.quadrature_nodes
        if nodes < 4 or nodes & (nodes - 1):
            errors.append("HARTOGS_QUADRATURE_NODES must be a power of two and at least 4")

        if self.numeric.sup_samples < 16:
            errors.append("HARTOGS_SUP_SAMPLES must be at least 16")

        for name, value in (
            ("HARTOGS_COEFFICIENT_TOLERANCE", self.numeric.coefficient_tolerance),
            ("HARTOGS_SUP_TOLERANCE", self.numeric.sup_tolerance),
            ("HARTOGS_DENSITY_SLACK", self.numeric.density_slack),
            ("HARTOGS_HULL_TOLERANCE", self.geometry.hull_tolerance),
        ):
            if value <= 0:
                errors.append(f"{name} must be positive")

        if not 1 <= self.geometry.log_digits <= 17:
            errors.append("HARTOGS_LOG_DIGITS must be between 1 and 17")

        if errors:
            raise ValueError(f"Configuration errors: {', '.join(errors)}")

        return True


# Global config instance
config = Config()
