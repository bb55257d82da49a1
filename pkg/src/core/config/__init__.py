"""
Settings read from the environment, grouped by concern.

Import the ``config`` singleton; the dataclasses are exported for tests and
for callers that want to build a configuration by hand.
"""

from src.core.config.engine_config import EngineConfig
from src.core.config.geometry_config import GeometryConfig
from src.core.config.logging_config import LoggingConfig
from src.core.config.numeric_config import NumericConfig
from src.core.config.settings import Config, config

__all__ = [
    "Config",
    "EngineConfig",
    "GeometryConfig",
    "LoggingConfig",
    "NumericConfig",
    "config",
]
