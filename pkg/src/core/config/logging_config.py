"""
Log level and renderer selection.
"""

from dataclasses import dataclass


@dataclass
class LoggingConfig:
    """structlog settings; output always goes to stderr."""

    level: str = "INFO"
    # console | json
    renderer: str = "console"
