"""
Shared utilities for structured logging.
"""

from src.core.utils.logging import log_operation, log_structured

__all__ = [
    "log_operation",
    "log_structured",
]
