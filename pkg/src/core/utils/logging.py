"""
Structured logging utilities.

Provides a context manager and a helper for structured operation logging
with timing, error tracking, and metadata.
"""

from __future__ import annotations

import time
from collections.abc import Iterator  # noqa: TCH003
from contextlib import contextmanager
from typing import Any

import structlog

logger = structlog.get_logger()


@contextmanager
def log_operation(
    operation: str,
    expected: tuple[type[BaseException], ...] = (),
    **context: Any,
) -> Iterator[dict[str, Any]]:
    """
    Context manager for structured operation logging.

    Logs operation start, completion, and errors with timing information.
    The yielded dict can be filled with result metadata that is attached
    to the completion event. Exceptions listed in expected are logged at
    warning level without a traceback.

    Example:
        with log_operation("report", expected=(HartogsError,), expr=text) as op:
            document = build_report(text)
            op["passed"] = document.passed
    """
    start_time = time.perf_counter()
    outcome: dict[str, Any] = {}
    logger.debug(f"starting {operation}", operation=operation, **context)

    try:
        yield outcome
    except expected as e:
        latency_ms = int((time.perf_counter() - start_time) * 1000)
        logger.warning(
            f"{operation} rejected after {latency_ms}ms",
            operation=operation,
            error=str(e),
            error_type=type(e).__name__,
            latency_ms=latency_ms,
            **context,
        )
        raise
    except Exception as e:
        latency_ms = int((time.perf_counter() - start_time) * 1000)
        logger.error(
            f"{operation} failed after {latency_ms}ms",
            operation=operation,
            error=str(e),
            latency_ms=latency_ms,
            exc_info=True,
            **context,
        )
        raise
    else:
        latency_ms = int((time.perf_counter() - start_time) * 1000)
        logger.info(
            f"{operation} completed in {latency_ms}ms",
            operation=operation,
            latency_ms=latency_ms,
            **context,
            **outcome,
        )


def log_structured(event: str, level: str = "info", **context: Any) -> None:
    """
    Lightweight structured logging helper.

    Args:
        event: Event/operation name.
        level: Logging level (debug|info|warning|error).
        **context: Arbitrary key/value metadata.
    """
    log_fn = getattr(logger, level, logger.info)
    log_fn(event, **context)
