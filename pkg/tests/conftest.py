"""
Global Pytest configuration.
"""

import os
import sys
from pathlib import Path
from typing import Any

import pytest

# 1. Ensure the repository root is importable as the `src` package parent
ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from src.domains import HartogsFigure  # noqa: E402
from tests.strategies import reference_figure  # noqa: E402


# 2. Helper for environment mocking
class Helpers:
    @staticmethod
    def mock_env(env_vars: dict[str, str]) -> Any:
        from unittest.mock import patch

        return patch.dict(os.environ, env_vars)


@pytest.fixture
def helpers() -> type[Helpers]:
    return Helpers


# 3. Pin configuration so a developer's .env cannot change test outcomes
@pytest.fixture(autouse=True)
def mock_settings():
    """Forces the test environment to use the documented defaults."""
    with Helpers.mock_env(
        {
            "LOG_LEVEL": "WARNING",
            "LOG_FORMAT": "console",
            "HARTOGS_ORACLE_WINDOW": "16",
            "HARTOGS_MAX_DIMENSION": "4",
            "HARTOGS_QUADRATURE_NODES": "64",
            "HARTOGS_SEED": "0",
        }
    ):
        yield


# 4. Reference figures (r1 = r2 = 1/2, R = 3/4)
@pytest.fixture
def h0() -> HartogsFigure:
    """Two Runge pairs."""
    return reference_figure("disc", "disc_half", "disc", "disc_half")


@pytest.fixture
def h1() -> HartogsFigure:
    """The classical Hartogs figure: split ⊗ Runge."""
    return reference_figure("disc", "ring", "disc", "disc_half")


@pytest.fixture
def h2() -> HartogsFigure:
    """Bidisc minus a closed polydisc: split ⊗ split."""
    return reference_figure("disc", "ring", "disc", "ring")


@pytest.fixture
def h3() -> HartogsFigure:
    """split ⊗ quasi-split."""
    return reference_figure("disc", "ring", "disc", "ring_short")
