"""
Domain description language and the ``hartogs`` command line.
"""

from src.cli.app import build_parser, run
from src.cli.grammar import parse
from src.cli.semantic import build, build_figure, build_pair
from src.cli.serialization import ReportDocument

__all__ = ["ReportDocument", "build", "build_figure", "build_pair", "build_parser", "parse", "run"]
