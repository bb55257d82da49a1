"""
Command-line front end.

    hartogs report "hartogs(X=disc(1), X0=annulus(1/2,1), Y=disc(1), Y0=annulus(1/2,1))" --json

Exit codes: 0 success, 1 internal error, 2 parse or semantic error,
3 unsupported input, 4 failed cross-check.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Callable
from typing import Any, TextIO

import structlog

from src.cech import cohomology, cohomology_table, verify_oracle
from src.cli.ast import format_expr
from src.cli.formatter import format_text
from src.cli.grammar import parse
from src.cli.semantic import build, build_figure, build_pair
from src.cli.serialization import (
    ReportDocument,
    certificate_json,
    cohomology_json,
    domain_json,
    log_region_json,
    numeric_json,
    oracle_json,
    pair_json,
    spectrum_json,
)
from src.core.config import config
from src.core.errors import (
    CrossCheckError,
    DslSemanticError,
    DslSyntaxError,
    HartogsError,
    UnsupportedClassificationError,
    UnsupportedShapeError,
)
from src.core.utils.logging import log_operation, log_structured
from src.domains import HartogsFigure, ReinhardtBoxDomain, hartogs_cover, spectrum_of
from src.envelope import log_image, stein_certificate
from src.numeric import density_experiments, density_table, numeric_checks
from src.pairs import PairTag, classify_product_pair

logger = structlog.get_logger()

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INVALID = 2
EXIT_UNSUPPORTED = 3
EXIT_CHECK_FAILED = 4

EXPECTED_ERRORS = (HartogsError, ValueError)

COMMANDS = ("classify-pair", "spectrum", "cohomology", "envelope", "verify", "report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hartogs",
        description="Cohomology, envelopes and numeric checks for generalized Hartogs figures.",
    )
    parser.add_argument("command", choices=COMMANDS, help="What to compute")
    parser.add_argument("expr", help="DSL expression, or '-' to read it from stdin")
    parser.add_argument("--p", type=int, default=0, help="Form degree for 'cohomology' (default 0)")
    parser.add_argument("--q", type=int, default=1, help="Cohomological degree for 'cohomology' (default 1)")
    parser.add_argument(
        "--window",
        type=int,
        default=config.engine.oracle_window,
        help="Exponent window for the graded oracle (default %(default)s)",
    )
    parser.add_argument("--json", action="store_true", help="Emit the JSON report instead of text")
    parser.add_argument(
        "--quadrature-nodes",
        type=int,
        default=config.numeric.quadrature_nodes,
        help="Nodes per torus axis, a power of two (default %(default)s)",
    )
    parser.add_argument("--seed", type=int, default=config.numeric.seed, help="Seed for random test polynomials")
    parser.add_argument(
        "--table",
        action="store_true",
        help="For 'verify' and 'report': print gnuplot tables of Runge density decay instead of the report",
    )
    return parser


def _cover_json(figure: HartogsFigure) -> dict[str, Any]:
    return {
        name: {"domain": domain_json(domain), "spectrum": spectrum_json(spectrum_of(domain))}
        for name, domain in zip(("U1", "U2", "U12"), hartogs_cover(figure), strict=True)
    }


def _pairs_json(figure: HartogsFigure) -> dict[str, Any]:
    return {
        "X": pair_json(classify_product_pair(figure.X0, figure.X)),
        "Y": pair_json(classify_product_pair(figure.Y0, figure.Y)),
    }


def _checks(figure: HartogsFigure, args: argparse.Namespace, document: ReportDocument) -> None:
    oracle = verify_oracle(figure, args.window)
    checks = numeric_checks(figure, args.quadrature_nodes, args.seed)
    document.sections["oracle"] = oracle_json(oracle)
    document.sections["numeric"] = [numeric_json(c) for c in checks]
    document.passed = oracle.agrees and all(c.passed for c in checks)


def _classify_pair(args: argparse.Namespace, document: ReportDocument) -> None:
    inner, outer = build_pair(parse(args.expr))
    pair = classify_product_pair(inner, outer)
    document.sections["pairs"] = {"pair": pair_json(pair)}
    if pair.tag is PairTag.UNSUPPORTED:
        raise UnsupportedClassificationError(pair.reason or "unsupported pair", classifications=[pair])


def _spectrum(args: argparse.Namespace, document: ReportDocument) -> None:
    built = build(parse(args.expr))
    if isinstance(built, HartogsFigure):
        document.sections["cover"] = _cover_json(built)
    elif isinstance(built, ReinhardtBoxDomain):
        document.sections["domain"] = domain_json(built)
        document.sections["spectrum"] = spectrum_json(spectrum_of(built))
    else:
        raise DslSemanticError("'spectrum' expects a domain or a hartogs figure")


def _cohomology(args: argparse.Namespace, document: ReportDocument) -> None:
    figure = build_figure(parse(args.expr))
    document.sections["cohomology"] = [cohomology_json(cohomology(figure, args.p, args.q))]


def _envelope(args: argparse.Namespace, document: ReportDocument) -> None:
    figure = build_figure(parse(args.expr))
    document.sections["log_image"] = log_region_json(log_image(figure))
    document.sections["envelope"] = certificate_json(stein_certificate(figure))


def _verify(args: argparse.Namespace, document: ReportDocument) -> None:
    figure = build_figure(parse(args.expr))
    _checks(figure, args, document)


def _report(args: argparse.Namespace, document: ReportDocument) -> None:
    figure = build_figure(parse(args.expr))
    document.sections["cover"] = _cover_json(figure)
    document.sections["pairs"] = _pairs_json(figure)
    document.sections["cohomology"] = [cohomology_json(r) for r in cohomology_table(figure)]
    try:
        document.sections["log_image"] = log_region_json(log_image(figure))
        document.sections["envelope"] = certificate_json(stein_certificate(figure))
    except UnsupportedShapeError as e:
        document.sections["envelope_error"] = str(e)
    _checks(figure, args, document)


HANDLERS: dict[str, Callable[[argparse.Namespace, ReportDocument], None]] = {
    "classify-pair": _classify_pair,
    "spectrum": _spectrum,
    "cohomology": _cohomology,
    "envelope": _envelope,
    "verify": _verify,
    "report": _report,
}


def _density_tables(args: argparse.Namespace) -> str:
    figure = build_figure(parse(args.expr))
    experiments = density_experiments(figure)
    if not experiments:
        return "# no bounded Runge disc pairs in this figure\n"
    return "\n\n".join(f"# pair {label}\n{density_table(result)}" for label, result in experiments)


def run(argv: list[str] | None = None, stdout: TextIO | None = None, stdin: TextIO | None = None) -> int:
    """Parse arguments, run one command and return its exit code."""
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    if args.expr == "-":
        args.expr = (stdin or sys.stdin).read().strip()

    document = ReportDocument(command=args.command, input=args.expr)
    exit_code = EXIT_OK
    try:
        with log_operation(f"command {args.command}", expected=EXPECTED_ERRORS, command=args.command) as op:
            # canonical echo: equivalent spellings give identical documents
            document.input = format_expr(parse(args.expr))
            HANDLERS[args.command](args, document)
            op["passed"] = document.passed
    except (DslSyntaxError, DslSemanticError, ValueError) as e:
        exit_code = EXIT_INVALID
        document.sections["error"] = str(e)
    except (UnsupportedClassificationError, UnsupportedShapeError) as e:
        exit_code = EXIT_UNSUPPORTED
        document.sections["error"] = str(e)
    except CrossCheckError as e:
        exit_code = EXIT_CHECK_FAILED
        document.sections["error"] = str(e)
    except Exception as e:
        exit_code = EXIT_INTERNAL
        document.sections["error"] = f"internal error: {e}"
    else:
        if not document.passed:
            exit_code = EXIT_CHECK_FAILED
        elif args.table and args.command in ("verify", "report"):
            stdout.write(_density_tables(args))
            return exit_code

    if exit_code != EXIT_OK:
        document.passed = False
        log_structured("command_failed", level="warning", command=args.command, exit_code=exit_code)
    stdout.write(document.to_json() if args.json else format_text(document))
    return exit_code
