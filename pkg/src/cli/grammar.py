"""
Parser for the domain description language.

    hartogs(X=disc(1), X0=annulus(1/2,1), Y=disc(1), Y0=disc(1/2))
    (annulus(1/2,3/4), disc(1))
    annulus(1/2,1) x disc(1)
"""

from __future__ import annotations

import math
from fractions import Fraction

import lark
from lark.exceptions import UnexpectedInput, VisitError

from src.cli.ast import (
    AnnulusExpr,
    DiscExpr,
    DomainExpr,
    Expr,
    FactorExpr,
    HartogsExpr,
    Number,
    PairExpr,
    ProductExpr,
)
from src.core.errors import DslSemanticError, DslSyntaxError

GRAMMAR = r"""
start: hartogs | pair | domain

hartogs: "hartogs" "(" "X" "=" domain "," "X0" "=" domain "," "Y" "=" domain "," "Y0" "=" domain ")"
pair: "(" domain "," domain ")"

domain: factor (PRODUCT factor)*
?factor: disc | annulus
disc: "disc" "(" num ")"
annulus: "annulus" "(" num "," num ")"

num: FRACTION -> fraction
   | DECIMAL  -> decimal
   | INT      -> integer
   | "inf"    -> infinity

PRODUCT: "x" | "×"
FRACTION: INT "/" INT
DECIMAL: INT "." INT | "." INT

%import common.INT
%import common.WS
%ignore WS
""".strip()


class ConstructAST(lark.Transformer):
    def start(self, args: list[Expr]) -> Expr:
        return args[0]

    def hartogs(self, args: list[DomainExpr]) -> HartogsExpr:
        x, x0, y, y0 = args
        return HartogsExpr(x, x0, y, y0)

    def pair(self, args: list[DomainExpr]) -> PairExpr:
        inner, outer = args
        return PairExpr(inner, outer)

    def domain(self, args: list[FactorExpr | lark.Token]) -> DomainExpr:
        factors = tuple(a for a in args if not isinstance(a, lark.Token))
        if len(factors) == 1:
            return factors[0]
        return ProductExpr(factors)

    def disc(self, args: list[Number]) -> DiscExpr:
        return DiscExpr(args[0])

    def annulus(self, args: list[Number]) -> AnnulusExpr:
        inner, outer = args
        return AnnulusExpr(inner, outer)

    def fraction(self, args: list[lark.Token]) -> Number:
        numerator, denominator = str(args[0]).split("/")
        if int(denominator) == 0:
            raise DslSemanticError(f"zero denominator in radius {args[0]}")
        return Fraction(int(numerator), int(denominator))

    def decimal(self, args: list[lark.Token]) -> Number:
        return Fraction(str(args[0]))

    def integer(self, args: list[lark.Token]) -> Number:
        return Fraction(int(args[0]))

    def infinity(self, _args: list[lark.Token]) -> Number:
        return math.inf


_parser = lark.Lark(GRAMMAR, parser="lalr")


def _position(error: UnexpectedInput, name: str) -> int:
    # lark reports -1 or "?" when the input ends early
    value = getattr(error, name, None)
    return value if isinstance(value, int) and value >= 1 else 1


def parse(text: str) -> Expr:
    """
    Parse DSL text.

    Raises:
        DslSyntaxError: the text does not match the grammar; carries line and column.
    """
    try:
        tree = _parser.parse(text)
    except UnexpectedInput as e:
        raise DslSyntaxError(f"cannot parse {text.strip()!r}", _position(e, "line"), _position(e, "column")) from e
    try:
        return ConstructAST().transform(tree)
    except VisitError as e:
        raise e.orig_exc from e
