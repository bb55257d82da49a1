"""
Evaluation context handed to the decision rules.
"""

from __future__ import annotations

from dataclasses import dataclass

from src.core.errors import UnsupportedClassificationError
from src.domains import HartogsFigure, ReinhardtBoxDomain, hartogs_cover
from src.pairs import PairClass, PairTag, classify_product_pair


@dataclass(frozen=True)
class CechContext:
    """
    A figure normalized so that a split pair, when there is one, comes first.

    swapped records whether (X0,X) and (Y0,Y) were exchanged; rules work in
    the normalized coordinates and the engine transposes results back.
    """

    figure: HartogsFigure
    p: int
    q: int
    x_pair: PairClass
    y_pair: PairClass
    swapped: bool
    u1: ReinhardtBoxDomain
    u2: ReinhardtBoxDomain
    u12: ReinhardtBoxDomain

    @classmethod
    def build(cls, figure: HartogsFigure, p: int, q: int) -> CechContext:
        x_pair = classify_product_pair(figure.X0, figure.X)
        y_pair = classify_product_pair(figure.Y0, figure.Y)
        unsupported = [pair for pair in (x_pair, y_pair) if not pair.is_supported]
        if unsupported:
            raise UnsupportedClassificationError(
                "; ".join(f"{pair}: {pair.reason}" for pair in unsupported),
                classifications=unsupported,
            )

        swapped = x_pair.tag is not PairTag.SPLIT and y_pair.tag is PairTag.SPLIT
        if swapped:
            figure = figure.swapped()
            x_pair, y_pair = y_pair, x_pair

        u1, u2, u12 = hartogs_cover(figure)
        return cls(figure=figure, p=p, q=q, x_pair=x_pair, y_pair=y_pair, swapped=swapped, u1=u1, u2=u2, u12=u12)

    @property
    def tags(self) -> tuple[PairTag, PairTag]:
        return (self.x_pair.tag, self.y_pair.tag)
