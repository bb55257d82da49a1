"""
Hypothesis strategies and reference figures shared by the test suite.
"""

import math
from fractions import Fraction

from hypothesis import strategies as st

from src.cli.ast import AnnulusExpr, DiscExpr, HartogsExpr, PairExpr, ProductExpr
from src.domains import HartogsFigure, ReinhardtBoxDomain, annulus, disc
from src.lattice import NEG_INF, POS_INF, LatticeBox, Spectrum

# Reference figures with r1 = r2 = 1/2 and R = 3/4
H0_DSL = "hartogs(X=disc(1), X0=disc(1/2), Y=disc(1), Y0=disc(1/2))"
H1_DSL = "hartogs(X=disc(1), X0=annulus(1/2,1), Y=disc(1), Y0=disc(1/2))"
H2_DSL = "hartogs(X=disc(1), X0=annulus(1/2,1), Y=disc(1), Y0=annulus(1/2,1))"
H3_DSL = "hartogs(X=disc(1), X0=annulus(1/2,1), Y=disc(1), Y0=annulus(1/2,3/4))"

_FACTORS = {
    "disc": disc(1),
    "disc_half": disc("1/2"),
    "ring": annulus("1/2", 1),
    "ring_short": annulus("1/2", "3/4"),
}


def reference_figure(x: str, x0: str, y: str, y0: str) -> HartogsFigure:
    return HartogsFigure(
        X=ReinhardtBoxDomain.of(_FACTORS[x]),
        X0=ReinhardtBoxDomain.of(_FACTORS[x0]),
        Y=ReinhardtBoxDomain.of(_FACTORS[y]),
        Y0=ReinhardtBoxDomain.of(_FACTORS[y0]),
    )


# -- lattice ---------------------------------------------------------------


@st.composite
def lattice_boxes(draw: st.DrawFn, dimension: int, bound: int = 3) -> LatticeBox:
    lo, hi = [], []
    for _ in range(dimension):
        low = draw(st.one_of(st.just(NEG_INF), st.integers(-bound, bound)))
        start = -bound if low == NEG_INF else int(low)
        high = draw(st.one_of(st.just(POS_INF), st.integers(start, bound)))
        lo.append(low)
        hi.append(high)
    return LatticeBox(tuple(lo), tuple(hi))


@st.composite
def spectra(draw: st.DrawFn, dimension: int, max_boxes: int = 4) -> Spectrum:
    boxes = draw(st.lists(lattice_boxes(dimension), max_size=max_boxes))
    return Spectrum.of(dimension, boxes)


def points(dimension: int, bound: int = 5) -> st.SearchStrategy[tuple[int, ...]]:
    return st.tuples(*(st.integers(-bound, bound) for _ in range(dimension)))


# -- domains ---------------------------------------------------------------

RADII = [Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(3, 4), Fraction(1), Fraction(3, 2), Fraction(2)]

# pair kinds that a figure's factor pair can take
RUNGE_DISCS = "runge_discs"
RUNGE_ANNULI = "runge_annuli"
SPLIT = "split"
QUASI_SPLIT = "quasi_split"


@st.composite
def increasing_radii(draw: st.DrawFn) -> tuple[Fraction, Fraction, Fraction]:
    a, b, c = sorted(draw(st.lists(st.sampled_from(RADII), min_size=3, max_size=3, unique=True)))
    return a, b, c


@st.composite
def factor_pairs(draw: st.DrawFn, kind: str) -> tuple[ReinhardtBoxDomain, ReinhardtBoxDomain]:
    """A one-dimensional pair (Z0, Z) of the given kind."""
    a, b, c = draw(increasing_radii())
    inner, outer = {
        RUNGE_DISCS: (disc(a), disc(b)),
        RUNGE_ANNULI: (annulus(b, c), annulus(a, c)),
        SPLIT: (annulus(a, b), disc(b)),
        QUASI_SPLIT: (annulus(a, b), disc(c)),
    }[kind]
    return ReinhardtBoxDomain.of(inner), ReinhardtBoxDomain.of(outer)


PAIR_KINDS = [RUNGE_DISCS, RUNGE_ANNULI, SPLIT, QUASI_SPLIT]


@st.composite
def supported_figures(draw: st.DrawFn) -> HartogsFigure:
    """Planar figures whose pair classes some decision rule covers (no quasi-split ⊗ quasi-split)."""
    x_kind = draw(st.sampled_from(PAIR_KINDS))
    allowed = [k for k in PAIR_KINDS if not (x_kind == QUASI_SPLIT and k == QUASI_SPLIT)]
    y_kind = draw(st.sampled_from(allowed))
    x0, x = draw(factor_pairs(x_kind))
    y0, y = draw(factor_pairs(y_kind))
    return HartogsFigure(X=x, X0=x0, Y=y, Y0=y0)



RUNGE_KINDS = [RUNGE_DISCS, RUNGE_ANNULI]
SPLIT_KINDS = [SPLIT, QUASI_SPLIT]


@st.composite
def product_pairs(draw: st.DrawFn, kinds: list[str]) -> tuple[ReinhardtBoxDomain, ReinhardtBoxDomain]:
    """A pair (Z0, Z) of products, factor i drawn as a one-dimensional pair of kinds[i]."""
    pairs = [draw(factor_pairs(kind)) for kind in kinds]
    inner = ReinhardtBoxDomain.of(*(z0.factors[0] for z0, _ in pairs))
    outer = ReinhardtBoxDomain.of(*(z.factors[0] for _, z in pairs))
    return inner, outer


@st.composite
def supported_product_figures(draw: st.DrawFn) -> HartogsFigure:
    """Three-dimensional figures with a product pair (X0, X) and a planar pair (Y0, Y)."""
    family = draw(st.sampled_from([RUNGE_KINDS, SPLIT_KINDS]))
    x_kinds = draw(st.lists(st.sampled_from(family), min_size=2, max_size=2))
    allowed = [k for k in PAIR_KINDS if not (QUASI_SPLIT in x_kinds and k == QUASI_SPLIT)]
    y_kind = draw(st.sampled_from(allowed))
    x0, x = draw(product_pairs(x_kinds))
    y0, y = draw(factor_pairs(y_kind))
    return HartogsFigure(X=x, X0=x0, Y=y, Y0=y0)


def all_supported_figures() -> st.SearchStrategy[HartogsFigure]:
    return st.one_of(supported_figures(), supported_product_figures())


# -- DSL syntax trees --------------------------------------------------------

dsl_numbers = st.one_of(st.fractions(min_value=0, max_value=100, max_denominator=64), st.just(math.inf))
dsl_factors = st.one_of(st.builds(DiscExpr, dsl_numbers), st.builds(AnnulusExpr, dsl_numbers, dsl_numbers))
dsl_domains = st.one_of(
    dsl_factors,
    st.lists(dsl_factors, min_size=2, max_size=4).map(lambda factors: ProductExpr(tuple(factors))),
)
dsl_expressions = st.one_of(
    dsl_domains,
    st.builds(PairExpr, dsl_domains, dsl_domains),
    st.builds(HartogsExpr, dsl_domains, dsl_domains, dsl_domains, dsl_domains),
)
