import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import DomainValidationError, UnsupportedShapeError
from src.domains import (
    LaurentModel,
    ReinhardtBoxDomain,
    annulus,
    contains,
    disc,
    hartogs_cover,
    natural_domain,
    spectrum_of,
)
from src.lattice import NEG_INF, POS_INF, LatticeBox, Spectrum
from tests.strategies import PAIR_KINDS, RADII, all_supported_figures, factor_pairs

N = (0, POS_INF)
Z = (NEG_INF, POS_INF)
NEG = (NEG_INF, -1)


class TestSpectrumOf:
    """Monomial exponents of elementary domains."""

    def test_disc_times_annulus(self):
        domain = ReinhardtBoxDomain.of(disc(1), annulus("1/2", 1))
        assert spectrum_of(domain) == Spectrum.from_intervals((N, Z))

    def test_radii_do_not_matter(self):
        assert spectrum_of(ReinhardtBoxDomain.of(disc("1/2"))) == spectrum_of(ReinhardtBoxDomain.of(disc(7)))


class TestHartogsCover:
    """Leray cover U1 = X0×Y, U2 = X×Y0."""

    def test_classical_figure(self, h1):
        u1, u2, u12 = hartogs_cover(h1)
        assert u1 == ReinhardtBoxDomain.of(annulus("1/2", 1), disc(1))
        assert u2 == ReinhardtBoxDomain.of(disc(1), disc("1/2"))
        assert u12 == ReinhardtBoxDomain.of(annulus("1/2", 1), disc("1/2"))

    def test_runge_figure(self, h0):
        *_, u12 = hartogs_cover(h0)
        assert u12 == ReinhardtBoxDomain.of(disc("1/2"), disc("1/2"))

    def test_punctured_bidisc(self, h2):
        *_, u12 = hartogs_cover(h2)
        assert u12 == ReinhardtBoxDomain.of(annulus("1/2", 1), annulus("1/2", 1))


class TestNaturalDomain:
    """Largest convergence domains of single-box spectra."""

    def test_negative_exponents_extend_to_infinity(self):
        base = ReinhardtBoxDomain.of(annulus("1/2", 1), disc("1/2"))
        box = LatticeBox.from_intervals((NEG, N))
        assert natural_domain(box, base) == ReinhardtBoxDomain.of(annulus("1/2", "inf"), disc("1/2"))

    def test_nonnegative_exponents_fill_the_disc(self):
        base = ReinhardtBoxDomain.of(annulus("1/2", "3/4"))
        assert natural_domain(LatticeBox.from_intervals((N,)), base) == ReinhardtBoxDomain.of(disc("3/4"))

    def test_two_sided_exponents_keep_the_annulus(self):
        base = ReinhardtBoxDomain.of(annulus("1/2", 1))
        assert natural_domain(LatticeBox.from_intervals((Z,)), base) == base

    def test_negative_exponents_on_a_disc_are_rejected(self):
        with pytest.raises(DomainValidationError):
            natural_domain(LatticeBox.from_intervals((NEG,)), ReinhardtBoxDomain.of(disc(1)))

    def test_multi_box_spectra_are_unsupported(self):
        s = Spectrum.from_intervals(((NEG_INF, -2),), ((2, POS_INF),))
        with pytest.raises(UnsupportedShapeError):
            natural_domain(s, ReinhardtBoxDomain.of(annulus("1/2", 1)))


class TestLaurentModel:
    """Spectra paired with convergence domains."""

    def test_natural_attaches_convergence(self):
        base = ReinhardtBoxDomain.of(annulus("1/2", 1))
        model = LaurentModel.natural(Spectrum.from_intervals((NEG,)), base)
        assert model.convergence == ReinhardtBoxDomain.of(annulus("1/2", "inf"))
        assert str(model) == "{k ∈ [-inf,-1]} on A(1/2,inf)"

    def test_tensor_multiplies_spectra_and_domains(self):
        q = LaurentModel.natural(Spectrum.from_intervals((NEG,)), ReinhardtBoxDomain.of(annulus("1/2", 1)))
        o = LaurentModel.of_domain(ReinhardtBoxDomain.of(disc("1/2")))
        model = q.tensor(o)
        assert model.spectrum == Spectrum.from_intervals((NEG, N))
        assert model.convergence == ReinhardtBoxDomain.of(annulus("1/2", "inf"), disc("1/2"))

    def test_transpose(self):
        model = LaurentModel.of_domain(ReinhardtBoxDomain.of(annulus("1/2", 1), disc(1)))
        flipped = model.transpose((1, 0))
        assert flipped.spectrum == Spectrum.from_intervals((N, Z))
        assert flipped.convergence == ReinhardtBoxDomain.of(disc(1), annulus("1/2", 1))

    def test_rejects_unrealizable_models(self):
        with pytest.raises(ValueError):
            LaurentModel(spectrum=Spectrum.from_intervals((NEG,)), convergence=ReinhardtBoxDomain.of(disc(1)))

    def test_empty(self):
        assert LaurentModel.empty(ReinhardtBoxDomain.of(disc(1), disc(1))).is_empty()

    def test_pieces_give_each_box_its_own_domain(self):
        base = ReinhardtBoxDomain.of(annulus("1/2", 1))
        model = LaurentModel(spectrum=Spectrum.from_intervals(((NEG_INF, -2),), ((2, POS_INF),)), convergence=base)
        pieces = model.pieces()
        assert [d for _, d in pieces] == [
            ReinhardtBoxDomain.of(annulus("1/2", "inf")),
            ReinhardtBoxDomain.of(disc(1)),
        ]


@st.composite
def factors(draw):
    radii = sorted(draw(st.lists(st.sampled_from(RADII), min_size=2, max_size=2, unique=True)))
    if draw(st.booleans()):
        return disc(radii[1])
    return annulus(*radii)


def domains(dimension):
    return st.lists(factors(), min_size=dimension, max_size=dimension).map(lambda fs: ReinhardtBoxDomain.of(*fs))


@pytest.mark.property_based
class TestDomainProperties:
    """Spectra shrink as domains grow."""

    @given(figure=all_supported_figures())
    @settings(max_examples=150, deadline=None)
    def test_intersection_carries_both_covers(self, figure):
        u1, u2, u12 = hartogs_cover(figure)
        assert contains(u12, u1)
        assert contains(u12, u2)
        assert (spectrum_of(u1) | spectrum_of(u2)).is_subset(spectrum_of(u12))

    @given(a=domains(2), b=domains(2))
    @settings(max_examples=300, deadline=None)
    def test_spectrum_reverses_containment(self, a, b):
        if contains(a, b):
            assert spectrum_of(b).is_subset(spectrum_of(a))

    @given(a=domains(2), b=domains(2), c=domains(2))
    @settings(max_examples=300, deadline=None)
    def test_containment_is_transitive(self, a, b, c):
        if contains(a, b) and contains(b, c):
            assert contains(a, c)

    @given(kind=st.sampled_from(PAIR_KINDS), data=st.data())
    @settings(max_examples=100, deadline=None)
    def test_generated_pairs_are_proper_containments(self, kind, data):
        inner, outer = data.draw(factor_pairs(kind))
        assert contains(inner, outer)
        assert not contains(outer, inner)
        assert spectrum_of(outer).is_subset(spectrum_of(inner))
