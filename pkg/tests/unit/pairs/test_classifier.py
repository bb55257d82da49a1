from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import NotAContainmentError
from src.domains import ReinhardtBoxDomain, annulus, disc, spectrum_of
from src.lattice import NEG_INF, POS_INF, Spectrum, enumerate_window
from src.pairs import PairRule, PairTag, classify_pair, classify_product_pair
from tests.strategies import (
    PAIR_KINDS,
    QUASI_SPLIT,
    RUNGE_ANNULI,
    RUNGE_DISCS,
    SPLIT,
    SPLIT_KINDS,
    factor_pairs,
    product_pairs,
)

WINDOW = 16
SCALES = [Fraction(1, 3), Fraction(1, 2), Fraction(2), Fraction(5, 2), Fraction(7)]

N = (0, POS_INF)
Z = (NEG_INF, POS_INF)
NEG = (NEG_INF, -1)


def D(*factors):
    return ReinhardtBoxDomain.of(*factors)


class TestOneDimensionalPairs:
    """The decision table for discs and annuli."""

    def test_disc_in_disc_is_runge(self):
        pair = classify_pair(D(disc("1/2")), D(disc(1)))
        assert pair.tag is PairTag.RUNGE
        assert pair.witness_rule is PairRule.DISC_IN_DISC
        assert pair.complement is None

    def test_nested_annuli_are_runge(self):
        pair = classify_pair(D(annulus("1/2", 1)), D(annulus("1/4", 1)))
        assert pair.tag is PairTag.RUNGE
        assert pair.witness_rule is PairRule.NESTED_ANNULI

    def test_annulus_in_disc_with_equal_outer_radius_is_split(self):
        pair = classify_pair(D(annulus("1/2", 1)), D(disc(1)))
        assert pair.tag is PairTag.SPLIT
        assert pair.complement.spectrum == Spectrum.from_intervals((NEG,))
        assert pair.complement.convergence == D(annulus("1/2", "inf"))
        assert pair.closure_of_restriction.convergence == D(disc(1))

    def test_annulus_in_larger_disc_is_quasi_split(self):
        pair = classify_pair(D(annulus("1/2", "3/4")), D(disc(1)))
        assert pair.tag is PairTag.QUASI_SPLIT
        assert pair.intermediate == D(disc("3/4"))
        assert pair.complement.spectrum == Spectrum.from_intervals((NEG,))
        assert pair.complement.convergence == D(annulus("1/2", "inf"))
        assert pair.closure_of_restriction.spectrum == Spectrum.from_intervals((N,))
        assert pair.closure_of_restriction.convergence == D(disc("3/4"))

    def test_plane_minus_disc_in_plane_is_split(self):
        pair = classify_pair(D(annulus(1, "inf")), D(disc("inf")))
        assert pair.tag is PairTag.SPLIT

    def test_rejects_non_containment(self):
        with pytest.raises(NotAContainmentError):
            classify_pair(D(disc(1)), D(disc("1/2")))

    def test_rejects_equal_domains(self):
        with pytest.raises(NotAContainmentError):
            classify_pair(D(disc(1)), D(disc(1)))

    def test_rejects_products(self):
        with pytest.raises(ValueError):
            classify_pair(D(disc("1/2"), disc(1)), D(disc(1), disc(1)))

    def test_results_are_cached(self):
        first = classify_pair(D(disc("1/3")), D(disc(1)))
        assert classify_pair(D(disc("1/3")), D(disc(1))) is first


class TestProductPairs:
    """Products classified from their factor pairs."""

    def test_identical_factors_do_not_count(self):
        pair = classify_product_pair(D(annulus("1/2", 1), disc(1)), D(disc(1), disc(1)))
        assert pair.tag is PairTag.SPLIT
        assert [f.tag for f in pair.factors] == [PairTag.SPLIT, PairTag.EQUAL]
        assert pair.complement.spectrum == Spectrum.from_intervals((NEG, N))

    def test_all_runge(self):
        pair = classify_product_pair(D(disc("1/2"), disc("1/2")), D(disc(1), disc(1)))
        assert pair.tag is PairTag.RUNGE
        assert pair.witness_rule is PairRule.PRODUCT_RUNGE

    def test_split_complement_is_a_union_of_boxes(self):
        pair = classify_product_pair(
            D(annulus("1/2", 1), annulus("1/2", 1)),
            D(disc(1), disc(1)),
        )
        assert pair.tag is PairTag.SPLIT
        assert pair.complement.spectrum == Spectrum.from_intervals((NEG, Z), (Z, NEG))
        assert len(pair.complement.pieces()) == 2

    def test_split_with_quasi_split_is_quasi_split(self):
        pair = classify_product_pair(
            D(annulus("1/2", 1), annulus("1/2", "3/4")),
            D(disc(1), disc(1)),
        )
        assert pair.tag is PairTag.QUASI_SPLIT
        assert pair.intermediate == D(disc(1), disc("3/4"))

    def test_runge_mixed_with_split_is_unsupported(self):
        pair = classify_product_pair(D(annulus("1/2", 1), disc("1/2")), D(disc(1), disc(1)))
        assert pair.tag is PairTag.UNSUPPORTED
        assert not pair.is_supported
        assert pair.witness_rule is PairRule.PRODUCT_MIXED
        assert "runge" in pair.reason and "split" in pair.reason

    def test_one_dimensional_input_delegates(self):
        assert classify_product_pair(D(disc("1/2")), D(disc(1))) == classify_pair(D(disc("1/2")), D(disc(1)))


@pytest.mark.property_based
class TestClassifierProperties:
    """Generated pairs land in the expected class."""

    @given(pair=factor_pairs(RUNGE_DISCS))
    @settings(max_examples=30, deadline=None)
    def test_runge_discs(self, pair):
        assert classify_pair(*pair).tag is PairTag.RUNGE

    @given(pair=factor_pairs(RUNGE_ANNULI))
    @settings(max_examples=30, deadline=None)
    def test_runge_annuli(self, pair):
        assert classify_pair(*pair).tag is PairTag.RUNGE

    @given(pair=factor_pairs(SPLIT))
    @settings(max_examples=30, deadline=None)
    def test_split(self, pair):
        result = classify_pair(*pair)
        assert result.tag is PairTag.SPLIT
        assert result.complement.spectrum == Spectrum.from_intervals((NEG,))

    @given(pair=factor_pairs(QUASI_SPLIT))
    @settings(max_examples=30, deadline=None)
    def test_quasi_split_intermediate_sits_between(self, pair):
        inner, outer = pair
        result = classify_pair(inner, outer)
        assert result.tag is PairTag.QUASI_SPLIT
        assert classify_pair(inner, result.intermediate).tag is PairTag.SPLIT
        assert classify_pair(result.intermediate, outer).tag is PairTag.RUNGE

    @given(kind=st.sampled_from(PAIR_KINDS), data=st.data(), factor=st.sampled_from(SCALES))
    @settings(max_examples=100, deadline=None)
    def test_scaling_both_domains_keeps_the_class(self, kind, data, factor):
        inner, outer = data.draw(factor_pairs(kind))
        original = classify_pair(inner, outer)
        scaled = classify_pair(inner.scale(factor), outer.scale(factor))
        assert scaled.tag is original.tag
        assert scaled.witness_rule is original.witness_rule
        if original.complement is not None:
            assert scaled.complement.spectrum == original.complement.spectrum

    @given(pair=st.one_of(factor_pairs(SPLIT), factor_pairs(QUASI_SPLIT)))
    @settings(max_examples=50, deadline=None)
    def test_complement_and_closure_partition_the_window(self, pair):
        self._assert_partition(classify_pair(*pair))

    @given(kinds=st.lists(st.sampled_from(SPLIT_KINDS), min_size=2, max_size=2), data=st.data())
    @settings(max_examples=50, deadline=None)
    def test_product_complement_and_closure_partition_the_window(self, kinds, data):
        self._assert_partition(classify_product_pair(*data.draw(product_pairs(kinds))))

    @staticmethod
    def _assert_partition(result):
        complement = set(enumerate_window(result.complement.spectrum, WINDOW))
        closure = set(enumerate_window(result.closure_of_restriction.spectrum, WINDOW))
        assert complement
        assert not complement & closure
        assert complement | closure == set(enumerate_window(spectrum_of(result.inner), WINDOW))
