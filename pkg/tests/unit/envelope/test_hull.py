import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import UnsupportedShapeError
from src.domains import HartogsFigure, ReinhardtBoxDomain, annulus, disc
from src.envelope import LogBox, LogRegion, log_convex_hull, log_image
from tests.strategies import supported_figures

LOG_HALF = math.log(0.5)


class TestLogBox:
    """Log images of elementary domains."""

    def test_disc_reaches_minus_infinity(self):
        box = LogBox.from_domain(ReinhardtBoxDomain.of(annulus("1/2", 1), disc(1)))
        assert box.lo == (pytest.approx(LOG_HALF), -math.inf)
        assert box.hi == (0.0, 0.0)
        assert box.vertices() == [(pytest.approx(LOG_HALF), 0.0), (0.0, 0.0)]
        assert box.directions() == [(0.0, -1.0)]

    def test_unbounded_domains_are_unsupported(self):
        with pytest.raises(UnsupportedShapeError):
            LogBox.from_domain(ReinhardtBoxDomain.of(disc("inf")))

    def test_membership_is_strict(self):
        box = LogBox((-1.0,), (0.0,))
        assert box.contains((-0.5,))
        assert not box.contains((0.0,))


class TestLogImage:
    """Images of the reference figures."""

    def test_classical_figure(self, h1):
        region = log_image(h1)
        first, second = region.boxes
        assert first.lo == (pytest.approx(LOG_HALF), -math.inf)
        assert first.hi == (0.0, 0.0)
        assert second.lo == (-math.inf, -math.inf)
        assert second.hi == (0.0, pytest.approx(LOG_HALF))

    def test_punctured_bidisc(self, h2):
        first, second = log_image(h2).boxes
        assert first.lo == (pytest.approx(LOG_HALF), -math.inf)
        assert second.lo == (-math.inf, pytest.approx(LOG_HALF))

    def test_rejects_higher_dimensions(self):
        figure = HartogsFigure(
            X=ReinhardtBoxDomain.of(disc(1), disc(1)),
            X0=ReinhardtBoxDomain.of(annulus("1/2", 1), annulus("1/2", 1)),
            Y=ReinhardtBoxDomain.of(disc(1)),
            Y0=ReinhardtBoxDomain.of(disc("1/2")),
        )
        with pytest.raises(UnsupportedShapeError):
            log_image(figure)


class TestLogConvexHull:
    """Facet presentations of planar hulls."""

    def test_classical_figure_hull_is_the_quadrant(self, h1):
        hull = log_convex_hull(log_image(h1))
        assert hull.is_box()
        assert hull.bounds() == ((-math.inf, pytest.approx(0.0)), (-math.inf, pytest.approx(0.0)))

    def test_punctured_bidisc_hull_is_the_quadrant(self, h2):
        hull = log_convex_hull(log_image(h2))
        assert hull.is_box()
        assert hull.contains((LOG_HALF, LOG_HALF), strict=True)

    def test_runge_figure_hull_is_cut_by_a_diagonal(self, h0):
        hull = log_convex_hull(log_image(h0))
        assert not hull.is_box()
        diagonal = [h for h in hull.halfplanes if not h.is_axis_aligned(hull.tolerance)]
        assert len(diagonal) == 1
        normal, offset = diagonal[0].normal, diagonal[0].offset
        assert normal == (pytest.approx(math.sqrt(0.5)), pytest.approx(math.sqrt(0.5)))
        assert offset == pytest.approx(LOG_HALF * math.sqrt(0.5))
        assert not hull.contains((-0.1, -0.1))
        assert hull.contains((LOG_HALF, LOG_HALF), strict=True)

    def test_single_box_is_its_own_hull(self):
        region = LogRegion((LogBox((-1.0, -2.0), (0.0, 1.0)),))
        hull = log_convex_hull(region)
        assert hull.is_box()
        assert hull.bounds() == ((pytest.approx(-1.0), pytest.approx(0.0)), (pytest.approx(-2.0), pytest.approx(1.0)))

    def test_rejects_non_planar_regions(self):
        region = LogRegion((LogBox((-1.0,), (0.0,)),))
        with pytest.raises(UnsupportedShapeError):
            log_convex_hull(region)


@pytest.mark.property_based
class TestHullProperties:
    """Hull laws over generated figures."""

    @given(figure=supported_figures())
    @settings(max_examples=40, deadline=None)
    def test_hull_is_idempotent(self, figure):
        hull = log_convex_hull(log_image(figure))
        assert log_convex_hull(hull).halfplanes == hull.halfplanes

    @given(figure=supported_figures())
    @settings(max_examples=40, deadline=None)
    def test_hull_contains_the_box_vertices(self, figure):
        region = log_image(figure)
        hull = log_convex_hull(region)
        for box in region.boxes:
            for vertex in box.vertices():
                assert hull.contains(vertex)

    @given(
        figure=supported_figures(),
        fractions=st.lists(st.floats(0.01, 0.99), min_size=2, max_size=2),
        depths=st.lists(st.floats(0.01, 50.0), min_size=2, max_size=2),
        which=st.integers(0, 1),
    )
    @settings(max_examples=200, deadline=None)
    def test_hull_contains_interior_points_of_the_image(self, figure, fractions, depths, which):
        region = log_image(figure)
        box = region.boxes[which]
        point = tuple(
            hi - depth if lo == -math.inf else lo + t * (hi - lo)
            for lo, hi, t, depth in zip(box.lo, box.hi, fractions, depths, strict=True)
        )
        assert region.contains(point)
        assert log_convex_hull(region).contains(point, strict=True)
