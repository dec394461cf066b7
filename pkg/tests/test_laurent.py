"""Tests for truncated Laurent series about s = 1."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zeta_discrete_moments.errors import (
    InvalidArgumentError,
    RingMismatchError,
    SeriesDivisionByZeroError,
    UnsupportedOperationError,
)
from zeta_discrete_moments.series import (
    EXACT,
    ExactPoly,
    LaurentSeries,
    ComplexRing,
    RealRing,
    differentiate,
    inv_s_series,
    multiply,
    reciprocal,
    zeta_series,
)
from zeta_discrete_moments.stieltjes import load_bundled


def _exact(pole, *coeffs):
    values = [
        ExactPoly.parse(c) if isinstance(c, str) else ExactPoly.constant(c)
        for c in coeffs
    ]
    return LaurentSeries.build(EXACT, pole, values)


def _same(a, b):
    return a.pole_order == b.pole_order and a.coeffs == b.coeffs


fractions = st.builds(Fraction, st.integers(-49, 49), st.integers(1, 20))
nonzero = st.builds(Fraction, st.integers(-49, 49).filter(bool), st.integers(1, 20))


def _series_with_pole(min_pole, lead=nonzero, rest=fractions):
    return st.builds(
        lambda pole, lead, rest: LaurentSeries.build(
            EXACT, pole, [ExactPoly.constant(q) for q in [lead, *rest]]
        ),
        st.integers(min_value=min_pole, max_value=4),
        lead,
        st.lists(rest, min_size=3, max_size=6),
    )


exact_series = _series_with_pole(-1)
# a pole keeps the derivative's leading coefficient nonzero
polar_series = _series_with_pole(1)

# small coefficients keep the rounding of numeric products near one ulp
_small = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 4))
_small_lead = st.integers(-4, 4).filter(bool).map(Fraction)
small_series = _series_with_pole(-1, _small_lead, _small)
small_polar_series = _series_with_pole(1, _small_lead, _small)


def _numeric(series, ring):
    """The exact constant series carried into a numeric ring."""
    phase = ring.ctx.mpc(3, 4) / 5 if isinstance(ring, ComplexRing) else 1
    return series.map_coefficients(
        ring, lambda c: ring.from_fraction(c.constant_term) * phase
    )


def _tolerance(ring, *parts):
    """2^-(p-8) relative to the squared size of the combined coefficients."""
    scale = 1
    for series in parts:
        scale *= max(1, *(abs(c) for c in series.coeffs)) * len(series.coeffs)
    return ring.ctx.ldexp(scale**2, 8 - ring.precision_bits)


numeric_rings = st.sampled_from([RealRing(128), ComplexRing(128)])


class TestZetaSeries:
    """Tests for the expansion of zeta about its pole."""

    @pytest.mark.unit
    def test_leading_terms(self):
        series = zeta_series(4)
        assert series.pole_order == 1
        assert series.coefficient(-1) == 1
        assert series.coefficient(0) == ExactPoly.parse("g0")
        assert series.coefficient(1) == ExactPoly.parse("-g1")
        assert series.coefficient(2) == ExactPoly.parse("1/2*g2")
        assert series.coefficient(3) == ExactPoly.parse("-1/6*g3")

    @pytest.mark.unit
    def test_coefficient_below_leading_is_zero(self):
        assert zeta_series(2).coefficient(-5).is_zero

    @pytest.mark.unit
    def test_coefficient_beyond_truncation_raises(self):
        with pytest.raises(InvalidArgumentError, match="truncation"):
            zeta_series(2).coefficient(2)

    @pytest.mark.unit
    def test_numeric_ring_matches_exact(self):
        ring = RealRing(128)
        gammas = load_bundled(6).as_mapping(ring.ctx)
        exact = zeta_series(6)
        numeric = zeta_series(6, ring)
        mapped = exact.map_coefficients(ring, lambda c: c.evaluate(gammas, ring.ctx))
        for a, b in zip(numeric.coeffs, mapped.coeffs, strict=True):
            assert abs(a - b) < ring.ctx.mpf(10) ** -35

    @pytest.mark.unit
    def test_inv_s(self):
        assert inv_s_series(3).coeffs == tuple(
            ExactPoly.constant(c) for c in (1, -1, 1, -1)
        )


class TestArithmetic:
    """Tests for products, reciprocals and derivatives."""

    @pytest.mark.unit
    def test_reciprocal_of_zeta(self):
        inverse = reciprocal(zeta_series(3))
        assert inverse.pole_order == -1
        assert inverse.coefficient(1) == 1
        assert inverse.coefficient(2) == ExactPoly.parse("-g0")
        assert inverse.coefficient(3) == ExactPoly.parse("g0^2 + g1")

    @pytest.mark.unit
    @given(exact_series)
    def test_reciprocal_round_trip(self, series):
        product = multiply(series, reciprocal(series))
        assert product.pole_order == 0
        assert product.coeffs[0] == 1
        assert all(c.is_zero for c in product.coeffs[1:])

    @pytest.mark.unit
    @given(polar_series, polar_series)
    def test_leibniz_rule(self, f, g):
        left = differentiate(multiply(f, g))
        right = multiply(differentiate(f), g) + multiply(f, differentiate(g))
        for power in range(-left.pole_order, left.trunc_order - left.pole_order + 1):
            assert left.coefficient(power) == right.coefficient(power)

    @pytest.mark.unit
    @given(small_series, numeric_rings)
    def test_numeric_reciprocal_round_trip(self, series, ring):
        numeric = _numeric(series, ring)
        inverse = reciprocal(numeric)
        product = multiply(numeric, inverse)
        tolerance = _tolerance(ring, numeric, inverse)
        assert product.pole_order == 0
        assert abs(product.coeffs[0] - 1) <= tolerance
        assert all(abs(c) <= tolerance for c in product.coeffs[1:])

    @pytest.mark.unit
    @given(small_polar_series, small_polar_series, numeric_rings)
    def test_numeric_leibniz_rule(self, f, g, ring):
        f, g = _numeric(f, ring), _numeric(g, ring)
        left = differentiate(multiply(f, g))
        right = multiply(differentiate(f), g) + multiply(f, differentiate(g))
        tolerance = _tolerance(ring, f, g)
        for power in range(-left.pole_order, left.trunc_order - left.pole_order + 1):
            assert abs(left.coefficient(power) - right.coefficient(power)) <= tolerance

    @pytest.mark.unit
    def test_derivative_of_pole(self):
        series = differentiate(_exact(1, 1, 0, 0), 2)
        assert series.pole_order == 3
        assert series.leading == 2

    @pytest.mark.unit
    def test_differentiate_raises_pole_order(self):
        assert differentiate(zeta_series(5), 3).pole_order == 4

    @pytest.mark.unit
    def test_add_sub_scale(self):
        a = _exact(1, 1, 2, 3)
        b = _exact(0, 5, 7)
        total = a + b
        assert total.pole_order == 1
        assert total.coeffs == tuple(ExactPoly.constant(c) for c in (1, 7, 10))
        assert _same((total - b), _exact(1, 1, 2, 3))
        assert a.scale(Fraction(1, 2)).leading == Fraction(1, 2)

    @pytest.mark.unit
    def test_exact_leading_zeros_are_stripped(self):
        series = _exact(2, 0, 0, 3, 4)
        assert series.pole_order == 0
        assert series.leading == 3


class TestErrors:
    """Tests for rejected operations."""

    @pytest.mark.unit
    def test_ring_mismatch(self):
        with pytest.raises(RingMismatchError):
            multiply(zeta_series(3), zeta_series(3, RealRing(128)))

    @pytest.mark.unit
    def test_wrong_element_type(self):
        with pytest.raises(RingMismatchError):
            LaurentSeries.build(EXACT, 0, [1])

    @pytest.mark.unit
    def test_reciprocal_of_zero(self):
        with pytest.raises(SeriesDivisionByZeroError):
            reciprocal(_exact(0, 0, 0))

    @pytest.mark.unit
    def test_symbolic_leading_coefficient_not_invertible(self):
        with pytest.raises(UnsupportedOperationError):
            reciprocal(_exact(0, "g0", 1))

    @pytest.mark.unit
    def test_truncate_bounds(self):
        with pytest.raises(InvalidArgumentError):
            zeta_series(3).truncate(9)
        assert zeta_series(3).truncate(1).trunc_order == 1
