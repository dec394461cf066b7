"""Tests for the bundled and computed Stieltjes constants."""

import pytest

from zeta_discrete_moments.errors import InvalidArgumentError, OutOfRangeError
from zeta_discrete_moments.models import TableSource
from zeta_discrete_moments.precision import mp_context
from zeta_discrete_moments.stieltjes import (
    bundled_limit,
    compute_gamma,
    compute_table,
    cross_check,
    load_bundled,
)

GAMMA_0 = "0.57721566490153286060651209008240243104215933593992"
GAMMA_1 = "-0.072815845483676724860586375874901319137736338334337"


class TestBundle:
    """Tests for the shipped reference table."""

    @pytest.mark.unit
    def test_first_constants(self):
        ctx = mp_context(160)
        table = load_bundled(1)
        assert table.source is TableSource.BUNDLED
        assert abs(table.value(0, ctx) - ctx.mpf(GAMMA_0)) < ctx.mpf(10) ** -45
        assert abs(table.value(1, ctx) - ctx.mpf(GAMMA_1)) < ctx.mpf(10) ** -45

    @pytest.mark.unit
    def test_table_extent(self):
        table = load_bundled(10)
        assert table.max_index == 10
        assert bundled_limit() >= 30
        assert table.precision_bits >= 240

    @pytest.mark.unit
    def test_as_mapping(self):
        ctx = mp_context(128)
        mapping = load_bundled(3).as_mapping(ctx)
        assert sorted(mapping) == [0, 1, 2, 3]
        assert mapping[0] == load_bundled(0).value(0, ctx)

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "call",
        [
            pytest.param(lambda: load_bundled(bundled_limit() + 1), id="beyond_bundle"),
            pytest.param(lambda: load_bundled(3).get(4), id="beyond_table"),
        ],
    )
    def test_out_of_range(self, call):
        with pytest.raises(OutOfRangeError):
            call()

    @pytest.mark.unit
    def test_negative_index(self):
        with pytest.raises(InvalidArgumentError):
            load_bundled(-1)


class TestComputation:
    """Tests for the Euler-Maclaurin computation."""

    @pytest.mark.unit
    def test_gamma_0_is_euler_constant(self):
        ctx = mp_context(128)
        assert abs(compute_gamma(0, 128) - ctx.euler) < ctx.mpf(2) ** -120

    @pytest.mark.unit
    def test_gamma_0_at_minimum_precision(self):
        ctx = mp_context(64)
        value = compute_gamma(0, 64)
        assert abs(value - ctx.mpf("0.57721566490153286061")) < ctx.mpf(2) ** -58

    @pytest.mark.unit
    @pytest.mark.parametrize("n", [0, 3, 6])
    def test_more_precision_agrees(self, n):
        """Test that doubling the precision moves gamma_n by less than 2^-(p-8)."""
        ctx = mp_context(256)
        coarse = ctx.convert(compute_gamma(n, 128))
        fine = compute_gamma(n, 256)
        assert abs(coarse - fine) < ctx.ldexp(max(1, abs(fine)), -120)

    @pytest.mark.unit
    @pytest.mark.parametrize("n", [1, 2, 5, 8])
    def test_matches_mpmath(self, n):
        """Test agreement with mpmath's own Stieltjes constants."""
        ctx = mp_context(128)
        assert abs(compute_gamma(n, 128) - ctx.stieltjes(n)) < ctx.mpf(10) ** -30

    @pytest.mark.unit
    def test_compute_table(self):
        table = compute_table(3, 96)
        assert table.source is TableSource.COMPUTED
        ctx = mp_context(96)
        for n in range(4):
            assert abs(table.value(n, ctx) - load_bundled(3).value(n, ctx)) < 1e-25

    @pytest.mark.unit
    def test_rejects_low_precision(self):
        with pytest.raises(InvalidArgumentError):
            compute_gamma(0, 32)

    @pytest.mark.integration
    def test_cross_check_first_eleven(self):
        """Test that the bundle agrees with recomputation at 256 bits to 1e-30."""
        report = cross_check(max_index=10, precision_bits=256, tolerance=1e-30)
        assert report.passed, str(report)
        assert len(report.entries) == 11
        assert report.max_abs_diff < 1e-30
