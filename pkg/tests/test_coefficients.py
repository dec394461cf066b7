"""Tests for the Laurent coefficients c_j, d_j and the C1/C2 combinations."""

import math
from fractions import Fraction

import pytest

from zeta_discrete_moments.errors import InvalidArgumentError, OutOfRangeError
from zeta_discrete_moments.moments import (
    C1,
    C2,
    BranchPolicy,
    c_coefficients,
    d_coefficients,
)
from zeta_discrete_moments.precision import mp_context
from zeta_discrete_moments.series import ExactPoly, RealRing
from zeta_discrete_moments.stieltjes import load_bundled


def _sign(n):
    return -1 if n % 2 else 1


class TestLeadingCoefficients:
    """Closed forms of c_0 and d_0."""

    @pytest.mark.unit
    @pytest.mark.parametrize("mu", range(1, 6))
    def test_c0(self, mu):
        for k in range(6):
            c0 = c_coefficients(mu, k, mu + k + 3)[0]
            assert c0 == _sign(mu + k + 1) * math.factorial(mu) * math.factorial(k)

    @pytest.mark.unit
    @pytest.mark.parametrize("nu", range(1, 6))
    def test_d0(self, nu):
        for k in range(6):
            d0 = d_coefficients(nu, k, nu + k + 2)[0]
            assert d0 == _sign(nu + k) * math.factorial(nu) * math.factorial(k)

    @pytest.mark.unit
    def test_small_cases(self):
        assert c_coefficients(1, 1, 5)[0] == -1
        assert d_coefficients(1, 0, 3)[0] == -1

    @pytest.mark.unit
    def test_d11_equals_c10(self):
        """Test that zeta'(s)^2/s gives the same coefficients both ways."""
        c = c_coefficients(1, 0, 7)
        d = d_coefficients(1, 1, 7)
        assert c.pole_order == d.pole_order == 4
        assert c.values == d.values

    @pytest.mark.unit
    def test_pole_orders(self):
        assert c_coefficients(2, 1, 6).pole_order == 6
        assert d_coefficients(2, 1, 6).pole_order == 5


class TestNumericOracle:
    """c_j checked against a Laurent fit of the function itself."""

    @pytest.mark.unit
    def test_c1_of_mu1_k0_matches_contour_fit(self):
        ctx = mp_context(128)
        nodes, radius = 64, ctx.mpf(1) / 2

        def f(s):
            return ctx.zeta(s, 1, 1) ** 2 / s

        # coefficient of (s-1)^(j-4) by the discrete Cauchy formula
        j = 1
        power = j - 4
        total = ctx.fsum(
            f(1 + radius * ctx.expjpi(ctx.mpf(2 * n) / nodes))
            * ctx.expjpi(-ctx.mpf(2 * n * power) / nodes)
            for n in range(nodes)
        )
        fitted = total / nodes / radius**power

        exact = c_coefficients(1, 0, 5)[j]
        value = exact.evaluate(load_bundled(5).as_mapping(ctx), ctx)
        assert abs(fitted - value) < 1e-12

    @pytest.mark.unit
    def test_numeric_ring_agrees_with_exact(self):
        ring = RealRing(256)
        gammas = load_bundled(12).as_mapping(ring.ctx)
        exact = c_coefficients(2, 2, 8)
        numeric = c_coefficients(2, 2, 8, ring)
        for a, b in zip(exact.values, numeric.values, strict=True):
            assert abs(a.evaluate(gammas, ring.ctx) - b) < ring.ctx.mpf(10) ** -45


class TestPreconditions:
    """Tests for rejected coefficient requests."""

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "call",
        [
            pytest.param(lambda: c_coefficients(0, 1, 5), id="mu_zero"),
            pytest.param(lambda: c_coefficients(1, -1, 5), id="negative_k"),
            pytest.param(lambda: c_coefficients(1, 1, 4), id="c_count_short"),
            pytest.param(lambda: d_coefficients(1, 1, 3), id="d_count_short"),
        ],
    )
    def test_invalid(self, call):
        with pytest.raises(InvalidArgumentError):
            call()

    @pytest.mark.unit
    def test_index_beyond_count(self):
        with pytest.raises(OutOfRangeError):
            c_coefficients(1, 0, 4)[4]


class TestC1C2:
    """The two-branch combinations C1 and C2."""

    @pytest.mark.unit
    def test_c1_top_power(self):
        c = c_coefficients(1, 1, 5)
        assert C1(1, 1, 4, 1, c) == Fraction(-1, 24)

    @pytest.mark.unit
    def test_c1_m3_k0(self):
        c = c_coefficients(1, 0, 5)
        expected = c[0].scale(Fraction(-1, 6)) + c[1].scale(Fraction(1, 2))
        assert C1(1, 1, 3, 0, c) == expected

    @pytest.mark.unit
    def test_c2_top_power(self):
        d = d_coefficients(1, 0, 5)
        assert C2(1, 1, 4, 0, d) == d[0].scale(Fraction(1, 2))

    @pytest.mark.unit
    def test_c2_m0_k1(self):
        d = d_coefficients(1, 1, 5)
        assert C2(1, 1, 0, 1, d) == d[0] - d[1] + d[2] - d[3]

    @pytest.mark.unit
    @pytest.mark.parametrize("mu", range(1, 5))
    @pytest.mark.parametrize("nu", range(1, 5))
    def test_top_power_keeps_only_first_term(self, mu, nu):
        top = mu + nu + 2
        count = mu + nu + 3
        for k in range(nu + 1):
            c = c_coefficients(mu, k, count)
            assert C1(mu, nu, top, k, c) == c[0].scale(
                Fraction(1, math.factorial(k + mu + 2))
            )
        for k in range(mu + 1):
            d = d_coefficients(nu, k, count)
            assert C2(mu, nu, top, k, d) == d[0].scale(
                Fraction(1, math.factorial(k + nu + 1))
            )

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "mu,nu",
        [
            pytest.param(1, 2, id="1_2"),
            pytest.param(2, 3, id="2_3"),
            pytest.param(3, 3, id="3_3"),
        ],
    )
    def test_branches_agree_at_seam(self, mu, nu):
        """Test that both branch formulas give one value where they meet."""
        count = mu + nu + 3
        for k in range(nu):
            c = c_coefficients(mu, k, count)
            m = nu - k - 1
            assert C1(mu, nu, m, k, c, BranchPolicy.FIRST) == C1(
                mu, nu, m, k, c, BranchPolicy.SECOND
            )
        for k in range(mu + 1):
            d = d_coefficients(nu, k, count)
            m = mu - k
            assert C2(mu, nu, m, k, d, BranchPolicy.FIRST) == C2(
                mu, nu, m, k, d, BranchPolicy.SECOND
            )

    @pytest.mark.unit
    @pytest.mark.parametrize("mu,nu", [pytest.param(1, 1, id="1_1"), pytest.param(2, 3, id="2_3")])
    def test_second_branch_undefined_at_top_k(self, mu, nu):
        """Test that forcing the second C1 branch at k = nu is rejected."""
        c = c_coefficients(mu, nu, mu + nu + 3)
        with pytest.raises(InvalidArgumentError, match="branch sum"):
            C1(mu, nu, 0, nu, c, BranchPolicy.SECOND)

    @pytest.mark.unit
    def test_index_ranges(self):
        c = c_coefficients(1, 0, 5)
        d = d_coefficients(1, 0, 5)
        with pytest.raises(OutOfRangeError):
            C1(1, 1, 5, 0, c)
        with pytest.raises(OutOfRangeError):
            C1(1, 1, 2, 2, c)
        with pytest.raises(OutOfRangeError):
            C2(1, 1, 2, 2, d)

    @pytest.mark.unit
    def test_mismatched_set(self):
        with pytest.raises(InvalidArgumentError):
            C1(1, 1, 2, 0, d_coefficients(1, 0, 5))
        with pytest.raises(InvalidArgumentError):
            C1(1, 1, 2, 1, c_coefficients(1, 0, 5))

    @pytest.mark.unit
    def test_exact_values_are_polynomials(self):
        assert isinstance(C1(1, 1, 0, 0, c_coefficients(1, 0, 5)), ExactPoly)
