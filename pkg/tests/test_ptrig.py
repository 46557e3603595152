"""Tests for the generalized trigonometric functions."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentrig.errors import DomainError, PoleError
from gentrig.ptrig import (
    PParam,
    arcsin_p,
    arctan_p,
    cos_p,
    d_cos_p,
    d_tan_p,
    log_cos_p,
    pi_p,
    sin_p,
    sin_ratio_deficit,
    tan_p,
)

P_SAMPLES = (1.25, 1.5, 3.0, 5.0, 10.0)
FRACTIONS = (0.05, 0.3, 0.6, 0.9, 0.99)


def closed_form_pi(p: float) -> float:
    return 2.0 * math.pi / (p * math.sin(math.pi / p))


class TestPParam:
    """Tests for exponent validation."""

    def test_conjugate(self):
        assert PParam(3.0).conjugate == pytest.approx(1.5)
        assert PParam(2).p == 2.0

    @pytest.mark.parametrize("bad", [1.0, 0.5, -2.0, math.inf, math.nan, True, "3"])
    def test_rejects_invalid(self, bad):
        with pytest.raises(DomainError):
            PParam(bad)

    def test_functions_reject_p_at_one(self):
        with pytest.raises(DomainError):
            sin_p(0.5, 1.0)


class TestPiP:
    """Tests for π_p."""

    def test_p_two_is_pi(self):
        assert pi_p(2.0).value == pytest.approx(math.pi, rel=1e-14)

    @pytest.mark.parametrize("p", (1.1, 1.5, 3.0, 4.0, 10.0, 50.0))
    def test_closed_form(self, p):
        result = pi_p(p)
        assert result.value == pytest.approx(closed_form_pi(p), rel=1e-13)
        assert result.err_est < 1e-11

    def test_p_four(self):
        assert pi_p(4.0).value == pytest.approx(2.221441469079183, rel=1e-13)

    def test_half_and_full(self):
        result = pi_p(3.0)
        assert result.value == 2.0 * result.half_pi_p


class TestPEqualsTwo:
    """At p = 2 the family reduces to the classical functions."""

    @pytest.mark.parametrize("x", (-2.5, -0.3, 0.0, 0.1, 0.7, 1.2, 1.5, 2.0, 3.0, 7.0))
    def test_sin_cos(self, x):
        assert sin_p(x, 2.0).value == pytest.approx(math.sin(x), abs=1e-13)
        assert cos_p(x, 2.0).value == pytest.approx(math.cos(x), abs=1e-13)

    @pytest.mark.parametrize("x", (-1.2, 0.2, 0.9, 1.4))
    def test_tan_and_arctan(self, x):
        assert tan_p(x, 2.0).value == pytest.approx(math.tan(x), rel=1e-12)
        assert arctan_p(x, 2.0).value == pytest.approx(math.atan(x), rel=1e-13)
        assert arctan_p(10 * x, 2.0).value == pytest.approx(math.atan(10 * x), rel=1e-13)

    def test_sin_of_pi_over_six(self):
        assert sin_p(math.pi / 6, 2.0).value == pytest.approx(0.5, rel=1e-13)

    def test_derivatives(self):
        assert d_cos_p(0.8, 2.0).value == pytest.approx(-math.sin(0.8), rel=1e-12)
        assert d_tan_p(0.8, 2.0).value == pytest.approx(1.0 + math.tan(0.8) ** 2, rel=1e-12)

    def test_log_cos(self):
        assert log_cos_p(1.0, 2.0).value == pytest.approx(math.log(math.cos(1.0)), rel=1e-12)


class TestAgainstOracle:
    """Comparison with mpmath hypergeometric references."""

    @pytest.mark.parametrize("p", P_SAMPLES)
    @pytest.mark.parametrize("u", FRACTIONS)
    def test_arcsin(self, oracle, p, u):
        assert arcsin_p(u, p).value == pytest.approx(oracle.arcsin(u, p), rel=1e-12)

    @pytest.mark.parametrize("p", P_SAMPLES)
    @pytest.mark.parametrize("u", FRACTIONS)
    def test_sin_and_cos(self, oracle, p, u):
        x = u * oracle.half_pi(p)
        assert sin_p(x, p).value == pytest.approx(oracle.sin(x, p), rel=1e-12)
        assert cos_p(x, p).value == pytest.approx(oracle.cos(x, p), rel=1e-9)

    @pytest.mark.parametrize("p", P_SAMPLES)
    @pytest.mark.parametrize("x", (0.3, 1.0, 2.5, 40.0))
    def test_arctan(self, oracle, p, x):
        assert arctan_p(x, p).value == pytest.approx(oracle.arctan(x, p), rel=1e-12)


class TestNearOne:
    """Exponents just above 1, where the tail substitution u^q underflows."""

    @pytest.mark.parametrize("p", (1.01, 1.02, 1.03))
    def test_sweep_quarter_period(self, p):
        half = pi_p(p).half_pi_p
        xs = [half * k / 61 for k in range(1, 61)]
        sines = [sin_p(x, p).value for x in xs]
        cosines = [cos_p(x, p).value for x in xs]
        assert all(0.0 <= s <= 1.0 for s in sines)
        assert all(a <= b for a, b in zip(sines, sines[1:]))
        assert all(a >= b for a, b in zip(cosines, cosines[1:]))
        for x, s in zip(xs, sines):
            if s < 0.99:
                assert arcsin_p(s, p).value == pytest.approx(x, rel=1e-10)

    @pytest.mark.parametrize("p", (1.01, 1.02, 1.03))
    @pytest.mark.parametrize("x", (0.1, 0.5, 0.9, 0.999))
    def test_arcsin(self, oracle, p, x):
        assert arcsin_p(x, p).value == pytest.approx(oracle.arcsin(x, p), rel=1e-10)

    def test_half_pi_closed_form(self):
        assert pi_p(1.001).value == pytest.approx(closed_form_pi(1.001), rel=1e-10)


class TestSymmetries:
    """Odd/even symmetry, reflection, periodicity and the Pythagorean identity."""

    @settings(max_examples=40, deadline=None)
    @given(p=st.floats(1.1, 12.0), u=st.floats(0.0, 1.0))
    def test_pythagorean_identity(self, p, u):
        x = u * pi_p(p).half_pi_p
        s, c = sin_p(x, p).value, cos_p(x, p).value
        assert abs(s) ** p + abs(c) ** p == pytest.approx(1.0, abs=1e-12)

    @settings(max_examples=30, deadline=None)
    @given(p=st.floats(1.1, 12.0), x=st.floats(0.01, 20.0))
    def test_odd_reflection_periodic(self, p, x):
        period = pi_p(p).value
        s = sin_p(x, p).value
        assert sin_p(-x, p).value == -s
        assert sin_p(period - x, p).value == pytest.approx(s, abs=1e-11)
        assert sin_p(x + 2.0 * period, p).value == pytest.approx(s, abs=1e-11)
        assert cos_p(-x, p).value == cos_p(x, p).value

    def test_exact_zero_and_one(self):
        half = pi_p(3.0).half_pi_p
        assert sin_p(half, 3.0).value == 1.0
        assert cos_p(half, 3.0).value == 0.0
        assert cos_p(0.0, 3.0).value == 1.0
        assert cos_p(2.0 * half, 3.0).value == -1.0

    def test_arcsin_inverts_sin(self):
        for p in (1.3, 4.0):
            for x in (0.1, 0.9):
                assert arcsin_p(sin_p(x, p).value, p).value == pytest.approx(x, rel=1e-12)

    def test_arctan_inverts_tan(self):
        assert arctan_p(tan_p(0.7, 3.0).value, 3.0).value == pytest.approx(0.7, rel=1e-11)

    def test_arctan_limit_is_half_pi(self):
        assert arctan_p(1e12, 3.0).value == pytest.approx(pi_p(3.0).half_pi_p, rel=1e-11)
        assert arctan_p(-2.0, 3.0).value == -arctan_p(2.0, 3.0).value


class TestDerivatives:
    """Closed-form derivatives against central differences."""

    @pytest.mark.parametrize("p", (1.5, 3.0, 6.0))
    def test_d_cos(self, p):
        x, h = 0.6 * pi_p(p).half_pi_p, 1e-5
        numeric = (cos_p(x + h, p).value - cos_p(x - h, p).value) / (2 * h)
        assert d_cos_p(x, p).value == pytest.approx(numeric, rel=1e-6)

    @pytest.mark.parametrize("p", (1.5, 3.0, 6.0))
    def test_d_tan(self, p):
        x, h = 0.5 * pi_p(p).half_pi_p, 1e-5
        numeric = (tan_p(x + h, p).value - tan_p(x - h, p).value) / (2 * h)
        assert d_tan_p(x, p).value == pytest.approx(numeric, rel=1e-6)

    def test_cos_is_derivative_of_sin(self):
        x, h = 0.8, 1e-5
        numeric = (sin_p(x + h, 3.0).value - sin_p(x - h, 3.0).value) / (2 * h)
        assert cos_p(x, 3.0).value == pytest.approx(numeric, rel=1e-7)


class TestCancellationFree:
    """Deficit and log-cosine forms near x = 0."""

    @pytest.mark.parametrize("x", (1e-4, 1e-2, 0.3))
    def test_deficit_at_p_two(self, x):
        expected = x**2 / 6 - x**4 / 120 + x**6 / 5040 - x**8 / 362880
        assert sin_ratio_deficit(x, 2.0).value == pytest.approx(expected, rel=1e-10)

    @pytest.mark.parametrize("p", (1.5, 3.0, 8.0))
    def test_deficit_leading_term(self, p):
        x = 1e-3
        assert sin_ratio_deficit(x, p).value == pytest.approx(x**p / (p * (p + 1)), rel=1e-3)

    def test_deficit_at_half_pi(self):
        half = pi_p(3.0).half_pi_p
        assert sin_ratio_deficit(half, 3.0).value == pytest.approx(1.0 - 1.0 / half, rel=1e-13)

    def test_log_cos_small_argument(self):
        # log cos_p(x) ≈ -x^p / p for small x
        assert log_cos_p(1e-3, 3.0).value == pytest.approx(-1e-9 / 3.0, rel=1e-5)
        assert log_cos_p(0.0, 3.0).value == 0.0


class TestDomainErrors:
    """Arguments outside a function's domain."""

    def test_arcsin_outside_unit(self):
        with pytest.raises(DomainError):
            arcsin_p(1.0000001, 3.0)

    def test_tan_pole(self):
        half = pi_p(3.0).half_pi_p
        with pytest.raises(PoleError):
            tan_p(half, 3.0)
        with pytest.raises(PoleError):
            tan_p(3.0 * half, 3.0)

    def test_pole_error_is_domain_error(self):
        assert issubclass(PoleError, DomainError)

    @pytest.mark.parametrize("fn", (d_cos_p, d_tan_p, log_cos_p))
    def test_derivatives_reject_half_pi(self, fn):
        with pytest.raises(DomainError):
            fn(pi_p(3.0).half_pi_p, 3.0)

    def test_deficit_rejects_zero(self):
        with pytest.raises(DomainError):
            sin_ratio_deficit(0.0, 3.0)

    def test_non_finite_argument(self):
        with pytest.raises(DomainError):
            sin_p(math.nan, 3.0)
        with pytest.raises(DomainError):
            cos_p(math.inf, 3.0)
