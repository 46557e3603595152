"""Tests for the generalized hyperbolic functions."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentrig.errors import DomainError, OverflowGuard
from gentrig.phyp import (
    SINH_ARG_CAP,
    arcsinh_p,
    arctanh_p,
    cosh_p,
    d_cosh_p,
    d_tanh_p,
    log_cosh_p,
    sinh_p,
    sinh_ratio_excess,
    tanh_p,
)

P_SAMPLES = (1.25, 1.5, 3.0, 5.0, 10.0)


class TestPEqualsTwo:
    """At p = 2 the family reduces to the classical hyperbolic functions."""

    @pytest.mark.parametrize("x", (-3.0, -0.5, 0.0, 0.2, 1.0, 2.5, 10.0))
    def test_sinh_cosh_tanh(self, x):
        assert sinh_p(x, 2.0).value == pytest.approx(math.sinh(x), rel=1e-12, abs=1e-15)
        assert cosh_p(x, 2.0).value == pytest.approx(math.cosh(x), rel=1e-12)
        assert tanh_p(x, 2.0).value == pytest.approx(math.tanh(x), rel=1e-12, abs=1e-15)

    @pytest.mark.parametrize("x", (0.1, 0.9, 3.0, 1e6))
    def test_arcsinh(self, x):
        assert arcsinh_p(x, 2.0).value == pytest.approx(math.asinh(x), rel=1e-12)

    def test_arctanh_half(self):
        assert arctanh_p(0.5, 2.0).value == pytest.approx(0.5493061443340549, rel=1e-12)

    def test_arctanh_near_one(self):
        x = 1.0 - 1e-9
        assert arctanh_p(x, 2.0).value == pytest.approx(math.atanh(x), rel=1e-10)

    def test_d_tanh_at_one(self):
        assert d_tanh_p(1.0, 2.0).value == pytest.approx(0.41997434161402614, rel=1e-12)

    def test_d_cosh(self):
        assert d_cosh_p(1.3, 2.0).value == pytest.approx(math.sinh(1.3), rel=1e-12)

    def test_log_cosh(self):
        assert log_cosh_p(1e-4, 2.0).value == pytest.approx(math.log1p(math.sinh(1e-4) ** 2) / 2, rel=1e-10)
        assert log_cosh_p(20.0, 2.0).value == pytest.approx(math.log(math.cosh(20.0)), rel=1e-12)


class TestAgainstOracle:
    """Comparison with mpmath hypergeometric references."""

    @pytest.mark.parametrize("p", P_SAMPLES)
    @pytest.mark.parametrize("x", (0.05, 0.7, 1.0, 3.0, 25.0))
    def test_arcsinh(self, oracle, p, x):
        assert arcsinh_p(x, p).value == pytest.approx(oracle.arcsinh(x, p), rel=1e-12)

    @pytest.mark.parametrize("p", P_SAMPLES)
    @pytest.mark.parametrize("x", (0.05, 0.7, 2.0, 5.0))
    def test_sinh(self, oracle, p, x):
        assert sinh_p(x, p).value == pytest.approx(oracle.sinh(x, p), rel=1e-12)

    @pytest.mark.parametrize("p", P_SAMPLES)
    @pytest.mark.parametrize("x", (0.1, 0.5, 0.9, 0.999))
    def test_arctanh(self, oracle, p, x):
        assert arctanh_p(x, p).value == pytest.approx(oracle.arctanh(x, p), rel=1e-11)


class TestIdentities:
    """Hyperbolic identity, symmetries and inverse pairs."""

    @settings(max_examples=40, deadline=None)
    @given(p=st.floats(1.1, 12.0), x=st.floats(-6.0, 6.0))
    def test_cosh_identity(self, p, x):
        s, c = sinh_p(x, p).value, cosh_p(x, p).value
        assert c >= 1.0
        assert c**p == pytest.approx(1.0 + abs(s) ** p, rel=1e-12)

    @settings(max_examples=30, deadline=None)
    @given(p=st.floats(1.1, 12.0), x=st.floats(0.0, 8.0))
    def test_odd_and_even(self, p, x):
        assert sinh_p(-x, p).value == -sinh_p(x, p).value
        assert cosh_p(-x, p).value == cosh_p(x, p).value
        assert tanh_p(-x, p).value == -tanh_p(x, p).value
        assert abs(tanh_p(x, p).value) <= 1.0

    def test_arcsinh_inverts_sinh(self):
        for p in (1.4, 3.0, 7.0):
            for x in (0.01, 1.0, 12.0):
                assert arcsinh_p(sinh_p(x, p).value, p).value == pytest.approx(x, rel=1e-12)

    def test_arctanh_inverts_tanh(self):
        for p in (1.4, 3.0):
            assert arctanh_p(tanh_p(0.8, p).value, p).value == pytest.approx(0.8, rel=1e-11)

    def test_sinh_is_strictly_increasing(self):
        values = [sinh_p(x, 3.0).value for x in (0.0, 0.5, 1.0, 2.0, 4.0, 8.0)]
        assert values == sorted(values)
        assert len(set(values)) == len(values)


class TestDerivatives:
    """Closed-form derivatives against central differences."""

    @pytest.mark.parametrize("p", (1.5, 3.0, 6.0))
    def test_d_cosh(self, p):
        x, h = 0.9, 1e-5
        numeric = (cosh_p(x + h, p).value - cosh_p(x - h, p).value) / (2 * h)
        assert d_cosh_p(x, p).value == pytest.approx(numeric, rel=1e-6)

    @pytest.mark.parametrize("p", (1.5, 3.0, 6.0))
    def test_d_tanh(self, p):
        x, h = 0.9, 1e-5
        numeric = (tanh_p(x + h, p).value - tanh_p(x - h, p).value) / (2 * h)
        assert d_tanh_p(x, p).value == pytest.approx(numeric, rel=1e-6)
        assert d_tanh_p(x, p).value == pytest.approx(1.0 - tanh_p(x, p).value ** p, rel=1e-12)

    def test_d_cosh_negative_argument(self):
        with pytest.raises(DomainError):
            d_cosh_p(-0.5, 3.0)
        assert d_cosh_p(-0.5, 3.0, extend_even=True).value == -d_cosh_p(0.5, 3.0).value

    def test_d_tanh_at_zero(self):
        assert d_tanh_p(0.0, 3.0).value == 1.0


class TestCancellationFree:
    """Excess and log-cosh forms near x = 0."""

    @pytest.mark.parametrize("x", (1e-4, 1e-2, 0.5, 3.0))
    def test_excess_at_p_two(self, x):
        expected = math.sinh(x) / x - 1.0 if x > 0.1 else x**2 / 6 + x**4 / 120 + x**6 / 5040
        assert sinh_ratio_excess(x, 2.0).value == pytest.approx(expected, rel=1e-10)

    @pytest.mark.parametrize("p", (1.5, 3.0, 8.0))
    def test_excess_leading_term(self, p):
        x = 1e-3
        assert sinh_ratio_excess(x, p).value == pytest.approx(x**p / (p * (p + 1)), rel=1e-3)

    def test_excess_rejects_zero(self):
        with pytest.raises(DomainError):
            sinh_ratio_excess(0.0, 3.0)

    def test_log_cosh_small_argument(self):
        assert log_cosh_p(1e-3, 3.0).value == pytest.approx(1e-9 / 3.0, rel=1e-5)


class TestDomainErrors:
    """Argument caps and edges."""

    def test_arctanh_edge(self):
        with pytest.raises(DomainError):
            arctanh_p(1.0, 3.0)
        with pytest.raises(DomainError):
            arctanh_p(-1.0 + 1e-13, 3.0)

    def test_sinh_overflow_guard(self):
        with pytest.raises(OverflowGuard):
            sinh_p(SINH_ARG_CAP + 1.0, 3.0)
        with pytest.raises(OverflowGuard):
            cosh_p(-(SINH_ARG_CAP + 1.0), 3.0)

    def test_overflow_guard_is_domain_error(self):
        assert issubclass(OverflowGuard, DomainError)

    def test_cap_itself_is_finite(self):
        assert math.isfinite(cosh_p(SINH_ARG_CAP, 1.5).value)
