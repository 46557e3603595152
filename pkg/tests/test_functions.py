"""Tests for the named-function registry."""

import math

import pytest

from gentrig.errors import DomainError, InvalidArgument
from gentrig.functions import FUNCTIONS, evaluate
from gentrig.ptrig import PParam


class TestRegistry:
    """Tests for the FUNCTIONS table."""

    def test_all_names_present(self):
        expected = {
            "pi_p", "sin_p", "cos_p", "tan_p", "arcsin_p", "arctan_p",
            "sinh_p", "cosh_p", "tanh_p", "arcsinh_p", "arctanh_p",
            "d_cos_p", "d_tan_p", "d_cosh_p", "d_tanh_p",
        }
        assert set(FUNCTIONS) == expected

    def test_entries_named_after_keys(self):
        for name, entry in FUNCTIONS.items():
            assert entry.name == name
            assert entry.description

    def test_only_pi_p_takes_no_argument(self):
        assert [name for name, entry in FUNCTIONS.items() if not entry.needs_x] == ["pi_p"]


class TestEvaluate:
    """Tests for evaluate()."""

    def test_pi_p_ignores_x(self):
        assert evaluate("pi_p", 4.0).value == pytest.approx(2.221441469079183, rel=1e-13)
        assert evaluate("pi_p", 4.0, 123.0).value == evaluate("pi_p", 4.0).value

    def test_accepts_pparam(self):
        assert evaluate("sin_p", PParam(2.0), 0.5).value == pytest.approx(math.sin(0.5), rel=1e-13)

    def test_each_function_evaluates(self):
        for name in FUNCTIONS:
            result = evaluate(name, 3.0, 0.4)
            assert math.isfinite(result.value)
            assert result.err_est >= 0.0

    def test_unknown_name(self):
        with pytest.raises(InvalidArgument) as exc:
            evaluate("cot_p", 3.0, 0.4)
        assert "sin_p" in str(exc.value)

    def test_missing_argument(self):
        with pytest.raises(InvalidArgument):
            evaluate("sin_p", 3.0)

    def test_domain_error_propagates(self):
        with pytest.raises(DomainError):
            evaluate("arcsin_p", 3.0, 2.0)
        with pytest.raises(DomainError):
            evaluate("sin_p", 0.9, 0.4)
