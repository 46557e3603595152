"""Tests for the inequality registry and its cancellation-free evaluators."""

import math

import pytest

from gentrig.config import DEFAULT_EVAL
from gentrig.errors import UnknownCase
from gentrig.inequalities import (
    ABOVE_TWO,
    CASES,
    CONJECTURE_IDS,
    FROM_TWO,
    HALF_PI,
    POSITIVE,
    UP_TO_TWO,
    get_case,
    registry,
)
from gentrig.phyp import cosh_p, sinh_p, tanh_p
from gentrig.ptrig import PParam, cos_p, pi_p, sin_p

EXPECTED_IDS = [
    "lem_tan_tanh_monotone",
    "lem_c_ch_decreasing_range",
    "sin_sinh_geometric",
    "mitrinovic_adamovic",
    "lazarevic",
    "chain_2_4_4",
    "huygens_trig",
    "huygens_hyp",
    "huygens2_trig",
    "huygens2_hyp",
    "wilker_hyp",
    "cusa_trig",
    "cusa_hyp_small_p",
    "cusa_hyp_large_p",
    "sinh_cos_bound",
    "sin_lower_bound",
    "ratio_monotone_sin",
    "ratio_monotone_tan",
    "ratio_monotone_sinh",
    "ratio_monotone_tanh",
    "t_param_cos",
    "t_param_sin",
    "t_param_sinh",
    "t_param_cosh",
    "conj_log_ratio",
    "conj_cusa_sharp",
]


def margin(case_id: str, p: float, x: float, index: int = 0) -> float:
    return get_case(case_id).margins[index].evaluate(PParam(p), x, DEFAULT_EVAL)


class TestRegistry:
    """Tests for registry(), get_case() and case metadata."""

    def test_ids_in_order(self):
        assert [case.id for case in registry()] == EXPECTED_IDS
        assert list(CASES) == EXPECTED_IDS

    def test_conjectures(self):
        assert CONJECTURE_IDS == ("conj_log_ratio", "conj_cusa_sharp")
        assert sum(1 for case in registry() if not case.is_conjecture) == 24

    def test_unknown_case(self):
        with pytest.raises(UnknownCase) as exc:
            get_case("nonexistent")
        assert "wilker_hyp" in str(exc.value)

    def test_unknown_case_is_key_error(self):
        with pytest.raises(KeyError):
            get_case("nonexistent")

    def test_default_p_inside_domain(self):
        for case in registry():
            assert case.default_p, case.id
            assert all(case.p_domain.contains(p) for p in case.default_p), case.id

    def test_every_case_has_something_to_scan(self):
        for case in registry():
            assert case.margins or case.monotone or case.shapes, case.id

    def test_best_constants(self):
        with_constant = [case.id for case in registry() if case.best_constant is not None]
        assert with_constant == ["mitrinovic_adamovic", "lazarevic"]
        assert get_case("mitrinovic_adamovic").best_constant.holds_below is True
        assert get_case("lazarevic").best_constant.holds_below is False

    def test_non_strict_margins(self):
        assert get_case("cusa_trig").margins[1].strict is False
        assert get_case("sin_lower_bound").margins[1].strict is False


class TestDomains:
    """Tests for PDomain and XDomain."""

    def test_boundary_flags(self):
        assert FROM_TWO.contains(2.0)
        assert not ABOVE_TWO.contains(2.0)
        assert UP_TO_TWO.contains(2.0)
        assert not UP_TO_TWO.contains(1.0)
        assert not UP_TO_TWO.contains(2.5)

    def test_str(self):
        assert str(FROM_TWO) == "[2.0, inf)"
        assert str(UP_TO_TWO) == "(1.0, 2.0]"

    def test_relative_upper(self):
        assert HALF_PI.upper(PParam(2.0), DEFAULT_EVAL) == pytest.approx(math.pi / 2, rel=1e-14)
        assert POSITIVE.upper(PParam(2.0), DEFAULT_EVAL) == 10.0

    def test_cusa_trig_includes_right_end(self):
        assert get_case("cusa_trig").x_domain.hi_closed
        assert get_case("sin_lower_bound").x_domain.hi_closed


class TestMarginValues:
    """Margins at fixed points against classical or direct formulas."""

    def test_wilker_at_one(self):
        expected = math.sinh(1.0) ** 2 + math.tanh(1.0) - 2.0
        assert margin("wilker_hyp", 2.0, 1.0) == pytest.approx(expected, rel=1e-11)
        assert margin("wilker_hyp", 2.0, 1.0) == pytest.approx(0.1427, abs=1e-4)

    def test_cusa_trig_at_half_pi(self):
        x = math.pi / 2
        assert margin("cusa_trig", 2.0, x) == pytest.approx(2.0 / 3.0 - 2.0 / math.pi, rel=1e-12)
        assert margin("cusa_trig", 2.0, x, index=1) == 0.0

    def test_cusa_trig_right_end_below_two(self):
        # at x = π_p/2: p/(1+p) - 1/(π_p/2)
        half = pi_p(1.5).half_pi_p
        assert margin("cusa_trig", 1.5, half) == pytest.approx(1.5 / 2.5 - 1.0 / half, rel=1e-12)

    @pytest.mark.parametrize("p", (1.5, 3.0))
    def test_huygens_trig_direct(self, p):
        x = 0.8 * pi_p(p).half_pi_p
        s, c = sin_p(x, p).value, cos_p(x, p).value
        assert margin("huygens_trig", p, x) == pytest.approx((p + 1) * s / x + 1 / c - (p + 2), rel=1e-9)

    @pytest.mark.parametrize("p", (2.0, 3.0))
    def test_chain_margins_direct(self, p):
        x = 0.6 * pi_p(p).half_pi_p
        sh, ch, th, s = sinh_p(x, p).value, cosh_p(x, p).value, tanh_p(x, p).value, sin_p(x, p).value
        expected = (1 / ch - (x / sh) ** (1 + p), th / x - 1 / ch, s / x - th / x, x / sh - s / x)
        for i, value in enumerate(expected):
            assert margin("chain_2_4_4", p, x, index=i) == pytest.approx(value, rel=1e-9)

    def test_lazarevic_direct(self):
        p, x = 3.0, 2.0
        sh, ch = sinh_p(x, p).value, cosh_p(x, p).value
        assert margin("lazarevic", p, x) == pytest.approx(sh / x - ch ** (1 / (1 + p)), rel=1e-10)
        assert margin("lazarevic", p, x, index=1) == pytest.approx(ch - sh / x, rel=1e-10)

    def test_huygens2_hyp_small_x(self):
        # p = 2: 2 sinh/x + tanh/x - 3 = 0.15 x^4 + O(x^6)
        x = 1e-3
        assert margin("huygens2_hyp", 2.0, x) == pytest.approx(0.15 * x**4, rel=1e-3)

    def test_huygens_trig_small_x(self):
        # p = 2: 3 sin/x + 1/cos - 4 = 7x^4/30 + O(x^6)
        x = 1e-2
        assert margin("huygens_trig", 2.0, x) == pytest.approx(7.0 / 30.0 * x**4, rel=1e-3)

    def test_mitrinovic_adamovic_ratio_limits(self):
        ratio = get_case("mitrinovic_adamovic").monotone[0].function
        p = PParam(3.0)
        assert ratio(p, 1e-3, DEFAULT_EVAL) == pytest.approx(0.25, rel=1e-3)

    def test_margins_positive_at_interior_points(self):
        for case in registry():
            if case.is_conjecture or not case.margins:
                continue
            p = PParam(case.default_p[-1])
            x = 0.5 * case.x_domain.upper(p, DEFAULT_EVAL)
            for m in case.margins:
                if not m.strict:
                    continue
                assert m.evaluate(p, x, DEFAULT_EVAL) > 0.0, (case.id, m.name)


class TestCurvesAndShapes:
    """Chain curves and t-parametric functions."""

    @pytest.mark.parametrize("p", (2.0, 3.0, 5.0))
    def test_chain_curves_increase(self, p):
        case = get_case("chain_2_4_4")
        pp = PParam(p)
        for frac in (0.01, 0.5, 0.99):
            x = frac * pi_p(pp).half_pi_p
            values = [curve.evaluate(pp, x, DEFAULT_EVAL) for curve in case.curves]
            assert all(a < b for a, b in zip(values, values[1:])), (p, x, values)

    def test_t_param_at_t_one(self):
        p, x = PParam(2.0), 0.5
        expected = {"cos": math.cos(x), "sin": math.sin(x), "sinh": math.sinh(x), "cosh": math.cosh(x)}
        for name, value in expected.items():
            claim = get_case(f"t_param_{name}").shapes[0]
            assert claim.function(p, x, 1.0, DEFAULT_EVAL) == pytest.approx(value, rel=1e-12)

    def test_t_intervals(self):
        p = PParam(2.0)
        lo, hi = get_case("t_param_cos").shapes[0].t_interval(p, 1.0, DEFAULT_EVAL)
        assert lo == pytest.approx(2.0 / math.pi * (1 + 1e-3), rel=1e-12)
        assert hi == 6.0
        assert get_case("t_param_cosh").shapes[0].t_interval(p, 1.0, DEFAULT_EVAL) == (0.1, 6.0)
