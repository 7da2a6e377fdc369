import math
from fractions import Fraction

import pytest

from vietecheb import bigfix, pi_engines
from vietecheb.bigfix import BigFixed
from vietecheb.pi_engines import (
    PI_50,
    EngineCapError,
    PiMethod,
    PrecisionUnderflowError,
    convergence_sweep,
    pi_cheb_t_sum,
    pi_cheb_u,
    pi_machin_reference,
    pi_viete_product,
    truncated_product,
)

from oracles import pi_euler_fraction, truncate_fraction

RADICAL_ENGINES = [pi_viete_product, pi_cheb_t_sum, pi_cheb_u]


def error_model(M):
    return math.pi**2 / (6 * 4 ** (M + 1))


def rel(report):
    return float(report.rel_error)


class TestMachinReference:
    def test_literal_against_second_formula(self):
        # Euler's arctan split is a different series from Machin's
        assert truncate_fraction(pi_euler_fraction(15), 15) == PI_50[:17]

    def test_fifty_digits(self):
        assert pi_machin_reference(50).digits(50) == PI_50

    def test_ten_digits(self):
        assert pi_machin_reference(10).digits(10) == "3.1415926535"

    def test_one_digit(self):
        assert pi_machin_reference(1).digits(1) == "3.1"

    def test_precision_rule(self):
        r = pi_machin_reference(100)
        assert r.frac_bits == math.ceil(100 * math.log2(10)) + 64
        assert r.method is PiMethod.MACHIN_REFERENCE and r.M > 0

    def test_arctan_small_value(self):
        value, terms = pi_engines.arctan_inv(239, 128)
        assert float(value) == pytest.approx(math.atan(1 / 239), rel=1e-15)
        # 239**-(2k+1) stays above 2**-128 for 2k+1 <= 16.2, i.e. k = 0..7
        assert terms == 8


class TestViete:
    def test_m1_is_two_root_two(self):
        r = pi_viete_product(1, 256)
        assert float(r.estimate) == pytest.approx(2 * math.sqrt(2), abs=1e-15)
        assert rel(r) == pytest.approx(1 - 2 * math.sqrt(2) / math.pi, rel=1e-12)
        assert rel(r) == pytest.approx(0.0997, abs=5e-5)

    def test_m10_error_model(self):
        assert 0.9 <= rel(pi_viete_product(10, 256)) / error_model(10) <= 1.1

    def test_exact_residual(self):
        # P_M = sinc(pi/2) / sinc(pi / 2**(M+1)) exactly, so 1 - est/pi = 1 - sinc(x)
        for M in (2, 6, 12):
            x = math.pi / 2 ** (M + 1)
            expected = 1 - math.sin(x) / x
            assert rel(pi_viete_product(M, 256)) == pytest.approx(expected, rel=1e-8)

    def test_min_precision(self):
        with pytest.raises(PrecisionUnderflowError):
            pi_viete_product(5, 63)

    def test_bad_m(self):
        with pytest.raises(ValueError):
            pi_viete_product(0, 256)

    def test_sizing_rule(self):
        assert pi_engines.viete_sizing(1000) == (1665, 3322 + 11 + 32)
        M, bits = pi_engines.viete_sizing(50)
        assert M == math.ceil(1.661 * 50 + 4)

    @pytest.mark.parametrize("digits", [1, 7, 50, 200])
    def test_sized_digits_match_reference(self, digits):
        M, bits = pi_engines.viete_sizing(digits)
        r = pi_viete_product(M, bits)
        assert r.digits(digits) == pi_machin_reference(digits).digits(digits)


class TestChebEngines:
    def test_m1(self):
        for engine in (pi_cheb_t_sum, pi_cheb_u):
            assert engine(1, 256).estimate == pi_viete_product(1, 256).estimate

    def test_m3_sum_equals_product(self):
        t = truncated_product(PiMethod.CHEB_T_SUM, 3, 256)
        p = truncated_product(PiMethod.VIETE_PRODUCT, 3, 256)
        assert abs(t.mantissa - p.mantissa) <= 8
        # the three-factor product written out with floats
        a1 = math.sqrt(2)
        a2 = math.sqrt(2 + a1)
        a3 = math.sqrt(2 + a2)
        assert float(t) == pytest.approx(a1 * a2 * a3 / 8, abs=1e-15)

    def test_m3_u_equals_t_sum(self):
        u = pi_cheb_u(3, 256).estimate
        t = pi_cheb_t_sum(3, 256).estimate
        assert abs(u.mantissa - t.mantissa) <= 8

    def test_m16_agrees_with_viete(self):
        t = pi_cheb_t_sum(16, 256).estimate
        v = pi_viete_product(16, 256).estimate
        assert abs(t - v).to_fraction() <= Fraction(1, 2**200)

    @pytest.mark.slow
    def test_m20_digits(self):
        assert pi_cheb_u(20, 256).matched_decimal_digits >= 12

    @pytest.mark.parametrize("engine", [pi_cheb_t_sum, pi_cheb_u])
    def test_cap(self, engine):
        with pytest.raises(EngineCapError):
            engine(pi_engines.CHEB_MAX_M + 1, 256)

    def test_unguarded_routes_stay_close(self):
        # without guard bits the routes differ only by floor-rounding noise
        for M in range(1, 9):
            ps = [pi_engines._product_at(m, M, 256).mantissa
                  for m in (PiMethod.VIETE_PRODUCT, PiMethod.CHEB_T_SUM, PiMethod.CHEB_U_SINGLE)]
            assert max(ps) - min(ps) <= 4 ** (M + 1)


class TestReportInvariants:
    @pytest.mark.parametrize("engine", RADICAL_ENGINES)
    def test_estimate_range_and_underestimate(self, engine):
        pi = pi_engines.machin_pi(256)
        for M in range(1, 13):
            est = engine(M, 256).estimate
            assert 2 < est < pi  # 2 < 2*sqrt(2) at M = 1
            assert est > 3 or M == 1

    def test_matched_digits_monotone(self):
        digits = [pi_viete_product(M, 256).matched_decimal_digits for M in range(1, 41)]
        assert digits == sorted(digits)

    def test_digit_gain_per_window(self):
        digits = {M: pi_viete_product(M, 256).matched_decimal_digits for M in range(10, 41)}
        for start in range(10, 31):
            assert 5 <= digits[start + 10] - digits[start] <= 7

    def test_error_model_ratio(self):
        for M in range(5, 21):
            assert 0.99 <= rel(pi_viete_product(M, 256)) / error_model(M) <= 1.01

    def test_machin_pi_accuracy(self):
        pi = pi_engines.machin_pi(200)
        exact = pi_euler_fraction(70)
        assert abs(pi.to_fraction() - exact) <= Fraction(1, 2**199)

    def test_report_digits(self):
        r = pi_viete_product(30, 256)
        assert r.digits(15) == "3.141592653589793"[:17]


class TestSweep:
    def test_decreasing(self):
        reports = convergence_sweep(PiMethod.VIETE_PRODUCT, range(1, 6), 256)
        assert [r.M for r in reports] == [1, 2, 3, 4, 5]
        errs = [rel(r) for r in reports]
        assert all(a > b for a, b in zip(errs, errs[1:]))

    def test_single_cheb(self):
        (r,) = convergence_sweep("cheb-sum", range(1, 2), 256)
        assert float(r.estimate) == pytest.approx(2 * math.sqrt(2), abs=1e-15)

    def test_contraction(self):
        errs = [rel(r) for r in convergence_sweep("viete", range(5, 21), 256)]
        for a, b in zip(errs, errs[1:]):
            assert 3.96 <= a / b <= 4.04

    def test_workers_match_sequential(self):
        seq = convergence_sweep("cheb-u", range(1, 7), 128)
        par = convergence_sweep("cheb-u", range(1, 7), 128, workers=2)
        assert seq == par

    def test_machin_rejected(self):
        with pytest.raises(ValueError):
            convergence_sweep("machin", range(1, 3), 128)

    def test_cap_propagates(self):
        with pytest.raises(EngineCapError):
            convergence_sweep("cheb-u", [25], 128)


def test_decimal_budget_guard():
    r = pi_viete_product(3, 64)
    with pytest.raises(bigfix.PrecisionExceededError):
        r.digits(bigfix.decimal_budget(64) + 1)


def test_zero_error_report_is_capped():
    assert pi_engines._matched_digits(BigFixed.zero(64)) == 19
