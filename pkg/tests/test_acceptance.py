"""Exit criteria for the package, one test per criterion.

Run ``pytest tests/test_acceptance.py`` and read the "acceptance criteria"
section of the summary for one PASS/FAIL line each.
"""

import math
import random
import time
from fractions import Fraction

import numpy as np

from vietecheb import bigfix, chebyshev, cli, pi_engines, sinc_approx
from vietecheb.bigfix import BigFixed
from vietecheb.pi_engines import PiMethod

from oracles import pi_euler_fraction, truncate_fraction

U15_OVER_16 = {15: 2048, 13: -7168, 11: 9984, 9: -7040, 7: 2640, 5: -504, 3: 42, 1: -1}


def test_c1_u16_error_bound(criterion):
    start = time.perf_counter()
    t = np.linspace(-10.0, 10.0, 100001)
    approx = sinc_approx.sinc_u(t, 16)
    sup = float(np.max(np.abs(sinc_approx.sinc_exact(t) - approx)))
    elapsed = time.perf_counter() - start
    assert sup < 0.006
    assert elapsed < 1.0
    criterion(f"sup|eps| = {sup:.6f} < 0.006 in {elapsed * 1e3:.1f} ms")


def test_c2_u15_coefficients(criterion):
    scaled = chebyshev.coeffs(chebyshev.ChebKind.SECOND, 15).scaled_down(16)
    for degree, c in enumerate(scaled):
        assert c == U15_OVER_16.get(degree, 0), degree
    criterion("U_15 / 16 = 2048, -7168, 9984, -7040, 2640, -504, 42, -1; even degrees zero")


def test_c3_identity_suite(criterion, capsys):
    start = time.perf_counter()
    worst = {}

    theta = np.linspace(0.0, np.pi, 1000)
    c = np.cos(theta)
    worst["t-of-cos"] = max(float(np.max(np.abs(chebyshev.eval_t_recurrence(m, c) - np.cos(m * theta))))
                       for m in range(65))

    t = np.linspace(-20.0, 20.0, 1001)
    worst["product-sum"] = max(float(np.max(np.abs(
        sinc_approx.sinc_cos_product(t, M) - sinc_approx.sinc_cos_sum(t, M)))) for M in range(1, 13))
    worst["cos-t-sum"] = max(float(np.max(np.abs(
        sinc_approx.sinc_cos_sum(t, M) - sinc_approx.sinc_t_sum(t, 2 ** (M - 1)))))
        for M in range(1, 11))
    worst["t-sum-u"] = max(float(np.max(np.abs(
        sinc_approx.sinc_t_sum(t, L) - sinc_approx.sinc_u(t, 2 * L)))) for L in range(1, 513))

    x = np.linspace(-1.0, 1.0, 1001)
    a1 = 0.0
    for K in range(1, 32, 2):
        s = chebyshev.sum_odd_t(K, x)
        u = chebyshev.eval_u_recurrence(K, x)
        a1 = max(a1, float(np.max(np.abs(s - u) / np.maximum(np.abs(u), 1.0))))
    worst["odd-t-u"] = a1

    for K in range(1, 32, 2):
        total = [0] * (K + 1)
        for k in range(1, K + 1, 2):
            for i, ck in enumerate(chebyshev.coeffs(chebyshev.ChebKind.FIRST, k).coeffs):
                total[i] += 2 * ck
        assert tuple(total) == chebyshev.coeffs(chebyshev.ChebKind.SECOND, K).coeffs

    # t-of-cos carries its own 1e-10 tolerance at degrees up to 64
    assert worst["t-of-cos"] <= 1e-10
    assert all(v < 1e-12 for k, v in worst.items() if k != "t-of-cos"), worst

    code = cli.main(["identity-check", "--max-m", "10", "--no-timing"])
    capsys.readouterr()
    elapsed = time.perf_counter() - start
    assert code == 0
    assert elapsed < 10.0
    shown = ", ".join(f"{k}={v:.1e}" for k, v in worst.items())
    criterion(f"{shown}; identity-check --max-m 10 exit 0; {elapsed:.1f} s")


def test_c4_cross_engine_exactness(criterion):
    start = time.perf_counter()
    bound = Fraction(1, 2**200)
    worst = Fraction(0)
    for M in range(1, 17):
        v = pi_engines.pi_viete_product(M, 256).estimate
        t = pi_engines.pi_cheb_t_sum(M, 256).estimate
        u = pi_engines.pi_cheb_u(M, 256).estimate
        for a, b in ((v, t), (t, u), (v, u)):
            gap = abs(a - b).to_fraction()
            worst = max(worst, gap)
            assert gap <= bound, M
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    criterion(f"max pairwise gap {float(worst):.2e} <= 2^-200 for M <= 16; {elapsed:.1f} s")


def test_c5_convergence_law(criterion):
    errs = {M: float(pi_engines.pi_viete_product(M, 256).rel_error) for M in range(5, 21)}
    ratios = [errs[M] / (math.pi**2 / (6 * 4 ** (M + 1))) for M in range(5, 21)]
    steps = [errs[M] / errs[M + 1] for M in range(5, 20)]
    assert all(0.99 <= r <= 1.01 for r in ratios), ratios
    assert all(3.96 <= s <= 4.04 for s in steps), steps
    criterion(f"model ratio in [{min(ratios):.5f}, {max(ratios):.5f}], "
              f"step ratio in [{min(steps):.4f}, {max(steps):.4f}]")


def test_c6_thousand_digits(criterion, capsys):
    M, frac_bits = pi_engines.viete_sizing(1000)
    assert M == 1665
    start = time.perf_counter()
    code = cli.main(["pi", "--method", "viete", "--digits", "1000", "--raw", "--no-timing"])
    elapsed = time.perf_counter() - start
    printed = capsys.readouterr().out.splitlines()[0]
    reference = pi_engines.pi_machin_reference(1000).digits(1000)
    assert code == 0
    assert printed == reference
    assert elapsed < 60.0
    criterion(f"1000/1000 digits match Machin (M={M}, frac_bits={frac_bits}); {elapsed:.2f} s")


def test_c7_sqrt_contract(criterion):
    rng = random.Random(20161009)
    for bits in (64, 256, 1024):
        ulp = Fraction(1, 2**bits)
        for _ in range(1000):
            a = BigFixed(rng.getrandbits(rng.randint(1, 2 * bits + 64)), bits)
            r = bigfix.sqrt(a).to_fraction()
            assert r * r <= a.to_fraction() < (r + ulp) ** 2
    assert bigfix.sqrt(BigFixed.from_int(2, 64)).mantissa == math.isqrt(2 << 128)
    criterion("3000 random operands bracket-correct; sqrt(2)@64 == isqrt(2**129)")


def test_c8_oracle_independence(criterion):
    assert pi_engines.pi_machin_reference(50).digits(50) == pi_engines.PI_50
    second = truncate_fraction(pi_euler_fraction(15), 15)
    assert second == pi_engines.PI_50[:17]
    assert PiMethod.MACHIN_REFERENCE.value == "machin"
    criterion("Machin(50) == literal; literal[:15] == 4(atan 1/2 + atan 1/3)")
