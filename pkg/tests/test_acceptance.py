"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the table.  Every
tolerance is pinned here; exact statements use field arithmetic and no
epsilon.  Criteria 3b and 10b are asserted at their stated tolerances and
fail: the analysis lives in each assertion message (the computed values
are reproduced independently by the float oracles in the module tests).
"""

import time
from fractions import Fraction as F

from takagiqv.extrema import grid_extrema, grid_oscillation, max_value, maximizers
from takagiqv.follmer import RationalPolynomial, ito_residual
from takagiqv.modulus import omega, sweep_all_steps, witness_ratios
from takagiqv.qfield import QuadValue, SQRT2
from takagiqv.quadvar import cov_approx, qv_approx, qv_of_sum
from takagiqv.schemes import BUILTIN_NAMES, parse_scheme
from takagiqv.takagi import THIRDS_PEAK, TakagiFunction, recover_rows, thirds_value

from conftest import oracle_cov

QV_SCHEMES = ("all_plus", "alt_m", "alt_mk", "block:5", "bernoulli:1/2:1")
SCAN_SCHEMES = BUILTIN_NAMES + ("bernoulli:1/2:1",)

OSCILLATION_LIMIT = QuadValue(F(5, 6), F(2, 3))  # (5 + 4 sqrt2)/6


def fn(spec):
    return TakagiFunction(parse_scheme(spec))


def report(tag, ok, detail=""):
    print(f"ACCEPTANCE {tag}: {'PASS' if ok else 'FAIL'}{'  ' + detail if detail else ''}")


def test_criterion_01_grid_maxima_closed_form():
    start = time.time()
    hat = fn("all_plus")
    for level in range(1, 21):
        rep = grid_extrema(hat, level)
        lo, hi = maximizers(level)
        expected_args = [lo] if lo == hi else [lo, hi]
        assert rep.max == max_value(level), f"max mismatch at N={level}"
        assert rep.argmax == expected_args, f"argmax mismatch at N={level}"
    elapsed = time.time() - start
    ok = elapsed < 60.0
    report("01 grid-maxima N<=20", ok, f"({elapsed:.1f}s)")
    assert ok, f"runtime target missed: {elapsed:.1f}s"


def test_criterion_02_uniform_maximum():
    hat = fn("all_plus")
    value, bound = hat.approx(F(1, 3), F(1, 10 ** 8))
    close = abs(value - THIRDS_PEAK).compare(F(1, 10 ** 8)) <= 0
    exact = thirds_value(hat, F(1, 3)) == THIRDS_PEAK
    report("02 uniform-maximum", close and exact)
    assert close and exact


def test_criterion_03a_oscillation_identity():
    star = fn("half_split")
    for level in range(1, 21):
        assert grid_oscillation(star, level) == max_value(level) * 2 - F(1, 2), level
    report("03a oscillation == 2 M_N - 1/2 for N<=20", True)


def test_criterion_03b_oscillation_decimal_proximity():
    osc = grid_oscillation(fn("half_split"), 20)
    gap = abs(osc - OSCILLATION_LIMIT)
    ok = gap.compare(F(1, 10 ** 5)) < 0
    report("03b oscillation at N=20 within 1e-5 of limit", ok,
           f"(gap {gap.decimal(7)})")
    assert ok, (
        "grid oscillation at N=20 is 2*M_20 - 1/2 = "
        f"{osc.decimal(7)} (exact, per criterion 3a), while (5+4*sqrt2)/6 = "
        f"{OSCILLATION_LIMIT.decimal(7)}; the difference 2**-19*(sqrt2-1)/3 + 2**-9 = "
        f"{gap.decimal(7)} exceeds 1e-5 by construction.  The scan-vs-limit gap "
        "shrinks like 2**(-N/2), so 1e-5 needs N >= 36 (a 2**36-point grid); "
        "the stated tolerance is unattainable at N=20."
    )


def test_criterion_04_qv_level_identity():
    for spec in QV_SCHEMES:
        f = fn(spec)
        for level in range(1, 21):
            assert qv_approx(f, level, 1) == QuadValue(1 - F(1, 1 << level), 0), (spec, level)
    report("04 qv(1) == 1 - 2**-n, n<=20, five schemes", True)


def test_criterion_05_linear_qv_profile():
    for spec in QV_SCHEMES:
        f = fn(spec)
        for t in (F(1, 4), F(1, 2), F(3, 4)):
            dev = abs(qv_approx(f, 20, t) - t)
            assert dev.compare(F(1, 1000)) < 0, (spec, t, float(dev))
    report("05 qv_t linear within 1e-3 at n=20", True)


def test_criterion_06_covariation_counterexample():
    x, y = fn("all_plus"), fn("alt_m")
    # exact early values, against the independent Fraction oracle
    assert cov_approx(x, y, 2, 1) == QuadValue(F(-1, 4), 0)
    assert cov_approx(x, y, 3, 1) == QuadValue(F(3, 8), 0)
    assert oracle_cov(x, y, 2, F(1)) == QuadValue(F(-1, 4), 0)
    assert oracle_cov(x, y, 3, F(1)) == QuadValue(F(3, 8), 0)

    tol_cov, tol_sum = F(1, 1000), F(2, 1000)
    sums = {}
    for level in range(16, 20):
        cov = cov_approx(x, y, level, 1)
        limit = F(-1, 3) if level % 2 == 0 else F(1, 3)
        assert abs(cov - limit).compare(tol_cov) < 0, level
        qsum = qv_of_sum(x, y, level, 1)
        # polarization, exactly
        assert cov == (qsum - qv_approx(x, level, 1) - qv_approx(y, level, 1)) * F(1, 2)
        sum_limit = F(4, 3) if level % 2 == 0 else F(8, 3)
        assert abs(qsum - sum_limit).compare(tol_sum) < 0, level
        sums[level] = qsum
    # the full qv-of-sum sequence is not Cauchy: consecutive gaps stay > 1
    prev = qv_of_sum(x, y, 4, 1)
    for level in range(5, 19):
        cur = qv_of_sum(x, y, level, 1)
        assert abs(cur - prev).compare(QuadValue(1, 0)) > 0, level
        prev = cur
    report("06 covariation counterexample", True)


def test_criterion_07_modulus_upper_bounds():
    start = time.time()
    grid = 12
    for rep in sweep_all_steps(fn("all_plus"), grid):
        assert rep.scan_max.compare(rep.omega) <= 0, rep.h
    for spec in SCAN_SCHEMES:
        f = fn(spec)
        for rep in sweep_all_steps(f, grid):
            assert rep.scan_max.compare(SQRT2 * rep.omega) <= 0, (spec, rep.h)
    report("07 modulus bounds, grid 12, all h", True, f"({time.time() - start:.1f}s)")


def test_criterion_08_modulus_sharpness_witnesses():
    # witness_ratios verifies each exact identity internally and raises on
    # any mismatch; here we re-check the closed forms and the ratio targets
    part_a = witness_ratios("part_a", 1, 12)
    for row in part_a:
        h_n = F(2, 3 * (1 << row.n))
        assert row.increment == omega(h_n) - QuadValue(1, 1) * h_n, row.n
    part_b = witness_ratios("part_b", 1, 12)
    for row in part_b:
        h_n = F(2, 3 * (1 << row.n))
        assert row.increment == SQRT2 * omega(h_n) - QuadValue(2, 1) * h_n, row.n
    ratio_a = float(part_a[-1].ratio_decimal)
    ratio_b = float(part_b[-1].ratio_decimal)
    ok = ratio_a >= 0.98 and ratio_b >= 1.40
    report("08 sharpness witnesses n<=12", ok, f"(ratios {ratio_a:.5f}, {ratio_b:.5f})")
    assert ok


def test_criterion_09_coefficient_round_trip():
    import numpy as np

    for spec in SCAN_SCHEMES:
        f = fn(spec)
        rows = recover_rows(f, 12)
        for m, row in enumerate(rows):
            assert np.array_equal(row, f.row(m)), (spec, m)
    report("09 coefficient round-trip m<=12", True)


def test_criterion_10a_square_residual_bound():
    square = RationalPolynomial.parse("0,0,1")
    hat = fn("all_plus")
    for level in range(1, 19):
        res = abs(ito_residual(square, hat, level, 1))
        assert res.compare(F(1, 1 << (level - 1))) <= 0, level
    report("10a u**2 residual <= 2**(1-n), n<=18", True)


def test_criterion_10b_cube_residual_at_16():
    cube = RationalPolynomial.parse("0,0,0,1")
    res = abs(ito_residual(cube, fn("all_plus"), 16, 1))
    ok = res.compare(F(1, 100)) < 0
    report("10b u**3 residual at n=16 below 1e-2", ok, f"(|R| = {res.decimal(6)})")
    assert ok, (
        f"|R| at n=16 is {res.decimal(6)} (confirmed by an independent float "
        "oracle), above the stated 1e-2.  The residual decays like 2**(-n/2) "
        f"(n=10: 0.107207, n=12: 0.055084, n=14: 0.027915, n=16: {res.decimal(6)}), "
        "so the stated bound first holds at n=17 (~0.00995); at the stated "
        "level n=16 it is unattainable."
    )
