"""Closed-form bound values, conventions, and parameter sweeps."""

import math
from fractions import Fraction

import pytest

from mucodes import bounds
from mucodes.bounds import BoundParameterError


def test_size_constants():
    assert bounds.size_constant(2) == Fraction(3, 64)
    assert bounds.size_constant(4) == Fraction(63, 1024)
    assert round(float(bounds.size_constant(2)), 5) == 0.04688
    assert round(float(bounds.size_constant(4)), 5) == 0.06152


def test_sphere_volume():
    assert bounds.sphere_volume(2, 4, 1) == 5
    assert bounds.sphere_volume(4, 3, 2) == 37
    assert bounds.sphere_volume(2, 4, -1) == 0
    assert bounds.sphere_volume(2, 4, 4) == 16
    assert bounds.sphere_volume(2, 4, 99) == 16
    # monotone nondecreasing in the radius
    for n in (5, 9):
        vols = [bounds.sphere_volume(2, n, r) for r in range(-1, n + 1)]
        assert vols == sorted(vols)
        assert vols[-1] == 2 ** n


def test_mu_bounds():
    report = bounds.mu_bounds(2, 4)
    assert report.lower == Fraction(3, 16)  # c_2 * 2^4 / 4
    assert report.upper == 2
    assert bounds.mu_bounds(4, 8).upper == 4096
    with pytest.raises(BoundParameterError):
        bounds.mu_bounds(3, 4)


def test_wmu_bounds():
    report = bounds.wmu_bounds(2, 6, 4)
    assert report.upper == Fraction(64, 3)
    assert bounds.wmu_bounds(2, 6, 1).upper == Fraction(64, 6)
    ratio = report.lower / report.upper
    assert ratio == bounds.size_constant(2)
    with pytest.raises(BoundParameterError):
        bounds.wmu_bounds(2, 6, 6)


def test_gv_rate():
    assert bounds.gv_rate(4, 2) == 0.0
    assert bounds.gv_rate(4, 0) == 1.0
    assert abs(bounds.gv_rate(50, 5) - (1 - bounds.binary_entropy(0.1))) < 1e-12
    assert round(bounds.gv_rate(50, 5), 4) == 0.531
    with pytest.raises(BoundParameterError):
        bounds.gv_rate(10, 6)


def test_constrained_gv_small_d_conventions():
    report = bounds.constrained_gv_wmu(2, 50, 1, 1)
    terms = dict(report.terms)
    assert terms["L0"] == 1 and terms["L1"] == 0 and terms["L2"] == 0
    assert report.lower == bounds.size_constant(2) * 2 ** 50 / 50


def test_constrained_gv_errors():
    with pytest.raises(BoundParameterError):
        bounds.constrained_gv_wmu(2, 10, 8, 1)  # precondition n-kappa-1 >= 2 ell
    with pytest.raises(BoundParameterError):
        bounds.constrained_gv_wmu(2, 10, 0, 1)  # kappa out of range


def test_constrained_gv_below_wmu_upper():
    for kappa in (1, 5, 10):
        upper = bounds.wmu_bounds(2, 50, kappa).upper
        for d in (1, 3, 7):
            assert bounds.constrained_gv_wmu(2, 50, kappa, d).lower <= upper


def test_gyorfi():
    assert bounds.gyorfi_lb(4, 2, 2).lower == 6
    assert bounds.gyorfi_lb(8, 2, 4).lower == math.comb(8, 4)
    assert bounds.gyorfi_lb(4, 2, 0).lower == 1
    with pytest.raises(BoundParameterError):
        bounds.gyorfi_lb(4, 3, 2)
    with pytest.raises(BoundParameterError):
        bounds.gyorfi_lb(8, 4, 4)  # A(n, d) not supplied


def test_balanced_wmu_bounds():
    r = bounds.balanced_wmu_bounds(2, 4, 1)
    assert r.lower == 1 and r.upper == Fraction(6, 4)
    assert bounds.balanced_wmu_bounds(4, 4, 2).upper == 32
    assert bounds.balanced_wmu_bounds(2, 8, 1).upper == Fraction(70, 8)
    with pytest.raises(BoundParameterError):
        bounds.balanced_wmu_bounds(2, 5, 1)


def test_apd_bounds():
    r = bounds.apd_mu_bounds(12)
    assert r.upper == Fraction(4096, 12)
    assert r.lower is None and "c3" in r.note
    assert bounds.apd_mu_bounds(12, c3=0.01).lower == pytest.approx(0.01 * 4096 / 12)


def test_dyck_asymptotic_limit():
    # cap parameter 2 in the closed form: the value is exactly 1 for all n
    for n in (5, 20, 40):
        assert bounds.dyck_asymptotic(n, 2) == pytest.approx(1.0)
    assert bounds.dyck_asymptotic(4, 1) == pytest.approx(0.0)


def test_avoid_string_lb():
    assert bounds.avoid_string_lb(2, 3, 4, 1) == 8
    assert bounds.avoid_string_lb(2, 8, 4, 1) == 128
    assert bounds.avoid_string_lb(2, 8, 2, 10) == 0
    # exhaustive check: 8-bit strings avoiding the window 0000
    count = sum(
        1 for v in range(256) if "0000" not in format(v, "08b")
    )
    assert count == 208
    assert count >= bounds.avoid_string_lb(2, 8, 4, 1)


def test_bch_rates():
    for t, expected in ((1, (0.9902, 0.9919)), (3, (0.9707, 0.9903)), (5, (0.9511, 0.9896))):
        got = bounds.bch_wmu_rates(10, t)
        assert round(got[0], 4) == expected[0]
        assert round(got[1], 4) == expected[1]


def test_lower_never_exceeds_upper_sweep():
    for q in (2, 4):
        for n in (4, 8, 16, 32, 64):
            assert bounds.mu_bounds(q, n).lower <= bounds.mu_bounds(q, n).upper
            for kappa in (1, n // 2, n - 1):
                r = bounds.wmu_bounds(q, n, kappa)
                assert r.lower <= r.upper
            if n % 2 == 0:
                for kappa in (1, 2):
                    r = bounds.balanced_wmu_bounds(q, n, kappa)
                    if r.lower is not None:
                        assert r.lower <= r.upper


def test_report_log2_rates():
    r = bounds.mu_bounds(2, 10)
    assert r.log2_rate_upper == pytest.approx(math.log2(1024 / 20) / 10)
    assert bounds.apd_mu_bounds(8).log2_rate_lower is None
