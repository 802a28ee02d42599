from fractions import Fraction

import mpmath
import pytest

from involutions.asymptotic import (
    beta_closed_form,
    beta_series_extraction,
    estimate_closed_form,
    estimate_saddle,
    eta_power_laurent,
    fit_phi_coefficients,
    log_exact_count,
    log_factorial,
    phi_at,
    solve_saddle,
)
from involutions.involution import involution_number


def ratio(n, l):
    est = estimate_saddle(n, l)
    return float(mpmath.exp(est.log_value - log_exact_count(n, l)))


def test_solve_saddle_examples():
    sol = solve_saddle(12, 2)
    # r + r^2 = 12 has the positive root 3
    assert abs(sol.r_plus - 3) < 1e-10
    assert abs(solve_saddle(100, 1).r_plus - 100) == 0
    sol3 = solve_saddle(1000, 3)
    value = sol3.r_plus + sol3.r_plus**2 + sol3.r_plus**3
    assert abs(value - 1000) < 1e-9


def test_solve_saddle_residual_bound():
    for n in (10, 100, 10**6):
        for l in (2, 3, 4, 7):
            sol = solve_saddle(n, l)
            assert abs(sol.residual) < 1e-12


def test_solve_saddle_preconditions():
    with pytest.raises(ValueError):
        solve_saddle(0, 2)
    with pytest.raises(ValueError):
        solve_saddle(10, 2, tol=0)


def test_log_factorial_exact_summation():
    assert log_factorial(0) == 0
    with mpmath.mp.workdps(40):
        assert abs(log_factorial(5) - mpmath.ln(120)) < 1e-30
        assert abs(log_factorial(100) - mpmath.ln(mpmath.factorial(100))) < 1e-25


def test_saddle_estimate_accuracy_involutions():
    # first-order estimate against exact involution counts
    assert abs(ratio(100, 2) - 1) < 0.05
    assert abs(ratio(1000, 2) - 1) < 0.01
    est = estimate_saddle(1000, 2)
    exact = mpmath.ln(mpmath.mpf(involution_number(1000)))
    assert abs(est.log_value - exact) < 0.01 * abs(exact)


def test_saddle_estimate_accuracy_larger_l():
    assert abs(ratio(200, 3) - 1) < 0.06
    assert abs(ratio(100, 4) - 1) < 0.08


def test_eta_power_laurent_l2():
    # ((1-x^2)/(1-x))^(1/2) = (1+x)^(1/2) = 1 + x/2 - x^2/8 + ...
    series = eta_power_laurent(2, 1, 4)
    assert series[0] == 1
    assert series[1] == Fraction(1, 2)
    assert series[2] == Fraction(-1, 8)


def test_beta_extraction_examples():
    assert beta_series_extraction(2, 1) == 1
    assert beta_series_extraction(3, 1) == Fraction(5, 6)
    assert beta_series_extraction(3, 2) == Fraction(1, 2)
    assert beta_series_extraction(4, 2) == Fraction(3, 8)


def test_beta_closed_form_endpoints():
    assert beta_closed_form(2, 2) == Fraction(1, 2)
    assert beta_closed_form(2, 0) == Fraction(-1, 4)
    assert beta_closed_form(3, 0) == Fraction(-1, 3) * (
        Fraction(1, 2) + Fraction(1, 3)
    )
    assert beta_closed_form(1, 1) == 1


def test_printed_beta_disagrees_with_extraction():
    # the printed interior coefficient at l=2 is 3/2; extraction gives 1,
    # and only the extracted value reproduces exp(sqrt(n)) growth for
    # involutions, so both are exposed
    assert beta_closed_form(2, 1) == Fraction(3, 2)
    assert beta_series_extraction(2, 1) == 1


def test_closed_form_estimate_stirling_vs_printed():
    est = estimate_closed_form(500, 2)
    assert est.log_printed - est.log_stirling == 500
    exact = mpmath.ln(mpmath.mpf(involution_number(500)))
    assert abs(est.log_stirling - exact) < 0.02 * abs(exact)


def test_closed_form_matches_saddle_estimate():
    # extracted-beta closed form tracks the direct saddle assembly
    for n in (200, 1000):
        saddle = estimate_saddle(n, 2)
        closed = estimate_closed_form(n, 2)
        assert abs(closed.log_stirling - saddle.log_value) < 0.5


def test_estimate_closed_form_preconditions():
    with pytest.raises(ValueError):
        estimate_closed_form(10, 2, beta_source="other")
    with pytest.raises(ValueError):
        estimate_closed_form(0, 2)


def test_phi_fit_recovers_betas_l2():
    coeffs = fit_phi_coefficients(2)
    assert abs(coeffs[2] - 0.5) < 1e-9
    assert abs(coeffs[1] - 1.0) < 1e-9
    assert abs(coeffs[0] - (-0.25)) < 1e-6


def test_phi_fit_recovers_betas_l3():
    coeffs = fit_phi_coefficients(3)
    assert abs(coeffs[3] - float(Fraction(1, 3))) < 1e-9
    assert abs(coeffs[0] - float(beta_closed_form(3, 0))) < 1e-5
    for k in (1, 2):
        assert abs(coeffs[k] - float(beta_series_extraction(3, k))) < 1e-7


def test_phi_at_positive_and_growing():
    values = [phi_at(n, 2) for n in (100, 1000, 10000)]
    assert all(v > 0 for v in values)
    assert values[0] < values[1] < values[2]
