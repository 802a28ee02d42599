"""How fast do bounded-cycle permutation counts grow?

The saddle-point method approximates d(n, l) from the positive root of
r + r^2 + ... + r^l = n.  This demo tracks the estimate against exact
counts, extracts the exponent-polynomial coefficients as exact rationals,
and confirms them with a high-precision numerical fit.
"""

import mpmath

from involutions import (
    beta_closed_form,
    beta_series_extraction,
    estimate_saddle,
    fit_phi_coefficients,
    log_exact_count,
    solve_saddle,
)

print("Saddle point r(+) for l = 2 (root of r + r^2 = n):")
for n in (12, 100, 1000):
    sol = solve_saddle(n, 2)
    print(f"  n={n:5d}: r = {mpmath.nstr(sol.r_plus, 10)}")

print()
print("Estimate vs exact count, l = 2 (the ratio tightens as n grows):")
for n in (50, 100, 500, 1000):
    est = estimate_saddle(n, 2)
    ratio = mpmath.exp(est.log_value - log_exact_count(n, 2))
    print(f"  n={n:5d}: ratio estimate/exact = {mpmath.nstr(ratio, 6)}")

print()
print("Exponent-polynomial coefficients for l = 3, as exact rationals:")
print(f"  beta_3 = {beta_closed_form(3, 3)}  (leading: 1/l)")
print(f"  beta_2 = {beta_series_extraction(3, 2)}  (series extraction)")
print(f"  beta_1 = {beta_series_extraction(3, 1)}  (series extraction)")
print(f"  beta_0 = {beta_closed_form(3, 0)}")

print()
print("High-precision fit of the saddle exponent at n in [1e4, 1e6]")
print("recovers the same numbers:")
coeffs = fit_phi_coefficients(3)
for k in range(4):
    print(f"  fitted coefficient of n^({k}/3): {coeffs[k]:.9f}")
