"""Saddle-point first-order estimates for bounded-cycle permutation counts.

All floating computations run through mpmath at configurable precision and
stay in log-space until the end; the exponent-polynomial coefficients are
exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mp, mpf

from .cyclecount import restricted_count

DEFAULT_DPS = 40


@dataclass
class SaddleSolution:
    n: int
    l: int
    r_plus: mpmath.mpf
    residual: mpmath.mpf


def _saddle_value(r, l: int):
    return sum(r**j for j in range(1, l + 1))


def solve_saddle(n: int, l: int, tol: float = 1e-12, max_iter: int = 100) -> SaddleSolution:
    """Unique positive root of r + r^2 + ... + r^l = n.

    Newton iteration from n^(1/l) with analytic derivative; falls back to
    bisection on the bracket (0, n] if Newton stalls.
    """
    if n < 1 or l < 1 or tol <= 0:
        raise ValueError("requires n >= 1, l >= 1, tol > 0")
    if l == 1:
        return SaddleSolution(n, l, mpf(n), mpf(0))
    with mp.workdps(DEFAULT_DPS):
        target = mpf(n)
        r = target ** (mpf(1) / l)
        converged = False
        for _ in range(max_iter):
            f = _saddle_value(r, l) - target
            if abs(f) < tol:
                converged = True
                break
            fprime = sum(j * r ** (j - 1) for j in range(1, l + 1))
            step = f / fprime
            r = r - step
            if r <= 0:
                break
        if not converged or not (0 < r <= target):
            lo, hi = mpf("1e-30"), target
            for _ in range(400):
                mid = (lo + hi) / 2
                if _saddle_value(mid, l) < target:
                    lo = mid
                else:
                    hi = mid
                r = (lo + hi) / 2
                if abs(_saddle_value(r, l) - target) < tol:
                    converged = True
                    break
        residual = _saddle_value(r, l) - target
        if abs(residual) >= tol:
            raise ArithmeticError(
                f"saddle solver failed to reach tolerance {tol} at (n={n}, l={l})"
            )
        return SaddleSolution(n, l, r, residual)


def log_factorial(n: int) -> mpmath.mpf:
    """ln n! by exact summation of ln j (isolates saddle error from Stirling)."""
    with mp.workdps(DEFAULT_DPS):
        return mpmath.fsum(mpmath.ln(j) for j in range(1, n + 1))


@dataclass
class SaddleEstimate:
    n: int
    l: int
    r_plus: mpmath.mpf
    log_value: mpmath.mpf

    @property
    def value(self) -> mpmath.mpf:
        return mpmath.exp(self.log_value)


def estimate_saddle(n: int, l: int, tol: float = 1e-12) -> SaddleEstimate:
    """First-order saddle-point estimate, assembled entirely in log-space:

    ln n! - ln sqrt(2 pi l n) + sum_j r^j / j - n ln r   at r = r_plus.
    """
    sol = solve_saddle(n, l, tol)
    with mp.workdps(DEFAULT_DPS):
        r = sol.r_plus
        log_value = (
            log_factorial(n)
            - mpf(1) / 2 * mpmath.ln(2 * mpmath.pi * l * n)
            + mpmath.fsum(r**j / j for j in range(1, l + 1))
            - n * mpmath.ln(r)
        )
        return SaddleEstimate(n, l, r, log_value)


def log_exact_count(n: int, l: int) -> mpmath.mpf:
    """ln of the exact count, from the integer recurrence."""
    with mp.workdps(DEFAULT_DPS):
        return mpmath.ln(mpf(restricted_count(n, l)))


def _binomial_fraction(e: Fraction, m: int) -> Fraction:
    """Generalized binomial coefficient C(e, m) for rational e."""
    out = Fraction(1)
    for i in range(m):
        out *= (e - i) / (m - i)
    return out


def eta_power_laurent(l: int, k: int, order: int) -> list[Fraction]:
    """Coefficients of x^0..x^order in ((1-x^l)/(1-x))^((l-k)/l), x = 1/r.

    eta(r)^(l-k) = r^(l-k) times this series; the generalized binomial
    series is evaluated with exact rational arithmetic.
    """
    e = Fraction(l - k, l)
    # (1 - x^l)^e
    a = [Fraction(0)] * (order + 1)
    for m in range(order // l + 1):
        a[l * m] = _binomial_fraction(e, m) * (-1) ** m
    # (1 - x)^(-e) = sum C(e+m-1, m) x^m
    b = [_binomial_fraction(e + m - 1, m) for m in range(order + 1)]
    out = [Fraction(0)] * (order + 1)
    for i in range(order + 1):
        if a[i] == 0:
            continue
        for j in range(order + 1 - i):
            out[i + j] += a[i] * b[j]
    return out


def beta_series_extraction(l: int, k: int, order: int | None = None) -> Fraction:
    """Exponent-polynomial coefficient beta_k for 0 < k < l, extracted as a
    residue: l/(k(l-k)) times the constant coefficient of eta(r)^(l-k)."""
    if not 0 < k < l:
        raise ValueError("requires 0 < k < l")
    if order is None:
        order = l + 2
    if order < l - k:
        raise ValueError("insufficient order to reach the constant coefficient")
    series = eta_power_laurent(l, k, order)
    return Fraction(l, k * (l - k)) * series[l - k]


def beta_closed_form(l: int, k: int) -> Fraction:
    """Exponent-polynomial coefficients from the stated closed forms.

    beta_l = 1/l and beta_0 = -(1/l) sum_{j=2}^{l} 1/j.  For 0 < k < l the
    stated product formula is returned verbatim for comparison; it disagrees
    with the series extraction (e.g. 3/2 vs 1 at l=2, k=1), and the
    extracted value is what the Stirling-consistent estimate uses.
    """
    if not 0 <= k <= l:
        raise ValueError("requires 0 <= k <= l")
    if k == l:
        return Fraction(1, l)
    if k == 0:
        return -Fraction(1, l) * sum((Fraction(1, j) for j in range(2, l + 1)), Fraction(0))
    out = Fraction(1, k * int_factorial(l - k))
    for m in range(1, l):
        out *= Fraction(l - k, l) + m
    return out


def int_factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


@dataclass
class ClosedFormEstimate:
    """Both assemblies of the closed-form estimate, in log-space.

    log_printed follows the closed form exactly as stated (no -n term in
    the exponent); log_stirling subtracts n, which is what combining the
    saddle estimate with Stirling's formula actually yields.  The two differ
    by the factor e^n; reporting both makes the discrepancy measurable.
    """

    n: int
    l: int
    beta_source: str
    betas: dict[int, Fraction]
    log_printed: mpmath.mpf
    log_stirling: mpmath.mpf


def estimate_closed_form(n: int, l: int, beta_source: str = "extracted") -> ClosedFormEstimate:
    if beta_source not in ("printed", "extracted"):
        raise ValueError("beta_source must be 'printed' or 'extracted'")
    if n < 1 or l < 1:
        raise ValueError("requires n >= 1 and l >= 1")
    betas = {0: beta_closed_form(l, 0), l: beta_closed_form(l, l)}
    for k in range(1, l):
        if beta_source == "printed":
            betas[k] = beta_closed_form(l, k)
        else:
            betas[k] = beta_series_extraction(l, k)
    with mp.workdps(DEFAULT_DPS):
        nn = mpf(n)
        exponent = mpf(betas[0].numerator) / betas[0].denominator
        for k in range(1, l + 1):
            coeff = mpf(betas[k].numerator) / betas[k].denominator
            exponent += coeff * nn ** (mpf(k) / l)
        log_printed = (
            -mpf(1) / 2 * mpmath.ln(l)
            + nn * (1 - mpf(1) / l) * mpmath.ln(nn)
            + exponent
        )
        log_stirling = log_printed - nn
    return ClosedFormEstimate(n, l, beta_source, betas, log_printed, log_stirling)


def phi_at(n: int, l: int, tol: float = 1e-20) -> mpmath.mpf:
    """Phi(eta) = sum_j r^j / j - n ln(r / eta) at the saddle, eta = n^(1/l)."""
    sol = solve_saddle(n, l, tol)
    with mp.workdps(DEFAULT_DPS):
        r = sol.r_plus
        eta = mpf(n) ** (mpf(1) / l)
        return mpmath.fsum(r**j / j for j in range(1, l + 1)) - n * mpmath.ln(r / eta)


def fit_phi_coefficients(l: int, sample_ns=None, tail_terms: int = 4) -> dict[int, float]:
    """Fit Phi(eta) against powers eta^k, k = -tail..l, in log-space samples.

    Returns the fitted coefficients for k = 0..l; used to confirm the
    closed-form beta_0 and beta_l numerically.  A few negative powers are
    included in the basis to absorb the 1/eta tail of the expansion.  The
    normal equations are solved at high precision (the design matrix spans
    many orders of magnitude); with as many samples as basis functions this
    is plain interpolation.
    """
    powers = list(range(-tail_terms, l + 1))
    if sample_ns is None:
        # spread within [1e4, 1e6], at least as many samples as unknowns
        count = max(len(powers), 6)
        sample_ns = [
            int(round(10 ** (4 + 2 * i / (count - 1)))) for i in range(count)
        ]
    with mp.workdps(DEFAULT_DPS):
        rows = []
        rhs = []
        for n in sample_ns:
            eta = mpf(n) ** (mpf(1) / l)
            rows.append([eta**k for k in powers])
            rhs.append(phi_at(n, l))
        a = mpmath.matrix(rows)
        b = mpmath.matrix(rhs)
        if len(sample_ns) == len(powers):
            coeffs = mpmath.lu_solve(a, b)
        else:
            coeffs = mpmath.lu_solve(a.T * a, a.T * b)
        return {k: float(coeffs[i]) for i, k in enumerate(powers) if k >= 0}
