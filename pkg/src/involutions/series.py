"""Truncated power-series algebra over exact rationals.

Coefficients are stored as ordinary power-series coefficients c(n); the
exponential-generating-function view multiplies by n! at the boundary
(`egf_coefficient`).  Operations are exact through the stated order and never
silently extend it.
"""

from __future__ import annotations

from fractions import Fraction

from .exactnum import factorial
from .involution import involution_number, umbral_derivative_coeffs
from .partialsum import partial_sum


class TruncatedEGF:
    """Order-N truncation of sum c(n) x^n with Fraction coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        coeffs = coeffs[: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def zero(cls, order: int) -> "TruncatedEGF":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedEGF":
        return cls([1], order)

    @classmethod
    def x_power(cls, k: int, order: int, coeff=1) -> "TruncatedEGF":
        coeffs = [Fraction(0)] * (order + 1)
        if k <= order:
            coeffs[k] = Fraction(coeff)
        return cls(coeffs, order)

    def coefficient(self, n: int) -> Fraction:
        if n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def egf_coefficient(self, n: int) -> Fraction:
        """n! times the n-th coefficient: the sequence value in EGF view."""
        return self.coefficient(n) * factorial(n)

    def truncate(self, order: int) -> "TruncatedEGF":
        if order > self.order:
            raise ValueError("cannot extend the truncation order")
        return TruncatedEGF(self.coeffs[: order + 1], order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedEGF):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __add__(self, other: "TruncatedEGF") -> "TruncatedEGF":
        order = min(self.order, other.order)
        return TruncatedEGF(
            [self.coeffs[n] + other.coeffs[n] for n in range(order + 1)], order
        )

    def __sub__(self, other: "TruncatedEGF") -> "TruncatedEGF":
        order = min(self.order, other.order)
        return TruncatedEGF(
            [self.coeffs[n] - other.coeffs[n] for n in range(order + 1)], order
        )

    def __neg__(self) -> "TruncatedEGF":
        return TruncatedEGF([-c for c in self.coeffs], self.order)

    def __repr__(self):
        return f"TruncatedEGF({self.coeffs!r}, order={self.order})"


def series_mul(a: TruncatedEGF, b: TruncatedEGF) -> TruncatedEGF:
    """Exact Cauchy product, truncated to the smaller order."""
    order = min(a.order, b.order)
    out = [Fraction(0)] * (order + 1)
    for i in range(order + 1):
        ai = a.coeffs[i]
        if ai == 0:
            continue
        for j in range(order + 1 - i):
            out[i + j] += ai * b.coeffs[j]
    return TruncatedEGF(out, order)


def series_derive(a: TruncatedEGF) -> TruncatedEGF:
    """Termwise derivative; loses one order."""
    if a.order == 0:
        return TruncatedEGF.zero(0)
    return TruncatedEGF(
        [n * a.coeffs[n] for n in range(1, a.order + 1)], a.order - 1
    )


def series_integrate(a: TruncatedEGF) -> TruncatedEGF:
    """Termwise antiderivative with constant 0; gains one order."""
    out = [Fraction(0)]
    out += [a.coeffs[n] / (n + 1) for n in range(a.order + 1)]
    return TruncatedEGF(out, a.order + 1)


def series_exp(s: TruncatedEGF) -> TruncatedEGF:
    """exp of a series with zero constant term, via E' = s' E."""
    if s.coeffs[0] != 0:
        raise ValueError("series_exp requires zero constant term")
    order = s.order
    out = [Fraction(0)] * (order + 1)
    out[0] = Fraction(1)
    for n in range(order):
        # (n+1) e(n+1) = sum_{k=0}^{n} (k+1) s(k+1) e(n-k)
        acc = Fraction(0)
        for k in range(n + 1):
            if k + 1 <= order:
                acc += (k + 1) * s.coeffs[k + 1] * out[n - k]
        out[n + 1] = acc / (n + 1)
    return TruncatedEGF(out, order)


def cycle_egf_exponent(l: int, order: int) -> TruncatedEGF:
    """x + x^2/2 + ... + x^l/l, truncated."""
    coeffs = [Fraction(0)] * (order + 1)
    for j in range(1, min(l, order) + 1):
        coeffs[j] = Fraction(1, j)
    return TruncatedEGF(coeffs, order)


def involution_egf(order: int) -> TruncatedEGF:
    """exp(x + x^2/2): the EGF of the involution numbers."""
    return series_exp(cycle_egf_exponent(2, order))


def exp_x(order: int) -> TruncatedEGF:
    return series_exp(TruncatedEGF.x_power(1, order))


def partial_sum_egf_check(order: int) -> bool:
    """EGF of the partial sums: exp(x+x^2/2) + exp(x) * integral of exp(t^2/2)."""
    if order < 3:
        raise ValueError("requires order >= 3")
    half_square = TruncatedEGF.x_power(2, order - 1, Fraction(1, 2))
    integral = series_integrate(series_exp(half_square))
    rhs = involution_egf(order) + series_mul(exp_x(order), integral)
    return all(
        rhs.egf_coefficient(n) == partial_sum(n) for n in range(order + 1)
    )


def partial_sum_transform(w: TruncatedEGF) -> TruncatedEGF:
    """w(x) + e^x * integral_0^x e^(-t) w(t) dt."""
    order = w.order
    em = series_exp(TruncatedEGF.x_power(1, order, -1))
    inner = series_integrate(series_mul(em, w)).truncate(order)
    return w + series_mul(exp_x(order), inner)


def lemma_partial_sums_check(w: TruncatedEGF, order: int | None = None) -> bool:
    """The transform above turns EGF coefficients into their partial sums."""
    if order is None:
        order = w.order
    if order < 2:
        raise ValueError("requires order >= 2")
    g = partial_sum_transform(w.truncate(order))
    running = Fraction(0)
    for n in range(order + 1):
        running += w.egf_coefficient(n)
        if g.egf_coefficient(n) != running:
            return False
    return True


def umbral_derivative_check(m: int, order: int = 30) -> bool:
    """m-th derivative of exp(x+x^2/2) equals exp(x+x^2/2) times the
    umbral coefficient polynomial, through order-m terms."""
    f = involution_egf(order)
    deriv = f
    for _ in range(m):
        deriv = series_derive(deriv)
    poly = umbral_derivative_coeffs(m)
    poly_series = TruncatedEGF(
        [Fraction(poly.coefficient(k)) for k in range(order + 1)], order
    )
    return series_mul(f, poly_series).truncate(order - m) == deriv


def involution_egf_check(order: int = 30) -> bool:
    f = involution_egf(order)
    return all(f.egf_coefficient(n) == involution_number(n) for n in range(order + 1))
