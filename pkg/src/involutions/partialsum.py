"""Partial sums of the involution numbers and the related valuation sums."""

from __future__ import annotations

import threading
from fractions import Fraction

from .exactnum import binomial
from .involution import double_factorial_odd, involution_number


class PartialSumTable:
    """Memoized a(0..N) via a(n) = 2a(n-1) + (n-2)a(n-2) - (n-1)a(n-3)."""

    def __init__(self):
        self.values = [1, 2, 4]
        self._lock = threading.Lock()

    def get(self, n: int) -> int:
        if n < 0:
            raise ValueError("partial sum of negative index")
        if n >= len(self.values):
            with self._lock:
                while len(self.values) <= n:
                    m = len(self.values)
                    v = self.values
                    self.values.append(
                        2 * v[m - 1] + (m - 2) * v[m - 2] - (m - 1) * v[m - 3]
                    )
        return self.values[n]


_TABLE = PartialSumTable()


def partial_sum(n: int) -> int:
    """a(n) = I(0) + I(1) + ... + I(n), via the three-term recurrence."""
    return _TABLE.get(n)


def partial_sum_by_binomial(n: int) -> int:
    """The shifted-binomial form  sum_k (2k)!/(k! 2^k) C(n+1, 2k+1)."""
    total = 0
    for k in range(0, (n + 1) // 2 + 1):
        c = binomial(n + 1, 2 * k + 1)
        if c == 0:
            continue
        total += double_factorial_odd(k) * c
    return total


def partial_sum_running(n: int) -> int:
    """Direct running sum of involution numbers, as an independent check."""
    return sum(involution_number(j) for j in range(n + 1))


def cauchy_alternating_sum(n: int) -> int:
    """sum_{k=1}^{n} (-1)^(n-k) C(n,k) a(k-1).

    Equals (2m)!/(2^m m!) for n = 2m+1 and 0 for n = 2m.
    """
    if n < 1:
        raise ValueError("requires n >= 1")
    total = 0
    for k in range(1, n + 1):
        total += (-1) ** (n - k) * binomial(n, k) * partial_sum(k - 1)
    return total


def cauchy_even_identity_check(m: int) -> bool:
    """sum_j C(2m,2j) a(2j-1) == sum_j C(2m,2j-1) a(2j-2)."""
    if m < 1:
        raise ValueError("requires m >= 1")
    lhs = sum(binomial(2 * m, 2 * j) * partial_sum(2 * j - 1) for j in range(1, m + 1))
    rhs = sum(
        binomial(2 * m, 2 * j - 1) * partial_sum(2 * j - 2) for j in range(1, m + 1)
    )
    return lhs == rhs


def F_sum(alpha: int, beta: int, k: int) -> int:
    """sum_{j=0}^{2k-1} (2j+alpha)^beta (2j)!/(j! 2^j) C(4k-1, 2j).

    At beta = 0 this reduces to the involution number I(4k-1) regardless of
    alpha.
    """
    if k < 1:
        raise ValueError("requires k >= 1")
    if beta < 0:
        raise ValueError("requires beta >= 0")
    total = 0
    for j in range(2 * k):
        total += (
            (2 * j + alpha) ** beta
            * double_factorial_odd(j)
            * binomial(4 * k - 1, 2 * j)
        )
    return total


def b_k(k: int) -> Fraction:
    """sum_{j=0}^{2k-1} (2j)!/(j! 2^j) C(4k-1,2j) / (2j+1), an exact rational.

    Satisfies 4k * b(k) = a(4k-1); not all summands are integers.
    """
    if k < 1:
        raise ValueError("requires k >= 1")
    total = Fraction(0)
    for j in range(2 * k):
        total += Fraction(
            double_factorial_odd(j) * binomial(4 * k - 1, 2 * j), 2 * j + 1
        )
    return total
