"""Exact integer/rational arithmetic and number-theoretic primitives.

Integers are plain Python ints (arbitrary precision already), rationals are
``fractions.Fraction`` (always reduced, positive denominator).  Partitions are
weakly decreasing tuples of positive ints.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator


class ZeroValuationError(ValueError):
    """Raised when the p-adic valuation of 0 is requested."""


def is_prime(n: int) -> bool:
    """Deterministic trial division; intended for n <= 10**6 or so."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_upto(bound: int) -> list[int]:
    """All primes <= bound, ascending."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(bound**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(bound + 1) if sieve[p]]


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of negative argument")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k) with the 0-convention outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def as_partition(parts) -> tuple[int, ...]:
    """Validate and canonicalize a partition (weakly decreasing positive parts)."""
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    return parts


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n in reverse-lexicographic order, largest part first."""
    if n < 0:
        raise ValueError("partitions of negative n")
    if max_part is None:
        max_part = n

    def gen(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from gen(remaining - part, part, prefix + (part,))

    yield from gen(n, max_part, ())


def multinomial(n: int, lam) -> int:
    """n! / prod(part!) for a partition lam of n."""
    lam = as_partition(lam)
    if sum(lam) != n:
        raise ValueError(f"partition {lam} does not sum to {n}")
    result = math.factorial(n)
    for part in lam:
        result //= math.factorial(part)
    return result


def digit_sum(n: int, p: int) -> int:
    """Sum of the base-p digits of n."""
    _require_prime(p)
    if n < 0:
        raise ValueError("digit_sum requires n >= 0")
    s = 0
    while n:
        n, r = divmod(n, p)
        s += r
    return s


def nu_factorial(n: int, p: int) -> int:
    """nu_p(n!) via Legendre's formula (n - s_p(n)) / (p - 1)."""
    _require_prime(p)
    return (n - digit_sum(n, p)) // (p - 1)


def nu_int(x: int, p: int) -> int:
    """Largest e with p**e dividing x; x must be nonzero."""
    _require_prime(p)
    if x == 0:
        raise ZeroValuationError("valuation of 0 is undefined")
    x = abs(x)
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def nu_rat(x: Fraction, p: int) -> int:
    """nu_p extended to nonzero rationals; may be negative."""
    _require_prime(p)
    if x == 0:
        raise ZeroValuationError("valuation of 0 is undefined")
    num, den = x.numerator, x.denominator
    v = 0
    if num % p == 0:
        v = nu_int(num, p)
    if den % p == 0:
        v -= nu_int(den, p)
    return v
