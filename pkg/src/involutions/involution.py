"""Involution numbers, involution polynomials and their identities."""

from __future__ import annotations

import threading

from .exactnum import binomial, factorial, nu_int


class UniPoly:
    """Dense univariate polynomial with integer coefficients, index = degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __call__(self, t):
        value = 0
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            [self.coefficient(k) + other.coefficient(k) for k in range(n)]
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly([other * c for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "UniPoly":
        """Multiply by t**k."""
        return UniPoly([0] * k + self.coeffs)

    def __repr__(self):
        return f"UniPoly({self.coeffs!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficient(k)
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        s = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


class InvolutionTable:
    """Memoized I(0..N) via the recurrence I(n) = I(n-1) + (n-1) I(n-2).

    Extension is lock-protected so the shared table is safe under
    concurrent callers.
    """

    def __init__(self):
        self.values = [1, 1]
        self._lock = threading.Lock()

    def get(self, n: int) -> int:
        if n < 0:
            raise ValueError("involution number of negative index")
        if n >= len(self.values):
            with self._lock:
                while len(self.values) <= n:
                    m = len(self.values)
                    self.values.append(
                        self.values[m - 1] + (m - 1) * self.values[m - 2]
                    )
        return self.values[n]


_TABLE = InvolutionTable()


def involution_number(n: int) -> int:
    """Number of involutions in the symmetric group on n symbols (OEIS A000085)."""
    return _TABLE.get(n)


def involution_number_by_sum(n: int) -> int:
    """The finite sum  sum_j C(n,2j) C(2j,j) j!/2^j, computed independently."""
    total = 0
    for j in range(n // 2 + 1):
        total += binomial(n, 2 * j) * binomial(2 * j, j) * factorial(j) // 2**j
    return total


def double_factorial_odd(j: int) -> int:
    """(2j)! / (j! 2^j), an odd integer; equals (2j-1)!!."""
    return factorial(2 * j) // (factorial(j) * 2**j)


def involution_number_bisplit(n: int, m: int) -> int:
    """sum_k k! C(n,k) C(m,k) I(n-k) I(m-k); equals involution_number(n+m)."""
    total = 0
    for k in range(min(n, m) + 1):
        total += (
            factorial(k)
            * binomial(n, k)
            * binomial(m, k)
            * involution_number(n - k)
            * involution_number(m - k)
        )
    return total


def involution_poly(n: int) -> UniPoly:
    """Generating polynomial of involutions by fixed-point count.

    Coefficient of t^(n-2j) is C(n,2j) (2j)!/(2^j j!).  Value at t=1 is the
    involution number.
    """
    coeffs = [0] * (n + 1)
    for j in range(n // 2 + 1):
        coeffs[n - 2 * j] = binomial(n, 2 * j) * double_factorial_odd(j)
    return UniPoly(coeffs)


def involution_poly_by_recurrence(n: int) -> UniPoly:
    """Same polynomial from P(n) = t P(n-1) + (n-1) P(n-2), P(0)=1, P(1)=t."""
    if n == 0:
        return UniPoly([1])
    prev, cur = UniPoly([1]), UniPoly([0, 1])
    for m in range(2, n + 1):
        prev, cur = cur, cur.shift(1) + (m - 1) * prev
    return cur


def hermite_poly(n: int) -> UniPoly:
    """Probabilistic Hermite polynomial; integer coefficients.

    H(n) = n! sum_j (-1)^j / (j! (n-2j)! 2^j) t^(n-2j).
    """
    coeffs = [0] * (n + 1)
    for j in range(n // 2 + 1):
        coeffs[n - 2 * j] = (-1) ** j * binomial(n, 2 * j) * double_factorial_odd(j)
    return UniPoly(coeffs)


def hermite_relation_check(n: int) -> bool:
    """Involution and Hermite polynomials agree up to alternating signs.

    The coefficient of t^(n-2j) in the involution polynomial must equal
    (-1)^j times the one in the Hermite polynomial.  (This is the real form
    of the i^n H(-it) relation; no complex arithmetic needed.)
    """
    ip = involution_poly(n)
    hp = hermite_poly(n)
    for j in range(n // 2 + 1):
        k = n - 2 * j
        if ip.coefficient(k) != (-1) ** j * hp.coefficient(k):
            return False
    return True


def umbral_derivative_coeffs(m: int) -> UniPoly:
    """Polynomial P with d^m/dx^m exp(x + x^2/2) = exp(x + x^2/2) P(x).

    P(x) = sum_k C(m,k) I(m-k) x^k.
    """
    return UniPoly([binomial(m, k) * involution_number(m - k) for k in range(m + 1)])


def perfect_matchings(n: int) -> int:
    """(n-1)!! for even n, 0 for odd n: involutions without fixed points."""
    if n % 2 == 1:
        return 0
    return double_factorial_odd(n // 2)


def assert_double_factorial_odd(j: int) -> None:
    if nu_int(double_factorial_odd(j), 2) != 0:
        raise AssertionError(f"(2j)!/(j! 2^j) not odd at j={j}")
