"""Permutations with bounded cycle length: counts, cycle-index polynomials,
and the banded Toeplitz determinant representation."""

from __future__ import annotations

import json

from .involution import UniPoly
from .exactnum import as_partition, factorial


def _grade(exponents: tuple[int, ...]) -> int:
    return sum((t + 1) * e for t, e in enumerate(exponents))


class CycleIndexPoly:
    """Multivariate polynomial in Y1..Yl, keyed by exponent vectors.

    The exponent vector (e1..el) of a monomial is the cycle type it counts:
    et copies of a t-cycle.  Stored sparse; monomials are emitted in graded
    lexicographic order for deterministic serialization.
    """

    __slots__ = ("l", "terms")

    def __init__(self, l: int, terms: dict[tuple[int, ...], int] | None = None):
        self.l = l
        self.terms = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff != 0:
                    self.terms[tuple(exps)] = coeff

    def coefficient(self, exponents) -> int:
        return self.terms.get(tuple(exponents), 0)

    def sum_of_coefficients(self) -> int:
        return sum(self.terms.values())

    def is_homogeneous(self, n: int) -> bool:
        """Every monomial satisfies sum_t t * e_t = n."""
        return all(_grade(exps) == n for exps in self.terms)

    def substitute_y1(self) -> UniPoly:
        """Set Y1 = t and all other variables to 1."""
        coeffs: dict[int, int] = {}
        for exps, coeff in self.terms.items():
            k = exps[0] if exps else 0
            coeffs[k] = coeffs.get(k, 0) + coeff
        out = [0] * (max(coeffs, default=0) + 1)
        for k, c in coeffs.items():
            out[k] = c
        return UniPoly(out)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(
            self.terms.items(), key=lambda kv: (-_grade(kv[0]), tuple(-e for e in kv[0]))
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycleIndexPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def to_json(self) -> str:
        doc = {
            "schema": "involutions/cycle-index/1",
            "variables": self.l,
            "terms": [
                {"exponents": list(exps), "coefficient": coeff}
                for exps, coeff in self.sorted_terms()
            ],
        }
        return json.dumps(doc, sort_keys=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for t, e in enumerate(exps, start=1):
                if e == 1:
                    factors.append(f"Y{t}")
                elif e > 1:
                    factors.append(f"Y{t}^{e}")
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{coeff}*" + "*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"CycleIndexPoly(l={self.l}, terms={self.terms!r})"


def restricted_count(n: int, l: int) -> int:
    """Number of permutations of n symbols with every cycle length <= l."""
    if n < 0 or l < 1:
        raise ValueError("requires n >= 0 and l >= 1")
    d = [1]
    for m in range(0, n):
        # d(m+1) = sum_{j=1}^{l} m!/(m-j+1)! d(m+1-j)
        total = 0
        falling = 1
        for j in range(1, l + 1):
            if m + 1 - j < 0:
                break
            total += falling * d[m + 1 - j]
            falling *= m - j + 1
        d.append(total)
    return d[n]


def cycle_index_poly(n: int, l: int) -> CycleIndexPoly:
    """Cycle-index polynomial of the bounded-cycle permutations.

    Built from g(n) = Y1 g(n-1) + (n-1) Y2 g(n-2) + ... +
    (n-1)...(n-l+1) Yl g(n-l); evaluating every variable at 1 gives the
    restricted count.
    """
    if n < 0 or l < 1:
        raise ValueError("requires n >= 0 and l >= 1")
    series: list[CycleIndexPoly] = [CycleIndexPoly(l, {(0,) * l: 1})]
    for m in range(1, n + 1):
        terms: dict[tuple[int, ...], int] = {}
        falling = 1
        for j in range(1, l + 1):
            if m - j < 0:
                break
            for exps, coeff in series[m - j].terms.items():
                bumped = list(exps)
                bumped[j - 1] += 1
                key = tuple(bumped)
                terms[key] = terms.get(key, 0) + falling * coeff
            falling *= m - j
        series.append(CycleIndexPoly(l, terms))
    return series[n]


def statistic_lookup(n: int, l: int, cycle_type) -> int:
    """Number of permutations with the given cycle type (all parts <= l).

    Reads the coefficient off the cycle-index polynomial; the classical
    formula n!/prod(t^et * et!) is kept as an independent cross-check in the
    test suite.
    """
    lam = as_partition(cycle_type)
    if sum(lam) != n:
        raise ValueError(f"cycle type {lam} does not partition {n}")
    if lam and lam[0] > l:
        raise ValueError(f"cycle type {lam} has a part exceeding l={l}")
    exps = [0] * l
    for part in lam:
        exps[part - 1] += 1
    return cycle_index_poly(n, l).coefficient(tuple(exps))


def cycle_type_count(n: int, cycle_type) -> int:
    """n! / prod(t^et * et!): permutations of the given cycle type."""
    lam = as_partition(cycle_type)
    if sum(lam) != n:
        raise ValueError(f"cycle type {lam} does not partition {n}")
    denom = 1
    mult: dict[int, int] = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    for t, e in mult.items():
        denom *= t**e * factorial(e)
    return factorial(n) // denom


class GaussPoly:
    """Sparse multivariate polynomial over the Gaussian integers.

    Coefficients are (re, im) integer pairs; keys are exponent vectors of
    fixed length.  Supports the exact division needed by fraction-free
    elimination.
    """

    __slots__ = ("l", "terms")

    def __init__(self, l: int, terms: dict[tuple[int, ...], tuple[int, int]] | None = None):
        self.l = l
        self.terms = {}
        if terms:
            for exps, (a, b) in terms.items():
                if a or b:
                    self.terms[tuple(exps)] = (a, b)

    @classmethod
    def constant(cls, l: int, a: int, b: int = 0) -> "GaussPoly":
        return cls(l, {(0,) * l: (a, b)})

    @classmethod
    def variable(cls, l: int, t: int, a: int = 1, b: int = 0) -> "GaussPoly":
        """a+bi times the variable Y_t (1-indexed)."""
        exps = [0] * l
        exps[t - 1] = 1
        return cls(l, {tuple(exps): (a, b)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "GaussPoly") -> "GaussPoly":
        terms = dict(self.terms)
        for exps, (a, b) in other.terms.items():
            c, d = terms.get(exps, (0, 0))
            terms[exps] = (a + c, b + d)
        return GaussPoly(self.l, terms)

    def __sub__(self, other: "GaussPoly") -> "GaussPoly":
        return self + (-other)

    def __neg__(self) -> "GaussPoly":
        return GaussPoly(self.l, {e: (-a, -b) for e, (a, b) in self.terms.items()})

    def __mul__(self, other: "GaussPoly") -> "GaussPoly":
        terms: dict[tuple[int, ...], tuple[int, int]] = {}
        for e1, (a, b) in self.terms.items():
            for e2, (c, d) in other.terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                re = a * c - b * d
                im = a * d + b * c
                p, q = terms.get(key, (0, 0))
                terms[key] = (p + re, q + im)
        return GaussPoly(self.l, terms)

    def _leading(self) -> tuple[tuple[int, ...], tuple[int, int]]:
        key = max(self.terms, key=lambda e: (_grade(e), e))
        return key, self.terms[key]

    def exact_div(self, other: "GaussPoly") -> "GaussPoly":
        """Exact quotient self / other; raises if the division is not exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        quotient = GaussPoly(self.l)
        remainder = self
        div_exps, (c, d) = other._leading()
        norm = c * c + d * d
        while not remainder.is_zero():
            lead_exps, (a, b) = remainder._leading()
            mono = tuple(x - y for x, y in zip(lead_exps, div_exps))
            if any(e < 0 for e in mono):
                raise ArithmeticError("inexact polynomial division")
            # (a+bi)/(c+di) over the Gaussian integers
            re_num = a * c + b * d
            im_num = b * c - a * d
            if re_num % norm or im_num % norm:
                raise ArithmeticError("inexact Gaussian-integer division")
            term = GaussPoly(self.l, {mono: (re_num // norm, im_num // norm)})
            quotient = quotient + term
            remainder = remainder - term * other
        return quotient

    def real_part_or_raise(self) -> dict[tuple[int, ...], int]:
        """Real coefficients; raises if any imaginary part survived."""
        out = {}
        for exps, (a, b) in self.terms.items():
            if b != 0:
                raise ArithmeticError(
                    f"nonzero imaginary part {b} at exponents {exps}"
                )
            out[exps] = a
        return out

    def __repr__(self):
        return f"GaussPoly(l={self.l}, terms={self.terms!r})"


def toeplitz_matrix(n: int, l: int) -> list[list[GaussPoly]]:
    """The n x n banded Toeplitz matrix whose determinant is the cycle index.

    With rows/columns indexed 1..n: entry (k, j) is i^(j-k) Y_(j-k+1) on the
    band 0 <= j-k <= l-1, i*j on the subdiagonal k = j+1, and 0 elsewhere.
    (The stated size n+1 does not reproduce the worked 5x5 case at n=5;
    size n does, and matches the restricted counts for all small n.)
    """
    if n < 1 or l < 1:
        raise ValueError("requires n >= 1 and l >= 1")
    ipow = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    rows = []
    for k in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if 0 <= j - k <= l - 1:
                a, b = ipow[(j - k) % 4]
                row.append(GaussPoly.variable(l, j - k + 1, a, b))
            elif k == j + 1:
                row.append(GaussPoly.constant(l, 0, j))
            else:
                row.append(GaussPoly(l))
        rows.append(row)
    return rows


def _det_cofactor(matrix: list[list[GaussPoly]], l: int) -> GaussPoly:
    size = len(matrix)
    if size == 0:
        return GaussPoly.constant(l, 1)
    if size == 1:
        return matrix[0][0]
    total = GaussPoly(l)
    for col in range(size):
        entry = matrix[0][col]
        if entry.is_zero():
            continue
        minor = [row[:col] + row[col + 1 :] for row in matrix[1:]]
        sub = _det_cofactor(minor, l)
        term = entry * sub
        total = total + term if col % 2 == 0 else total - term
    return total


def _det_bareiss(matrix: list[list[GaussPoly]], l: int) -> GaussPoly:
    size = len(matrix)
    if size == 0:
        return GaussPoly.constant(l, 1)
    m = [row[:] for row in matrix]
    sign = 1
    prev = GaussPoly.constant(l, 1)
    for k in range(size - 1):
        if m[k][k].is_zero():
            for swap in range(k + 1, size):
                if not m[swap][k].is_zero():
                    m[k], m[swap] = m[swap], m[k]
                    sign = -sign
                    break
            else:
                return GaussPoly(l)
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
        prev = m[k][k]
    det = m[size - 1][size - 1]
    return det if sign == 1 else -det


def toeplitz_determinant(n: int, l: int, max_n: int = 8) -> CycleIndexPoly:
    """det of the banded Toeplitz matrix, as a verification path for small n.

    Cofactor expansion for sizes up to 6, fraction-free (Bareiss)
    elimination above.  The imaginary parts must cancel identically; a
    surviving one is an error.
    """
    if n < 0 or l < 1:
        raise ValueError("requires n >= 0 and l >= 1")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the verification bound {max_n}")
    if n == 0:
        return CycleIndexPoly(l, {(0,) * l: 1})
    matrix = toeplitz_matrix(n, l)
    det = _det_cofactor(matrix, l) if n <= 6 else _det_bareiss(matrix, l)
    return CycleIndexPoly(l, det.real_part_or_raise())
