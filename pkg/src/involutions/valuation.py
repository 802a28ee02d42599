"""p-adic valuations of the involution numbers and their partial sums.

Covers the closed-form 2-adic valuations, prime efficiency classification,
periodicity mod p^r, the residue-class valuation tree for inefficient primes,
the single-non-terminal-vertex conjecture checker, the observed 3-adic pattern
of the partial sums, and the multinomial congruences.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .exactnum import (
    as_partition,
    is_prime,
    multinomial,
    nu_int,
    primes_upto,
)
from .involution import involution_number
from .partialsum import partial_sum


def nu2_involution(n: int) -> int:
    """2-adic valuation of the n-th involution number, piecewise in n mod 4."""
    if n < 0:
        raise ValueError("requires n >= 0")
    k, r = divmod(n, 4)
    return (k, k, k + 1, k + 2)[r]


def nu2_involution_floor(n: int) -> int:
    """Equivalent floor form: floor(n/2) - 2 floor(n/4) + floor((n+1)/4)."""
    if n < 0:
        raise ValueError("requires n >= 0")
    return n // 2 - 2 * (n // 4) + (n + 1) // 4


def nu2_partial_sum(n: int) -> int:
    """2-adic valuation of a(n), piecewise in n mod 4 with k >= 1.

    n = 0 falls outside the four residue classes; a(0) = 1 so the value 0
    is returned by convention.
    """
    if n < 0:
        raise ValueError("requires n >= 0")
    if n == 0:
        return 0
    r = n % 4
    if r == 1:  # n = 4k - 3
        return (n + 3) // 4
    if r == 2:  # n = 4k - 2
        return (n + 2) // 4 + 1
    if r == 3:  # n = 4k - 1
        k = (n + 1) // 4
        return nu_int(k, 2) + k + 2
    return n // 4  # n = 4k


def involution_mod_sequence(modulus: int, n_max: int) -> list[int]:
    """I(0..n_max) reduced mod `modulus`, via the recurrence on residues."""
    vals = [1 % modulus, 1 % modulus]
    for n in range(2, n_max + 1):
        vals.append((vals[n - 1] + (n - 1) * vals[n - 2]) % modulus)
    return vals[: n_max + 1]


def is_efficient(p: int) -> bool:
    """An odd prime is efficient when p never divides I(j) for j < p."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    residues = involution_mod_sequence(p, p - 1)
    return all(r != 0 for r in residues)


def inefficient_primes_upto(bound: int) -> list[int]:
    """All inefficient odd primes <= bound, ascending."""
    if bound < 3:
        raise ValueError("requires bound >= 3")
    return [p for p in primes_upto(bound) if p != 2 and not is_efficient(p)]


def periodicity_check(p: int, r: int, n_max: int) -> bool:
    """I(n + p^r) == I(n) mod p^r for all n <= n_max.

    True for odd primes.  For p = 2 the claim is false from n = 0 on
    (I(0) = 1 yet I(2) = 2): the mod-2^r sequence is eventually zero, so it
    cannot be purely periodic; this function reports that honestly.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if r < 1:
        raise ValueError("requires r >= 1")
    q = p**r
    vals = involution_mod_sequence(q, n_max + q)
    return all(vals[n + q] == vals[n] for n in range(n_max + 1))


@dataclass
class TreeVertex:
    """Residue class {n == residue mod p^level} with its valuation status.

    Terminal vertices carry the common valuation of the class; non-terminal
    vertices carry a lower bound (= level) on it.
    """

    level: int
    residue: int
    terminal: bool
    valuation: int | None = None  # set when terminal
    lower_bound: int | None = None  # set when non-terminal

    def to_dict(self, p: int) -> dict:
        return {
            "residue": self.residue,
            "modulus": p**self.level,
            "status": "terminal" if self.terminal else "nonterminal",
            "valuation_or_bound": self.valuation if self.terminal else self.lower_bound,
        }


@dataclass
class ValuationTree:
    prime: int
    max_level: int
    levels: list[list[TreeVertex]] = field(default_factory=list)

    def to_json(self) -> str:
        doc = {
            "schema": "involutions/valuation-tree/1",
            "prime": self.prime,
            "levels": [
                [v.to_dict(self.prime) for v in level] for level in self.levels
            ],
        }
        return json.dumps(doc, sort_keys=True)


def build_valuation_tree(
    p: int,
    max_level: int,
    certify_n: int = 3,
    max_representative: int = 10**6,
) -> ValuationTree:
    """Leveled refinement of residue classes mod p^level classifying nu_p(I(n)).

    A vertex with representative c at level L is terminal exactly when
    I(c) mod p^L != 0: by periodicity the whole class then shares the
    valuation nu_p(I(c)) < L.  Otherwise the vertex is non-terminal with
    lower bound L and is split into its p sub-classes at the next level.
    Each terminal vertex is additionally spot-verified on `certify_n`
    explicit members of its class using exact arithmetic.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if max_level < 1:
        raise ValueError("requires max_level >= 1")
    top_mod = p**max_level
    if top_mod > max_representative:
        raise ValueError(
            f"p^max_level = {top_mod} exceeds the compute budget "
            f"{max_representative}"
        )
    residues = involution_mod_sequence(top_mod, top_mod - 1)

    tree = ValuationTree(prime=p, max_level=max_level)
    frontier = [0]  # non-terminal class representatives of the previous level
    for level in range(1, max_level + 1):
        modulus = p**level
        prev_modulus = p ** (level - 1)
        vertices = []
        next_frontier = []
        for base in frontier:
            for k in range(p):
                c = base + k * prev_modulus
                value_mod = residues[c] % modulus
                if value_mod != 0:
                    v = 0
                    while value_mod % p == 0:
                        value_mod //= p
                        v += 1
                    vertex = TreeVertex(level, c, terminal=True, valuation=v)
                    _certify_terminal(vertex, p, certify_n)
                else:
                    vertex = TreeVertex(level, c, terminal=False, lower_bound=level)
                    next_frontier.append(c)
                vertices.append(vertex)
        vertices.sort(key=lambda v: v.residue)
        tree.levels.append(vertices)
        frontier = next_frontier
        if not frontier:
            break
    return tree


def _certify_terminal(vertex: TreeVertex, p: int, certify_n: int) -> None:
    modulus = p**vertex.level
    for i in range(certify_n):
        n = vertex.residue + i * modulus
        if nu_int(involution_number(n), p) != vertex.valuation:
            raise AssertionError(
                f"terminal vertex {vertex} fails certification at n={n}"
            )


@dataclass
class ConjectureLevelReport:
    level: int
    n_terminal_at_expected: int
    n_terminal_other: int
    n_nonterminal: int
    holds: bool


@dataclass
class ConjectureReport:
    prime: int
    levels: list[ConjectureLevelReport]

    @property
    def holds(self) -> bool:
        return all(lv.holds for lv in self.levels)

    def to_json(self) -> str:
        doc = {
            "schema": "involutions/conjecture-report/1",
            "prime": self.prime,
            "holds": self.holds,
            "levels": [
                {
                    "level": lv.level,
                    "terminal_with_valuation_level_minus_1": lv.n_terminal_at_expected,
                    "terminal_other": lv.n_terminal_other,
                    "nonterminal": lv.n_nonterminal,
                    "holds": lv.holds,
                }
                for lv in self.levels
            ],
        }
        return json.dumps(doc, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"conjecture report for p={self.prime}"]
        lines.append("level  term(v=level-1)  term(other)  nonterm  holds")
        for lv in self.levels:
            lines.append(
                f"{lv.level:>5}  {lv.n_terminal_at_expected:>15}  "
                f"{lv.n_terminal_other:>11}  {lv.n_nonterminal:>7}  {lv.holds}"
            )
        lines.append(f"overall: {'holds' if self.holds else 'fails'}")
        return "\n".join(lines)


def conjecture_check(p: int, max_level: int, certify_n: int = 3) -> ConjectureReport:
    """Per-level counts against the single-non-terminal-vertex conjecture.

    A level conforms when it has exactly p-1 terminal vertices, all with
    valuation level-1, and exactly one non-terminal vertex.  The outcome is
    reported, never assumed.
    """
    tree = build_valuation_tree(p, max_level, certify_n=certify_n)
    report = ConjectureReport(prime=p, levels=[])
    for vertices in tree.levels:
        level = vertices[0].level
        at_expected = sum(
            1 for v in vertices if v.terminal and v.valuation == level - 1
        )
        other = sum(1 for v in vertices if v.terminal and v.valuation != level - 1)
        nonterm = sum(1 for v in vertices if not v.terminal)
        holds = at_expected == p - 1 and other == 0 and nonterm == 1
        report.levels.append(
            ConjectureLevelReport(level, at_expected, other, nonterm, holds)
        )
    return report


def nu3_partial_sum(n: int) -> int:
    """Observed closed form for nu_3(a(n)).

    Empirically (verified by exact sweeps; see nu3_partial_sum_pattern_check):
    0 unless n mod 9 is 4, 6 or 8; 2 at 4 mod 9; 1 at 6 mod 9; and for
    n = 9m+8 the value is 2 when m mod 3 is 0 or 1, else 2 + nu_3(m+1).
    """
    if n < 0:
        raise ValueError("requires n >= 0")
    r = n % 9
    if r == 4:
        return 2
    if r == 6:
        return 1
    if r == 8:
        m = n // 9
        if m % 3 != 2:
            return 2
        return 2 + nu_int(m + 1, 3)
    return 0


def nu3_partial_sum_pattern_check(n_max: int) -> bool:
    """Exact sweep of nu_3(a(n)) against the observed closed form above."""
    if n_max < 9:
        raise ValueError("requires n_max >= 9")
    return all(nu_int(partial_sum(n), 3) == nu3_partial_sum(n) for n in range(n_max + 1))


def multinomial_congruence_check(p: int, n: int, lam) -> bool:
    """Multinomial coefficient congruence under scaling by a prime p >= 3.

    C(pn; p*lam) == C(n; lam) mod p^2, and additionally mod p^3 when p >= 5.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not a prime >= 3")
    lam = as_partition(lam)
    if sum(lam) != n:
        raise ValueError(f"partition {lam} does not sum to {n}")
    big = multinomial(p * n, tuple(p * part for part in lam))
    small = multinomial(n, lam)
    if (big - small) % p**2 != 0:
        return False
    if p >= 5 and (big - small) % p**3 != 0:
        return False
    return True
