"""Brute-force ground truth: exhaustive permutation enumeration for small n
and the classical cycle-type counting formula for moderate n."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations as iter_permutations

from .exactnum import factorial, partitions
from .involution import UniPoly

ENUMERATION_CAP = 9  # 9! = 362880 permutations


@dataclass
class CycleCensus:
    """Tally of permutations of n symbols by cycle type (a partition of n)."""

    n: int
    counts: dict[tuple[int, ...], int]

    def total(self) -> int:
        return sum(self.counts.values())

    def to_json(self) -> str:
        doc = {
            "schema": "involutions/cycle-census/1",
            "n": self.n,
            "counts": {
                "+".join(map(str, key)): value
                for key, value in sorted(self.counts.items(), reverse=True)
            },
        }
        return json.dumps(doc, sort_keys=True)


def cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    """Cycle type of a permutation given in one-line notation on 0..n-1."""
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def enumerate_census(n: int) -> CycleCensus:
    """Exhaustive census over all n! permutations; capped at n <= 9."""
    if n < 0 or n > ENUMERATION_CAP:
        raise ValueError(f"enumeration requires 0 <= n <= {ENUMERATION_CAP}")
    counts: dict[tuple[int, ...], int] = {}
    for perm in iter_permutations(range(n)):
        key = cycle_type(perm)
        counts[key] = counts.get(key, 0) + 1
    return CycleCensus(n, counts)


def partition_census(n: int) -> CycleCensus:
    """Census from the counting formula n!/prod(t^et et!), one partition at
    a time; intended for n up to a few dozen."""
    if n < 0:
        raise ValueError("requires n >= 0")
    counts: dict[tuple[int, ...], int] = {}
    for lam in partitions(n):
        denom = 1
        mult: dict[int, int] = {}
        for part in lam:
            mult[part] = mult.get(part, 0) + 1
        for t, e in mult.items():
            denom *= t**e * factorial(e)
        counts[lam] = factorial(n) // denom
    return CycleCensus(n, counts)


def census_involution_count(census: CycleCensus) -> int:
    """Permutations whose cycles all have length <= 2."""
    return census_restricted_count(census, 2)


def census_restricted_count(census: CycleCensus, l: int) -> int:
    """Permutations whose cycles all have length <= l."""
    return sum(
        count
        for lam, count in census.counts.items()
        if not lam or lam[0] <= l
    )


def census_fixed_point_poly(census: CycleCensus) -> UniPoly:
    """Generating polynomial sum t^(number of fixed points) over involutions."""
    coeffs = [0] * (census.n + 1)
    for lam, count in census.counts.items():
        if lam and lam[0] > 2:
            continue
        fixed = sum(1 for part in lam if part == 1)
        coeffs[fixed] += count
    return UniPoly(coeffs)


def census_cycle_index_terms(census: CycleCensus, l: int) -> dict[tuple[int, ...], int]:
    """Exponent-vector keyed counts over cycle types with all parts <= l."""
    terms: dict[tuple[int, ...], int] = {}
    for lam, count in census.counts.items():
        if lam and lam[0] > l:
            continue
        exps = [0] * l
        for part in lam:
            exps[part - 1] += 1
        terms[tuple(exps)] = count
    return terms
