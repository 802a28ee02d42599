import json

import pytest

from involutions.cyclecount import cycle_index_poly, restricted_count
from involutions.exactnum import factorial
from involutions.involution import involution_number, involution_poly
from involutions.oracle import (
    census_cycle_index_terms,
    census_fixed_point_poly,
    census_involution_count,
    census_restricted_count,
    cycle_type,
    enumerate_census,
    partition_census,
)


def test_cycle_type_examples():
    assert cycle_type((0, 1, 2)) == (1, 1, 1)
    assert cycle_type((1, 0, 2)) == (2, 1)
    assert cycle_type((1, 2, 3, 4, 0)) == (5,)
    assert cycle_type(()) == ()


def test_enumeration_totals():
    for n in range(8):
        assert enumerate_census(n).total() == factorial(n)


def test_enumeration_matches_formula():
    for n in range(8):
        assert enumerate_census(n).counts == partition_census(n).counts


def test_partition_census_larger_n():
    census = partition_census(20)
    assert census.total() == factorial(20)
    assert census_involution_count(census) == involution_number(20)


def test_enumeration_cap():
    with pytest.raises(ValueError):
        enumerate_census(10)


def test_census_involution_counts():
    for n in range(9):
        assert census_involution_count(enumerate_census(n)) == involution_number(n)


def test_census_restricted_counts():
    for n in range(9):
        census = enumerate_census(n)
        for l in range(1, n + 2):
            assert census_restricted_count(census, l) == restricted_count(n, l)


def test_census_fixed_point_poly():
    for n in range(9):
        assert census_fixed_point_poly(enumerate_census(n)) == involution_poly(n)


def test_census_cycle_index_terms():
    for n in range(1, 9):
        census = enumerate_census(n)
        for l in range(1, n + 1):
            assert census_cycle_index_terms(census, l) == cycle_index_poly(n, l).terms


def test_census_json():
    doc = json.loads(enumerate_census(4).to_json())
    assert doc["schema"] == "involutions/cycle-census/1"
    assert doc["counts"]["2+1+1"] == 6
    assert doc["counts"]["4"] == 6
    assert doc["counts"]["2+2"] == 3
