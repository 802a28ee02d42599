from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from involutions.involution import involution_number
from involutions.partialsum import partial_sum
from involutions.series import (
    TruncatedEGF,
    cycle_egf_exponent,
    exp_x,
    involution_egf,
    involution_egf_check,
    lemma_partial_sums_check,
    partial_sum_egf_check,
    partial_sum_transform,
    series_derive,
    series_exp,
    series_integrate,
    series_mul,
    umbral_derivative_check,
)

small_fractions = st.fractions(
    min_value=-5, max_value=5, max_denominator=12
)


def series(order):
    return st.lists(
        small_fractions, min_size=order + 1, max_size=order + 1
    ).map(lambda cs: TruncatedEGF(cs, order))


def test_truncated_egf_basics():
    f = TruncatedEGF([1, 2, 3])
    assert f.order == 2
    assert f.coefficient(1) == 2
    assert f.egf_coefficient(2) == 6
    with pytest.raises(IndexError):
        f.coefficient(3)
    with pytest.raises(ValueError):
        f.truncate(5)
    assert f.truncate(1) == TruncatedEGF([1, 2])


def test_padding_and_truncation_on_init():
    f = TruncatedEGF([1], 3)
    assert f.coeffs == [1, 0, 0, 0]
    g = TruncatedEGF([1, 2, 3, 4], 1)
    assert g.coeffs == [1, 2]


def test_series_mul_example():
    # (1+x)(1-x) = 1 - x^2
    a = TruncatedEGF([1, 1, 0])
    b = TruncatedEGF([1, -1, 0])
    assert series_mul(a, b) == TruncatedEGF([1, 0, -1])


def test_derive_integrate_orders():
    f = TruncatedEGF([1, 2, 3, 4])
    d = series_derive(f)
    assert d.order == 2 and d.coeffs == [2, 6, 12]
    i = series_integrate(f)
    assert i.order == 4 and i.coeffs == [0, 1, 1, 1, 1]


def test_exp_of_x():
    e = exp_x(10)
    for n in range(11):
        assert e.coefficient(n) == Fraction(1, int_fact(n))


def int_fact(n):
    out = 1
    for j in range(2, n + 1):
        out *= j
    return out


def test_series_exp_requires_zero_constant():
    with pytest.raises(ValueError):
        series_exp(TruncatedEGF([1, 1]))


def test_exp_functional_equation():
    # exp(s) * exp(-s) = 1 through the truncation order
    s = TruncatedEGF([0, 1, Fraction(1, 2), Fraction(-1, 3)], 6)
    product = series_mul(series_exp(s), series_exp(-s))
    assert product == TruncatedEGF.one(6)


@settings(max_examples=40, deadline=None)
@given(series(6), series(6))
def test_exp_turns_sums_into_products(a, b):
    a = a - TruncatedEGF.x_power(0, 6, a.coefficient(0))
    b = b - TruncatedEGF.x_power(0, 6, b.coefficient(0))
    assert series_exp(a + b) == series_mul(series_exp(a), series_exp(b))


@settings(max_examples=40, deadline=None)
@given(series(5), series(5))
def test_product_rule(a, b):
    lhs = series_derive(series_mul(a, b))
    rhs = series_mul(series_derive(a), b.truncate(4)) + series_mul(
        a.truncate(4), series_derive(b)
    )
    assert lhs == rhs


def test_cycle_egf_exponent():
    s = cycle_egf_exponent(3, 5)
    assert s.coeffs == [0, 1, Fraction(1, 2), Fraction(1, 3), 0, 0]


def test_involution_egf_values():
    f = involution_egf(25)
    assert f.egf_coefficient(0) == 1
    assert f.egf_coefficient(10) == 9496
    assert involution_egf_check(30)
    for n in range(26):
        assert f.egf_coefficient(n) == involution_number(n)


def test_partial_sum_egf_identity():
    assert partial_sum_egf_check(20)
    with pytest.raises(ValueError):
        partial_sum_egf_check(2)


def test_partial_sum_transform_on_involutions():
    g = partial_sum_transform(involution_egf(20))
    for n in range(21):
        assert g.egf_coefficient(n) == partial_sum(n)


@settings(max_examples=40, deadline=None)
@given(series(8))
def test_lemma_partial_sums_any_series(w):
    assert lemma_partial_sums_check(w)


def test_umbral_derivative_identity():
    for m in (0, 1, 2, 3, 5, 8):
        assert umbral_derivative_check(m)
