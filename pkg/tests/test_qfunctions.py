from math import comb

import pytest

from rankcrank.qfunctions import (
    INFINITY,
    euler_product,
    gaussian_binomial,
    pochhammer,
    pochhammer_scaled,
    pochhammer_shifted,
)
from rankcrank.series import QSeries

from oracles import expand_product, one_minus_q_pow, q_pascal


def poly(coeffs, Q):
    return QSeries.from_poly(coeffs, Q)


def test_pochhammer_small():
    assert pochhammer(0, 4) == QSeries.one(4)
    assert pochhammer(2, 5) == poly([1, -1, -1, 1], 5)


def test_pochhammer_three_top_coefficient():
    oracle = expand_product([one_minus_q_pow(i, 6) for i in (1, 2, 3)], 6)
    assert oracle[6] == -1
    assert pochhammer(3, 6)[6] == oracle[6]


@pytest.mark.parametrize("n", range(8))
def test_pochhammer_matches_expansion(n):
    Q = 12
    assert list(pochhammer(n, Q)) == expand_product([one_minus_q_pow(i, Q) for i in range(1, n + 1)], Q)


def test_pochhammer_shifted():
    assert pochhammer_shifted(2, 1, 4) == poly([1, 0, -1], 4)
    assert pochhammer_shifted(3, 0, 4) == QSeries.one(4)
    # Euler pentagonal expansion
    assert pochhammer_shifted(1, INFINITY, 5) == poly([1, -1, -1, 0, 0, 1], 5)
    brute = expand_product([one_minus_q_pow(i, 20) for i in range(1, 40)], 20)
    assert list(euler_product(20)) == brute


def test_pochhammer_shifted_matches_quotient():
    Q = 15
    for a in range(1, 5):
        for n in range(0, 6):
            quotient = pochhammer(a + n - 1, Q) * pochhammer(a - 1, Q).invert()
            assert pochhammer_shifted(a, n, Q) == quotient


def test_pochhammer_scaled_constant_term():
    s = pochhammer_scaled(2, 0, 2, 3)  # (1-2)(1-2q)
    assert list(s) == [-1, 2, 0, 0]


def test_gaussian_binomial_examples():
    assert gaussian_binomial(2, 1, 4) == poly([1, 1], 4)
    assert gaussian_binomial(4, 2, 6) == poly([1, 1, 2, 1, 1], 6)
    assert list(gaussian_binomial(4, 2, 6))[:5] == q_pascal(4, 2)
    assert gaussian_binomial(3, 5, 6) == QSeries.zero(6)
    assert gaussian_binomial(3, -1, 6) == QSeries.zero(6)


@pytest.mark.parametrize("N", range(13))
def test_gaussian_binomial_symmetry_and_sum(N):
    for n in range(N + 1):
        Q = n * (N - n)
        g = gaussian_binomial(N, n, Q)
        assert g == gaussian_binomial(N, N - n, Q)
        assert g.is_integral()
        assert g.coefficient_sum() == comb(N, n)


@pytest.mark.parametrize("N", range(1, 11))
def test_q_pascal_recurrence(N):
    Q = 30
    for n in range(N + 1):
        lhs = gaussian_binomial(N, n, Q)
        rhs = gaussian_binomial(N - 1, n - 1, Q) + gaussian_binomial(N - 1, n, Q).shift(n)
        assert lhs == rhs
        assert lhs == QSeries.from_poly(q_pascal(N, n), Q)
