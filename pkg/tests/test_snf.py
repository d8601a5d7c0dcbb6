import random

import pytest
from hypothesis import given, settings, strategies as st

from shapovalov.matrix import ExactMatrix
from shapovalov.snf import (
    diagonal_invariant_factors,
    invariant_factors_from_minors,
    is_divisibility_chain,
    smith_normal_form,
    snf_pointwise_product,
)


def _diag(values):
    n = len(values)
    return [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]


def test_examples():
    assert smith_normal_form([[2, 0], [1, 4]]).invariant_factors == (1, 8)
    assert smith_normal_form(_diag([4, 6])).invariant_factors == (2, 12)
    X = [[2, 0, 0], [2, 4, 0], [0, 2, 8]]
    assert smith_normal_form(X).invariant_factors == (2, 2, 16)
    assert invariant_factors_from_minors(X) == (2, 2, 16)


def test_pointwise_product_examples():
    assert snf_pointwise_product((1, 8), (3, 9)).invariant_factors == (3, 72)
    assert snf_pointwise_product((2, 4, 8), (1, 1, 1)).invariant_factors == (2, 4, 8)
    assert snf_pointwise_product((2, 4), (2, 4)).invariant_factors == (4, 16)
    with pytest.raises(ValueError):
        snf_pointwise_product((1, 2), (3, 3, 9))
    with pytest.raises(ValueError):
        snf_pointwise_product((1, 2), (3, 1))


def test_zero_and_rectangular():
    assert smith_normal_form([[0, 0], [0, 0]]).invariant_factors == (0, 0)
    assert smith_normal_form([[1, 2], [2, 4]]).invariant_factors == (1, 0)
    assert smith_normal_form([[2, 4, 6], [4, 8, 13]]).invariant_factors == invariant_factors_from_minors(
        [[2, 4, 6], [4, 8, 13]])
    with pytest.raises(ValueError):
        smith_normal_form(ExactMatrix([[1, 0], [0, 2]]).scale(__import__("fractions").Fraction(1, 3)))


def _check(a):
    res = smith_normal_form(a, want_transforms=True)
    assert res.invariant_factors == invariant_factors_from_minors(a)
    assert is_divisibility_chain(res.invariant_factors)
    n, m = len(a), len(a[0])
    D = res.U @ ExactMatrix(a) @ res.V
    assert D.entries == [[res.invariant_factors[i] if i == j else 0 for j in range(m)] for i in range(n)]
    assert abs(res.U.determinant()) == 1 and abs(res.V.determinant()) == 1


def test_random_corpus():
    rng = random.Random(2024)
    for _ in range(200):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        bound = rng.choice([3, 10, 100])
        _check([[rng.randint(-bound, bound) for _ in range(m)] for _ in range(n)])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(
    st.lists(st.integers(-30, 30), min_size=n, max_size=n), min_size=1, max_size=4)))
def test_property_random(a):
    _check(a)


@given(st.lists(st.integers(1, 500), min_size=1, max_size=6))
def test_diagonal_conversion(values):
    assert diagonal_invariant_factors(values) == smith_normal_form(_diag(values)).invariant_factors


def test_large_entries_exact():
    big = 3 ** 80
    res = smith_normal_form([[big, 0], [0, 2 * big]])
    assert res.invariant_factors == (big, 2 * big)
