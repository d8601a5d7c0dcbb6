import random
from fractions import Fraction

import pytest
import sympy

from shapovalov.matrix import CrossCheckError, ExactMatrix, determinant, solve_left


def _random_matrix(rng, n, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


def test_determinant_against_sympy():
    rng = random.Random(11)
    for _ in range(80):
        n = rng.randint(1, 6)
        a = _random_matrix(rng, n)
        assert determinant(a) == sympy.Matrix(a).det()


def test_inverse_against_sympy():
    rng = random.Random(12)
    done = 0
    while done < 40:
        n = rng.randint(1, 5)
        a = _random_matrix(rng, n)
        if determinant(a) == 0:
            continue
        inv = ExactMatrix(a).inverse()
        ref = sympy.Matrix(a).inv()
        assert inv.entries == [[Fraction(int(ref[i, j].p), int(ref[i, j].q)) for j in range(n)]
                               for i in range(n)]
        assert ExactMatrix(a) @ inv == ExactMatrix.identity(n)
        done += 1


def test_rational_entries_and_integrality():
    m = ExactMatrix([[Fraction(1, 2), 0], [0, 2]])
    assert not m.is_integral()
    with pytest.raises(CrossCheckError):
        m.to_integral()
    assert (m.scale(2)).to_integral().entries == [[1, 0], [0, 4]]
    assert m.determinant() == 1


def test_singular_inverse_raises():
    with pytest.raises((ZeroDivisionError, ValueError)):
        ExactMatrix([[1, 2], [2, 4]]).inverse()


def test_power_and_transpose():
    m = ExactMatrix([[2, 0], [1, 4]])
    assert (m ** 2).entries == [[4, 0], [6, 16]]
    assert m.T.entries == [[2, 1], [0, 4]]
    assert m.is_lower_triangular() and not m.is_upper_triangular()


def test_solve_left_against_inverse():
    rng = random.Random(13)
    done = 0
    while done < 40:
        n = rng.randint(1, 6)
        b = _random_matrix(rng, n, -3, 3)
        if determinant(b) == 0:
            continue
        c = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(2)]
        x = solve_left(c, b)
        assert x == (ExactMatrix(c) @ ExactMatrix(b).inverse()).tolist()
        done += 1
