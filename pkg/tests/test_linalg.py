import random
from fractions import Fraction

from icstalks.linalg import (
    coordinates_in_basis,
    determinant,
    integer_rank,
    is_zero_matrix,
    mat_mul,
    nullspace,
    rref,
)


def test_rank_known():
    assert integer_rank([]) == 0
    assert integer_rank([[0, 0], [0, 0]]) == 0
    assert integer_rank([[1, 0], [0, 1]]) == 2
    assert integer_rank([[1, 2], [2, 4]]) == 1
    assert integer_rank([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 2
    assert integer_rank([[Fraction(1, 2), 1], [1, 2]]) == 1


def rank_by_rref(rows):
    reduced, pivots = rref(rows)
    return len(pivots)


def test_rank_matches_fraction_gauss_randomized():
    rng = random.Random(5)
    for _ in range(60):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]
        assert integer_rank(m) == rank_by_rref(m)


def test_nullspace_echelon_normalized():
    basis, cols = nullspace([[1, 1, 1]], 3)
    assert cols == [1, 2]
    for v, c in zip(basis, cols):
        assert v[c] == 1
        for other in cols:
            if other != c:
                assert v[other] == 0
    # every basis vector annihilates the row
    for v in basis:
        assert sum(v) == 0


def test_nullspace_of_empty_constraints():
    basis, cols = nullspace([], 2)
    assert cols == [0, 1]
    assert basis == [[1, 0], [0, 1]]


def test_coordinates_roundtrip():
    basis, cols = nullspace([[1, 2, 3]], 3)
    v = [basis[0][j] * 2 - basis[1][j] for j in range(3)]
    coords = coordinates_in_basis(v, basis, cols)
    assert coords == [2, -1]


def test_matmul_and_zero():
    a = [[Fraction(1), Fraction(2)], [Fraction(0), Fraction(1)]]
    b = [[Fraction(2), Fraction(0)], [Fraction(-1), Fraction(1)]]
    assert mat_mul(a, b) == [[Fraction(0), Fraction(2)], [Fraction(-1), Fraction(1)]]
    assert is_zero_matrix([[Fraction(0)]])
    assert not is_zero_matrix(a)


def test_determinant():
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant([[2]]) == 2
    assert determinant([]) == 1
    assert determinant([[1, 2], [2, 4]]) == 0
