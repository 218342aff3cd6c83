from fractions import Fraction

import pytest

from excyclic.rational import (
    DimensionError,
    MultiPoly,
    RatMatrix,
    SignPattern,
    coefficient_sign_pattern,
    det,
    kernel_basis,
    matmul,
    poly_det,
    primitive,
    rank,
    rational_from_json,
    rational_to_json,
)


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[2]], 2),
        ([[1, 2], [3, 4]], -2),
        ([[0, 1], [1, 0]], -1),
        ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], 0),
        ([[Fraction(1, 2), 1], [1, 4]], 1),
        ([[0, 0, 1], [0, 1, 0], [1, 0, 0]], -1),
    ],
)
def test_det_small(rows, expected):
    assert det(rows) == expected


@pytest.mark.parametrize(
    "rows, expected",
    [([[1, 2], [2, 4]], 1), ([[1, 0, 0], [0, 1, 0]], 2), ([[0, 0], [0, 0]], 0), ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], 2)],
)
def test_rank_small(rows, expected):
    assert rank(rows) == expected


def test_vandermonde_determinant_matches_product_formula():
    nodes = [1, 3, 4, 7, 8]
    rows = [[x**i for x in nodes] for i in range(5)]
    expected = 1
    for j, b in enumerate(nodes):
        for a in nodes[:j]:
            expected *= b - a
    assert det(rows) == expected


def test_kernel_basis_annihilates():
    m = RatMatrix([[1, 2, 3, 4], [2, 3, 5, 7]])
    ker = kernel_basis(m)
    assert ker.rows == 2
    for v in ker.entries:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m.entries)


def test_primitive_clears_denominators_and_gcd():
    assert primitive([Fraction(1, 2), Fraction(3, 4), 0]) == (2, 3, 0)
    assert primitive([6, -9]) == (2, -3)


def test_json_round_trip_is_exact():
    m = RatMatrix([[Fraction(1, 3), -2], [0, Fraction(22, 7)]])
    assert RatMatrix.from_json(m.to_json()) == m
    assert rational_from_json(rational_to_json(Fraction(-5, 6))) == Fraction(-5, 6)


def test_ragged_rows_rejected():
    with pytest.raises(DimensionError):
        RatMatrix([[1, 2], [3]])


def test_matmul_identity():
    a = [[1, 2], [3, 4]]
    assert matmul(a, RatMatrix.identity(2).entries) == [[1, 2], [3, 4]]


def test_poly_det_of_generic_2x2():
    names = ("x", "y", "u", "v")
    x, y, u, v = (MultiPoly.var(names, s) for s in names)
    p = poly_det([[x, y], [u, v]])
    assert p == x * v - y * u
    assert coefficient_sign_pattern(p) is SignPattern.MIXED


def test_sign_pattern_positive():
    x, y = MultiPoly.var(("x", "y"), "x"), MultiPoly.var(("x", "y"), "y")
    assert coefficient_sign_pattern(x * y + x + 3) is SignPattern.ALL_POSITIVE
    assert coefficient_sign_pattern(-(x * y)) is SignPattern.ALL_NEGATIVE
    assert coefficient_sign_pattern(x - x) is SignPattern.ZERO
