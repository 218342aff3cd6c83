from itertools import combinations

import pytest

from excyclic.rational import DimensionError, RatMatrix, det
from excyclic.twistor import (
    ExteriorVector,
    bar_line,
    bracket,
    dot,
    factorize,
    hodge_star,
    meet,
    shuffle_sign,
    subsets,
    top_pair,
    wedge,
    wedge_power_matrix,
    wedge_vectors,
)
from excyclic.zmatrix import random_positive, vandermonde


def test_subsets_are_lex_and_one_based():
    assert subsets(4, 2) == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


@pytest.mark.parametrize("a, b, sign", [((1,), (2,), 1), ((2,), (1,), -1), ((1, 3), (2, 4), -1), ((1, 2), (3, 4), 1)])
def test_shuffle_sign(a, b, sign):
    assert shuffle_sign(a, b) == sign


def test_wedge_is_alternating():
    u = ExteriorVector.from_vector([1, 2, 3])
    v = ExteriorVector.from_vector([0, 1, 5])
    assert wedge(u, u).is_zero()
    assert wedge(u, v) == -wedge(v, u)


def test_wedge_of_basis_vectors_gives_basis_element():
    e = [ExteriorVector.basis(4, (i,)) for i in range(1, 5)]
    assert (e[2] ^ e[0]) == ExteriorVector.basis(4, (3, 1)) == ExteriorVector(2, 4, {(1, 3): -1})


def test_wedge_vectors_top_degree_is_determinant():
    rows = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
    assert wedge_vectors(rows)[(1, 2, 3)] == det(rows)


def test_wedge_power_matrix_entries_are_minors():
    z = RatMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    w = wedge_power_matrix(z, 2)
    assert w.shape == (3, 3)
    assert w[0, 0] == 1 * 5 - 2 * 4
    assert det(w) == det(z) ** 2


@pytest.mark.parametrize("degree, dim", [(1, 3), (2, 4), (2, 5), (3, 5), (3, 6)])
def test_hodge_star_pairs_to_top(degree, dim):
    for idx in subsets(dim, degree):
        e = ExteriorVector.basis(dim, idx)
        assert top_pair(e, hodge_star(e)) == 1
        assert dot(e, e) == 1


def test_bracket_uses_twisted_columns():
    z = random_positive(4, 6, 1)
    assert bracket(z, (1, 2, 3, 4)) > 0
    assert bracket(z, (3, 4, 5, 7), k=2) == -bracket(z, (3, 4, 5, 1))
    assert bracket(z, (3, 4, 5, 7), k=2) == bracket(z, (1, 3, 4, 5))


def test_factorize_recovers_decomposable_and_rejects_others():
    p = wedge_vectors([[1, 2, 0, 1], [0, 1, 3, 1]])
    assert wedge_vectors(factorize(p)) == p
    q = ExteriorVector(2, 4, {(1, 2): 1, (3, 4): 1})
    assert factorize(q) is None
    with pytest.raises(DimensionError):
        factorize(ExteriorVector(2, 4, {}))


@pytest.mark.parametrize("expansion", [1, 2])
def test_meet_of_two_planes_in_four_space(expansion):
    a = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)]
    b = [(0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    line = meet(a, b, expansion)
    assert line.degree == 2
    assert factorize(line) is not None
    assert line.ratio_to(wedge_vectors([(0, 1, 0, 0), (0, 0, 1, 0)])) is not None


def test_meet_expansions_agree_on_random_planes():
    z = random_positive(4, 7, 3)
    cols = z.columns()
    for i, j in combinations(range(2, 6), 2):
        a, b = [cols[i - 1], cols[i], cols[i + 1]], [cols[j - 1], cols[j], cols[j + 1]]
        assert meet(a, b, 1) == meet(a, b, 2)


def test_bar_line_of_neighbours_is_positive_multiple():
    z = vandermonde((1, 2, 3, 4, 5, 6, 7), 4)
    for i in range(1, 7):
        line = bar_line(z, i, i + 1)
        ratio = line.ratio_to(z.wedge((i, i + 1)))
        assert ratio is not None and ratio > 0


def test_bar_lines_pair_nonnegatively_with_polytope_vertices():
    z = random_positive(4, 7, 2)
    for i, j in combinations(range(1, 8), 2):
        line = bar_line(z, i, j)
        for a, b in combinations(range(1, 8), 2):
            assert top_pair(line, z.wedge((a, b))) >= 0
