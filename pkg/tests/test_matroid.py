from math import comb

import pytest

from excyclic import matroid as mt
from excyclic.zmatrix import random_positive, vandermonde

K4 = mt.make_graph([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
STAR4 = mt.make_graph([(1, 2), (1, 3), (1, 4), (1, 5)])
HEXAGON = mt.make_graph([(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)])


@pytest.fixture(scope="module")
def w226():
    return mt.matroid_of(random_positive(4, 6, 1), 2)


def test_rank_and_ground(w226):
    assert len(w226) == comb(6, 2)
    assert w226.rank_total == 6


def test_bases_count_for_generic_positive_matrix(w226):
    assert len(mt.bases(w226)) == 3345


def test_vandermonde_basis_count():
    assert len(mt.bases(mt.matroid_of(vandermonde((1, 3, 4, 7, 8, 9), 4), 2))) == 3345


def test_bases_guard():
    with pytest.raises(ValueError):
        mt.bases(mt.matroid_of(random_positive(4, 8, 1), 2), guard=20)


def test_k4_is_a_basis_and_star_a_circuit(w226):
    assert w226.is_independent(K4)
    assert w226.is_circuit(STAR4)
    assert not w226.is_circuit(K4)


def test_circuits_are_minimal_dependent(w226):
    cs = mt.circuits(w226, 5)
    assert cs
    for c in cs:
        assert w226.is_circuit(c)


def test_hyperplanes_have_corank_one():
    m = mt.matroid_of(random_positive(4, 5, 2), 2)
    hyps = mt.hyperplane_flats(m)
    assert hyps
    for h in hyps:
        assert m.rank(h) == m.rank_total - 1
        assert sorted(m.closure(h)) == sorted(h)


def test_cut_and_glue_are_inverse():
    g = mt.make_graph([(1, 2), (2, 3), (3, 4), (4, 1)])
    h = mt.cut(g, (1, 2), 2)
    assert h == mt.make_graph([(1, 5), (2, 3), (3, 4), (1, 4)])
    assert mt.glue(h, 2, 5) == g


@pytest.mark.parametrize("bad", [((1, 3), 1), ((1, 2), 3)])
def test_cut_rejects_bad_arguments(bad):
    with pytest.raises(ValueError):
        mt.cut(mt.make_graph([(1, 2), (2, 3)]), *bad)


def test_glue_needs_distance_three():
    with pytest.raises(ValueError):
        mt.glue(mt.make_graph([(1, 2), (2, 3)]), 1, 3)


def test_canonical_graph_identifies_relabelings():
    a = mt.make_graph([(1, 2), (2, 3), (3, 1), (3, 4)])
    b = mt.make_graph([(4, 2), (2, 1), (1, 4), (4, 3)])
    assert mt.graph_key(a) == mt.graph_key(b)
    assert mt.graph_key(a) != mt.graph_key(STAR4)


def test_static_and_dynamic_examples():
    assert mt.static_or_dynamic(K4).verdict is mt.Verdict.STATIC
    res = mt.static_or_dynamic(HEXAGON)
    assert res.verdict is mt.Verdict.DYNAMIC
    assert res.witness is not None


def test_hexagon_polynomial_vanishes_at_the_known_node():
    nodes = (*mt.HEXAGON_WITNESS_NODES, mt.HEXAGON_ROOT)
    assert mt.hexagon_polynomial(vandermonde(nodes, 4)) == 0
    assert mt.hexagon_polynomial(vandermonde((1, 3, 4, 7, 8, 9), 4)) < 0
    assert mt.hexagon_polynomial(vandermonde((1, 3, 4, 7, 8, 10), 4)) > 0


def test_positroid_table_contains_complete_and_empty_like_patterns():
    table = mt.positroid_table_4()
    full = frozenset({(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)})
    assert full in table
    # the crossing pair alone is not a positroid pattern
    assert frozenset({(1, 3), (2, 4)}) not in table


def test_locally_positroid_filter():
    assert mt.locally_positroid(K4, 4)
    assert not mt.locally_positroid(mt.make_graph([(1, 3), (2, 4)]), 4)


@pytest.mark.parametrize("g, expected", [(STAR4, True), (K4, False), (mt.make_graph([(1, 2), (1, 3), (1, 4)]), False)])
def test_is_graph_circuit_in_w22(g, expected):
    assert mt.is_graph_circuit(g, 4) is expected


def test_family_circuits_are_found():
    rows = mt.schubert_circuit_table()
    assert len(rows) == len(mt.W23_FAMILIES) == 7
    assert all(r["is_circuit"] for r in rows)
