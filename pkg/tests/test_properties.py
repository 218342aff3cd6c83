"""Randomized invariants, each checked on at least 100 generated instances."""

from itertools import combinations

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from excyclic import matroid as mt
from excyclic.polycone import cone_from_rays, dual_cone, euler_characteristic, f_vector
from excyclic.rational import RatMatrix, det, kernel_basis, matmul, rank
from excyclic.twistor import ExteriorVector, hodge_star, subsets, wedge_power_matrix
from excyclic.zmatrix import random_positive

EXAMPLES = 120
suite = settings(max_examples=EXAMPLES, deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])

small = st.integers(-6, 6)


def matrices(rows, cols, elements=small):
    return st.lists(st.lists(elements, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


# Cauchy-Binet and SL-invariance ------------------------------------------------


@suite
@given(matrices(3, 4), matrices(4, 5), st.integers(1, 3))
def test_cauchy_binet(a, b, k):
    lhs = wedge_power_matrix(RatMatrix(matmul(a, b)), k)
    rhs = wedge_power_matrix(RatMatrix(a), k) @ wedge_power_matrix(RatMatrix(b), k)
    assert lhs == rhs


def unimodular(lower, upper, d):
    """Unit lower triangular times unit upper triangular: determinant one."""
    it_l, it_u = iter(lower), iter(upper)
    lo = [[1 if i == j else (next(it_l) if j < i else 0) for j in range(d)] for i in range(d)]
    up = [[1 if i == j else (next(it_u) if j > i else 0) for j in range(d)] for i in range(d)]
    return matmul(lo, up)


@suite
@given(matrices(4, 6), st.lists(small, min_size=6, max_size=6), st.lists(small, min_size=6, max_size=6))
def test_brackets_are_sl_invariant(z, lower, upper):
    g = unimodular(lower, upper, 4)
    assert det(g) == 1
    gz = matmul(g, z)
    for idx in combinations(range(6), 4):
        assert det([[r[i] for i in idx] for r in gz]) == det([[r[i] for i in idx] for r in z])


# Cut and glue ---------------------------------------------------------------


@st.composite
def independent_graph_and_cut(draw):
    n = draw(st.integers(5, 6))
    edges = list(combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(edges), min_size=1, max_size=6, unique=True))
    e = draw(st.sampled_from(chosen))
    v = draw(st.sampled_from(e))
    return n, mt.make_graph(chosen), e, v, draw(st.integers(1, 50))


@suite
@given(independent_graph_and_cut())
def test_cutting_preserves_independence(data):
    n, g, e, v, seed = data
    small_m = mt.matroid_of(random_positive(4, n, seed), 2)
    cut_g = mt.cut(g, e, v, new_vertex=n + 1)
    big_m = mt.matroid_of(random_positive(4, n + 1, seed), 2)
    assume(small_m.is_independent(g))
    assert big_m.is_independent(cut_g)


@st.composite
def dependent_graph_with_far_pair(draw):
    core = draw(st.sampled_from([
        [(1, 2), (1, 3), (1, 4), (1, 5)],
        [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (1, 5)],
        [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)],
    ]))
    extra = draw(st.lists(st.tuples(st.integers(1, 8), st.integers(1, 8)).filter(lambda p: p[0] != p[1]), max_size=2))
    g = mt.make_graph(core + extra)
    verts = mt.graph_vertices(g)
    far = [(u, v) for u, v in combinations(verts, 2) if mt.graph_distance(g, u, v) >= 3]
    pair = draw(st.sampled_from(far)) if far else None
    return g, pair, draw(st.integers(1, 50))


@suite
@given(dependent_graph_with_far_pair())
def test_gluing_preserves_dependence(data):
    g, pair, seed = data
    n = max(mt.graph_vertices(g))
    assert not mt.matroid_of(random_positive(4, max(n, 5), seed), 2).is_independent(g)
    if pair is None:
        return
    h = mt.glue(g, *pair)
    nh = max(mt.graph_vertices(h))
    assert not mt.matroid_of(random_positive(4, max(nh, 5), seed), 2).is_independent(h)


# Hexagon polynomial --------------------------------------------------------


def _plucker(cols, *idx):
    return det([[cols[i - 1][r] for i in idx] for r in range(4)])


@suite
@given(matrices(4, 6, st.integers(-9, 9)))
def test_hexagon_polynomial_plucker_identity(z):
    m = RatMatrix(z)
    cols = m.columns()
    p = lambda *idx: _plucker(cols, *idx)  # noqa: E731
    expected = p(1, 2, 3, 4) * p(1, 3, 5, 6) * p(2, 4, 5, 6) - p(1, 2, 3, 5) * p(1, 3, 4, 6) * p(2, 4, 5, 6) \
        + p(1, 2, 3, 5) * p(1, 2, 4, 6) * p(3, 4, 5, 6)
    h = mt.hexagon_polynomial(m)
    assert h == expected
    ker = kernel_basis(m)
    if ker.rows == 2:
        kc = ker.columns()
        q = lambda a, b: kc[a - 1][0] * kc[b - 1][1] - kc[b - 1][0] * kc[a - 1][1]  # noqa: E731
        assert (h == 0) == (q(1, 2) * q(3, 4) * q(5, 6) - q(2, 3) * q(4, 5) * q(1, 6) == 0)


# Hodge star ------------------------------------------------------------------


@st.composite
def exterior_vectors(draw):
    dim = draw(st.integers(2, 6))
    degree = draw(st.integers(0, dim))
    keys = subsets(dim, degree)
    values = draw(st.lists(small, min_size=len(keys), max_size=len(keys)))
    return ExteriorVector.from_list(degree, dim, values)


@suite
@given(exterior_vectors())
def test_hodge_star_involution(u):
    sign = (-1) ** (u.degree * (u.dim - u.degree))
    assert hodge_star(hodge_star(u)) == u.scale(sign)


# Cones -------------------------------------------------------------------------


def polytope_rays(dim):
    point = st.lists(st.integers(-5, 5), min_size=dim - 1, max_size=dim - 1).map(lambda v: (*v, 1))
    return st.lists(point, min_size=dim + 1, max_size=dim + 5, unique=True)


def full_dimensional(rays, dim):
    return rank(rays) == dim


@suite
@given(st.integers(3, 5).flatmap(lambda d: st.tuples(st.just(d), polytope_rays(d))))
def test_dual_cone_involution(data):
    dim, rays = data
    assume(full_dimensional(rays, dim))
    c = cone_from_rays(rays)
    d = cone_from_rays(c.facets)
    assert set(d.facets) == set(c.rays)
    assert dual_cone(dual_cone(c)).same_as(c)


@suite
@given(st.integers(3, 5).flatmap(lambda d: st.tuples(st.just(d), polytope_rays(d))))
def test_euler_relation(data):
    dim, rays = data
    assume(full_dimensional(rays, dim))
    fv = f_vector(cone_from_rays(rays))
    assert euler_characteristic(fv) == 1 - (-1) ** (dim - 1)


@settings(max_examples=EXAMPLES, deadline=None)
@given(st.integers(5, 7), st.integers(1, 10**6))
def test_euler_relation_exterior_cyclic(n, seed):
    from excyclic.schubert import exterior_cone

    fv = f_vector(exterior_cone(random_positive(4, n, seed), 2))
    assert euler_characteristic(fv) == 1 - (-1) ** 5


PROPERTY_SUITES = {
    "Cauchy-Binet": [test_cauchy_binet],
    "SL-invariance": [test_brackets_are_sl_invariant],
    "cut/glue": [test_cutting_preserves_independence, test_gluing_preserves_dependence],
    "hexagon Pluecker identity": [test_hexagon_polynomial_plucker_identity],
    "Hodge-star involution": [test_hodge_star_involution],
    "dual-cone involution": [test_dual_cone_involution],
    "Euler relation": [test_euler_relation, test_euler_relation_exterior_cyclic],
}
