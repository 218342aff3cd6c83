import pytest

from excyclic import amplituhedron as amp
from excyclic.rational import DimensionError
from excyclic.zmatrix import PositiveMatrix, SplitMix64, random_positive, twist, vandermonde


@pytest.fixture(scope="module")
def z6():
    return random_positive(4, 6, 1)


def test_grassmann_point_rejects_rank_deficiency():
    with pytest.raises(DimensionError):
        amp.GrassmannPoint.from_rows([[1, 2, 3, 4], [2, 4, 6, 8]])


def test_grassmann_point_json_and_plucker_round_trip():
    y = amp.GrassmannPoint.from_rows([[1, 0, 2, 1], [0, 1, 1, 3]])
    assert amp.GrassmannPoint.from_json(y.to_json()).plucker == y.plucker
    assert amp.GrassmannPoint.from_plucker(y.plucker).plucker == y.plucker


def test_star_is_orthogonal_complement():
    y = amp.GrassmannPoint.from_rows([[1, 0, 2, 1], [0, 1, 1, 3]])
    s = y.star()
    for u in y.matrix.entries:
        for v in s.matrix.entries:
            assert sum(a * b for a, b in zip(u, v)) == 0


def test_membership_truthiness():
    assert amp.Membership.INSIDE
    assert not amp.Membership.OUTSIDE
    assert not amp.Membership.BOUNDARY_OR_DEGENERATE


@pytest.mark.parametrize("values, flips", [([1, 2, 3], 0), ([1, -1, 1], 2), ([1, 0, -2, 0, 3], 2), ([], 0)])
def test_sign_flips(values, flips):
    assert amp.sign_flips(values) == flips


@pytest.mark.parametrize("n", [5, 6, 7, 8])
@pytest.mark.parametrize("seed", [1, 2, 3])
def test_sampled_points_pass_every_oracle(n, seed):
    z = random_positive(4, n, seed)
    y = amp.sample_amplituhedron(z, 2, seed)
    assert amp.member_bar(y, z)
    assert amp.member_cone(y, z)
    assert amp.member_signflip(y, z) is amp.Membership.INSIDE


def test_point_outside_is_rejected_by_all(z6):
    rng = SplitMix64(99)
    found = False
    for _ in range(200):
        y = amp.random_grassmann_point(rng)
        if not amp.member_bar(y, z6):
            assert not amp.member_cone(y, z6)
            assert amp.member_signflip(y, z6) is not amp.Membership.INSIDE
            found = True
    assert found


def test_degenerate_identity_matrix_uses_plucker_signs():
    z = PositiveMatrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    y = amp.GrassmannPoint.from_rows([[1, 1, 0, -1], [0, 1, 1, 1]])
    one_sign = all(c >= 0 for c in y.coordinates()) or all(c <= 0 for c in y.coordinates())
    assert amp.member_bar(y, z) is one_sign


def test_dual_membership_uses_the_star_of_the_twist(z6):
    rep = amp.dual_equivalence(z6, 300, 5)
    assert rep.disagreements == 0


def test_oracle_equivalence_frozen_counts(z6):
    # frozen regression values computed with seed 2
    rep = amp.oracle_equivalence(z6, 500, 2)
    assert (rep.disagreements, rep.boundary, rep.inside, rep.sign_chambers) == (0, 2, 13, 86)


@pytest.mark.parametrize("n", [5, 6, 7, 8, 9])
def test_separation_certificate(n):
    rep = amp.separation_certificate(random_positive(4, n, n))
    assert rep.passed and rep.expansion_matches_bar


def test_separation_terms_have_a_zero_coefficient_for_vandermonde():
    z = vandermonde((1, 2, 3, 4, 5), 4)
    terms = amp.separation_terms(z, 1, 3)
    assert len(terms) == 3
    assert len(amp.separation_expansion(z, 1, 3)) == 2


def test_rejection_search_finds_nothing(z6):
    assert amp.rejection_search(z6, 2000, 1) == 0


@pytest.mark.parametrize("n, passing", [(6, 6), (7, 4), (8, 8)])
def test_linear_boundary_audit(n, passing):
    rep = amp.linear_boundary_audit(random_positive(n - 2, n, 1))
    assert len(rep.passing) == passing
    assert rep.passing_are_k4_complements
    assert rep.hull_agrees in (True, None)


def test_member_requires_k2_m2():
    z = random_positive(5, 7, 1)
    y = amp.GrassmannPoint.from_rows([[1, 0, 0, 0, 0], [0, 1, 0, 0, 0]])
    with pytest.raises(DimensionError):
        amp.member_signflip(y, z)


def test_twist_bar_normals_cache_is_per_matrix(z6):
    assert amp.bar_normals(z6) is amp.bar_normals(z6)
    assert amp.bar_normals(twist(z6, 2, 2)) != amp.bar_normals(z6)
    assert isinstance(amp.bar_normals(z6)[0][0], tuple)
