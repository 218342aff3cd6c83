from itertools import product

import pytest

from excyclic.polycone import (
    Mode,
    NotPointedError,
    PointedCone,
    contains,
    cone_from_inequalities,
    cone_from_rays,
    delete_facets,
    dual_cone,
    exterior_as_normal,
    f_vector,
    normal_as_exterior,
)
from excyclic.rational import DimensionError
from excyclic.twistor import ExteriorVector, subsets, top_pair


def cube_rays():
    return [(x, y, z, 1) for x, y, z in product((-1, 1), repeat=3)]


def test_cube_has_six_facets_and_cube_f_vector():
    c = cone_from_rays(cube_rays())
    assert len(c.facets) == 6
    assert f_vector(c) == [8, 12, 6, 1]


def test_octahedron_is_dual_of_cube():
    c = cone_from_rays(cube_rays())
    octa = cone_from_rays(c.facets)
    assert f_vector(octa) == [6, 12, 8, 1]
    assert set(octa.facets) == set(c.rays)


def test_interior_ray_is_dropped():
    c = cone_from_rays(cube_rays() + [(0, 0, 0, 1), (1, 1, 1, 1)])
    assert len(c.rays) == 8


def test_simplex_from_inequalities():
    c = cone_from_inequalities([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    assert len(c.facets) == 3
    assert set(c.rays) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}


def test_non_pointed_inequalities_raise():
    with pytest.raises(NotPointedError):
        cone_from_inequalities([(1, 0, 0), (0, 1, 0)])


def test_lower_dimensional_rays_raise():
    with pytest.raises(DimensionError):
        cone_from_rays([(1, 0, 0), (0, 1, 0)])


@pytest.mark.parametrize("mode, expected", [(Mode.WEAK, True), (Mode.STRICT, False)])
def test_containment_modes_on_boundary(mode, expected):
    c = cone_from_rays(cube_rays())
    assert contains(c, (1, 0, 0, 1), mode) is expected
    assert contains(c, (0, 0, 0, 1), mode)
    assert not contains(c, (2, 0, 0, 1), mode)


def test_dual_cone_swaps_descriptions():
    c = cone_from_rays(cube_rays())
    d = dual_cone(c)
    assert set(d.rays) == set(c.facets)
    assert dual_cone(d).same_as(c)


def test_delete_facets_enlarges_cone():
    c = cone_from_rays([(1, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, 1), (1, 1, 1, 1), (0, 0, 0, 1)])
    keep = list(range(len(c.facets) - 1))
    bigger = delete_facets(c, keep)
    assert all(contains(bigger, r) for r in c.rays)


def test_json_round_trip():
    c = cone_from_rays(cube_rays())
    assert PointedCone.from_json(c.to_json()).same_as(c)


@pytest.mark.parametrize("k, d", [(1, 3), (2, 4), (2, 5), (3, 5)])
def test_normal_exterior_conversions_are_inverse_and_pair_correctly(k, d):
    normal = tuple(range(1, len(subsets(d, k)) + 1))
    h = normal_as_exterior(normal, k, d)
    assert exterior_as_normal(h) == normal
    for idx in subsets(d, k):
        e = ExteriorVector.basis(d, idx)
        assert top_pair(e, h) == sum(a * b for a, b in zip(normal, e.to_list()))
