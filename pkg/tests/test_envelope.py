from fractions import Fraction

import pytest

from arrenv.arrangement import Arrangement, adjacent_cells, check_simple, is_bounded_face
from arrenv.audit import external_vertex_sets
from arrenv.envelope import (
    euler_characteristic,
    external_face_counts,
    external_facets,
    external_facets_via_unbounded_cell,
    restrict,
)
from arrenv.generators import (
    cyclic_plane_arrangement,
    paper_line_arrangement,
    paper_plane_arrangement,
    random_simple_arrangement,
)

RANDOM2 = [random_simple_arrangement(2, 4 + s % 5, seed=s) for s in range(25)]
RANDOM3 = [random_simple_arrangement(3, 5 + s % 3, seed=s) for s in range(10)]


def test_triangle(triangle):
    assert len(external_facets(triangle)) == 3
    rep = external_face_counts(triangle)
    assert rep.external_counts == (3, 3)
    assert rep.bounded_cells == 1
    assert rep.euler is None


def test_simplex(simplex3):
    rep = external_face_counts(simplex3)
    assert rep.external_counts == (4, 6, 4)
    assert rep.euler == 2
    assert euler_characteristic(simplex3) == 2


def test_paper_counts():
    assert len(external_facets(paper_line_arrangement(7))) == 12
    assert len(external_facets(paper_plane_arrangement(6))) == 23


@pytest.mark.parametrize("n", range(4, 13))
def test_line_family_tight(n):
    rep = external_face_counts(paper_line_arrangement(n))
    assert rep.external_counts == (2 * (n - 1), 2 * (n - 1))


def test_euler_on_families():
    assert euler_characteristic(paper_plane_arrangement(6)) == 2
    assert euler_characteristic(cyclic_plane_arrangement(6)) == 2


def test_euler_needs_planes(triangle):
    with pytest.raises(ValueError):
        euler_characteristic(triangle)


@pytest.mark.parametrize("arr", RANDOM2, ids=lambda a: f"n{a.n}")
def test_2d_invariants(arr):
    rep = external_face_counts(arr)
    assert rep[0] == rep[1]
    assert external_facets(arr) == external_facets_via_unbounded_cell(arr)
    for f in external_facets(arr):
        assert is_bounded_face(arr, f)
        assert sum(is_bounded_face(arr, c) for c in adjacent_cells(arr, f)) == 1


@pytest.mark.parametrize("arr", RANDOM3, ids=lambda a: f"n{a.n}")
def test_3d_invariants(arr):
    n = arr.n
    f0, f1, f2 = external_face_counts(arr).external_counts
    assert f0 - f1 + f2 == 2
    assert 2 * f1 >= 3 * f0
    assert f0 >= Fraction(2 * n * (n - 2), 3)
    assert external_facets(arr) == external_facets_via_unbounded_cell(arr)


def test_restrict_simplex(simplex3):
    for i in range(4):
        res = restrict(simplex3, i)
        assert res.arrangement.n == 3
        assert check_simple(res.arrangement)
        assert len(external_facets(res.arrangement)) == 3


def test_restrict_a36_is_simple_5_lines():
    res = restrict(paper_plane_arrangement(6), 0)
    assert res.arrangement.dim == 2 and res.arrangement.n == 5
    assert check_simple(res.arrangement)
    assert res.lines == (1, 2, 3, 4, 5)


@pytest.mark.parametrize("arr", [paper_plane_arrangement(6), *RANDOM3[:5]], ids=lambda a: f"n{a.n}")
def test_restriction_vertices_lift(arr):
    ext3 = external_vertex_sets(arr)
    counted: dict = {}
    for i in range(arr.n):
        res = restrict(arr, i)
        for key in external_vertex_sets(res.arrangement):
            lifted = res.vertex_to_3d(key)
            assert lifted in ext3
            counted[lifted] = counted.get(lifted, 0) + 1
        # the frame map sends 2D vertices onto the 3D ones
        from arrenv.arrangement import enumerate_vertices

        by_set = {v.defining_set: v.point for v in enumerate_vertices(arr)}
        for v in enumerate_vertices(res.arrangement):
            assert res.lift(v.point) == by_set[res.vertex_to_3d(v.defining_set)]
    assert all(c <= 3 for c in counted.values())


def test_restrict_rejects_lines(triangle):
    with pytest.raises(ValueError):
        restrict(triangle, 0)


def test_frame_drops_largest_coefficient():
    arr = Arrangement.from_rows(3, [(1, 5, 5, 1), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 2, 3, 7)])
    res = restrict(arr, 0)
    assert res.dropped == 1 and res.frame == (0, 2)
