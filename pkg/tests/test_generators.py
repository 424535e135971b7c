from fractions import Fraction as F

import pytest

from arrenv.arrangement import check_simple, enumerate_faces
from arrenv.envelope import external_face_counts, external_facets
from arrenv.fileio import serialize_arrangement
from arrenv.generators import (
    SplitMix64,
    cyclic_plane_arrangement,
    paper_line_arrangement,
    paper_plane_arrangement,
    random_simple_arrangement,
)


def test_splitmix_reference_values():
    r = SplitMix64(0)
    assert [r.next() for _ in range(3)] == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]
    r = SplitMix64(1234567)
    assert [r.next() for _ in range(3)] == [6457827717110365317, 3203168211198807973, 9817491932198370423]


def test_splitmix_integer_range():
    r = SplitMix64(7)
    vals = [r.integer(-3, 3) for _ in range(2000)]
    assert set(vals) == set(range(-3, 4))


def test_line_family_geometry():
    arr = paper_line_arrangement(7)
    eps = F(1, 8)
    h = arr.hyperplanes
    assert (h[0].coeffs, h[0].rhs) == ((0, 1), 0)
    assert (h[1].coeffs, h[1].rhs) == ((1, 0), 0)
    for k in range(3, 7):
        p, q = 1 + (k - 3) * eps, 1 - (k - 3) * eps
        assert h[k - 1].evaluate((p, F(0))) == 0
        assert h[k - 1].evaluate((F(0), q)) == 0
    assert h[6].evaluate((F(2), F(0))) == 0
    assert h[6].evaluate((F(0), 2 + eps)) == 0


def test_plane_family_geometry():
    arr = paper_plane_arrangement(7)
    eps = F(1, 6)
    h = arr.hyperplanes
    for k in range(4, 7):
        t = k - 4
        assert h[k - 1].evaluate((1 + 2 * t * eps, 0, 0)) == 0
        assert h[k - 1].evaluate((0, 1 + t * eps, 0)) == 0
        assert h[k - 1].evaluate((0, 0, 1 - t * eps)) == 0
    assert h[6].evaluate((3, 0, 0)) == 0
    assert h[6].evaluate((0, 2, 0)) == 0
    assert h[6].evaluate((0, 0, 3 + eps)) == 0


@pytest.mark.parametrize("n, expected", [(4, 6), (7, 12)])
def test_line_family_counts(n, expected):
    assert len(external_facets(paper_line_arrangement(n))) == expected


def test_line_family_simple():
    assert check_simple(paper_line_arrangement(5))


@pytest.mark.parametrize("n, expected", [(5, 12), (6, 23), (7, 38)])
def test_plane_family_counts(n, expected):
    assert len(external_facets(paper_plane_arrangement(n))) == expected


@pytest.mark.parametrize("n, expected", [(4, 4), (5, 12), (6, 24)])
def test_cyclic_family_counts(n, expected):
    assert len(external_facets(cyclic_plane_arrangement(n))) == expected


def test_cyclic_is_prefix():
    assert cyclic_plane_arrangement(6).hyperplanes == paper_plane_arrangement(7).hyperplanes[:6]


@pytest.mark.parametrize("n", range(5, 9))
def test_plane_formula(n):
    assert len(external_facets(paper_plane_arrangement(n))) == (n - 4) * (2 * n - 3) + 5


@pytest.mark.parametrize("n", range(4, 9))
def test_cyclic_formula(n):
    assert len(external_facets(cyclic_plane_arrangement(n))) == 2 * (n - 2) * (n - 3)


def _signature(arr):
    rep = external_face_counts(arr)
    faces = tuple(len(enumerate_faces(arr, k)) for k in range(arr.dim + 1))
    return rep.external_counts, rep.bounded_cells, faces, tuple(external_facets(arr))


@pytest.mark.parametrize("n", [4, 6, 9])
def test_line_family_epsilon_invariance(n):
    a = paper_line_arrangement(n, F(1, 2 * (n - 3)))
    b = paper_line_arrangement(n, F(1, 3 * (n - 3)))
    assert a != b
    assert _signature(a) == _signature(b)


@pytest.mark.parametrize("n", [5, 6, 8])
def test_plane_family_epsilon_invariance(n):
    a = paper_plane_arrangement(n, F(1, 2 * (n - 4)))
    b = paper_plane_arrangement(n, F(1, 3 * (n - 4)))
    assert _signature(a) == _signature(b)


@pytest.mark.parametrize(
    "call",
    [
        lambda: paper_line_arrangement(3),
        lambda: paper_line_arrangement(6, F(1, 3)),
        lambda: paper_line_arrangement(6, F(0)),
        lambda: paper_plane_arrangement(4),
        lambda: paper_plane_arrangement(6, F(1, 2)),
        lambda: cyclic_plane_arrangement(3),
        lambda: random_simple_arrangement(4, 5),
        lambda: random_simple_arrangement(2, 2),
    ],
)
def test_rejected_parameters(call):
    with pytest.raises(ValueError):
        call()


def test_random_examples():
    a2 = random_simple_arrangement(2, 4, seed=1, coord_bound=100)
    assert check_simple(a2)
    assert len(external_facets(a2)) >= 6
    a3 = random_simple_arrangement(3, 5, seed=1, coord_bound=100)
    assert len(external_facets(a3)) >= 7


def test_random_is_deterministic():
    a = serialize_arrangement(random_simple_arrangement(3, 6, seed=99, coord_bound=10))
    b = serialize_arrangement(random_simple_arrangement(3, 6, seed=99, coord_bound=10))
    assert a == b
    assert a != serialize_arrangement(random_simple_arrangement(3, 6, seed=98, coord_bound=10))


def test_random_coefficients_in_box():
    arr = random_simple_arrangement(2, 8, seed=3, coord_bound=5)
    for h in arr.hyperplanes:
        assert all(abs(v) <= 5 and v.denominator == 1 for v in (*h.coeffs, h.rhs))


def test_random_gives_up():
    from arrenv.errors import ArrangementError

    # entries in {-1, 0, 1} give only four line directions, so five lines always
    # contain a parallel pair
    with pytest.raises(ArrangementError, match="after 1000 draws"):
        random_simple_arrangement(2, 5, seed=0, coord_bound=1)
