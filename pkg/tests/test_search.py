import pytest

from arrenv.arrangement import check_simple
from arrenv.envelope import external_facets
from arrenv.errors import GuardrailError
from arrenv.generators import paper_plane_arrangement
from arrenv.search import minimize_external_facets


def test_deterministic():
    a = minimize_external_facets(2, 5, seed=3, iterations=60)
    b = minimize_external_facets(2, 5, seed=3, iterations=60)
    assert a.trace == b.trace and a.best == b.best


def test_best_is_monotone_and_reproducible():
    res = minimize_external_facets(2, 6, seed=11, iterations=300)
    counts = [c for _, c in res.trace]
    assert counts == sorted(counts, reverse=True)
    assert check_simple(res.best)
    assert len(external_facets(res.best)) == res.best_count


@pytest.mark.parametrize("n", [4, 5, 6])
def test_lines_reach_the_minimum(n):
    res = minimize_external_facets(2, n, seed=1, iterations=600)
    assert res.best_count == 2 * (n - 1)


def test_planes_from_a36(tmp_path):
    res = minimize_external_facets(3, 6, seed=42, iterations=40, start=paper_plane_arrangement(6), dump_dir=tmp_path)
    assert 10 <= res.best_count <= 23
    assert res.trace[0] == (0, 23)
    assert res.flagged == [] or res.best_count < 22


def test_rejections():
    with pytest.raises(GuardrailError):
        minimize_external_facets(3, 17, seed=0, iterations=1)
    with pytest.raises(ValueError):
        minimize_external_facets(3, 6, seed=0, iterations=0)
    with pytest.raises(ValueError):
        minimize_external_facets(2, 6, seed=0, iterations=1, start=paper_plane_arrangement(6))
