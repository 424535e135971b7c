from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrenv.feasibility import LinearSystem, is_feasible, project_onto


@pytest.mark.parametrize(
    "dim, rows, expected",
    [
        (1, [((1,), 0, ">="), ((1,), 1, ">=")], True),
        (1, [((1,), 0, ">="), ((-1,), 0, ">")], False),
        (2, [((1, 0), 0, ">"), ((0, 1), 0, ">"), ((1, 1), 1, "=")], True),
        # closed version touches, open version does not
        (1, [((1,), 0, ">="), ((-1,), 0, ">=")], True),
        (2, [((1, 1), 1, "="), ((1, 1), 2, "=")], False),
        (2, [((0, 0), 0, "=")], True),
        (2, [((0, 0), 1, ">=")], False),
        (3, [((1, 1, 1), 1, "="), ((1, 0, 0), 0, ">"), ((0, 1, 0), 0, ">"), ((0, 0, 1), 0, ">")], True),
        (3, [((1, 1, 1), 0, "="), ((1, 0, 0), 0, ">"), ((0, 1, 0), 0, ">"), ((0, 0, 1), 0, ">")], False),
    ],
)
def test_examples(dim, rows, expected):
    assert is_feasible(LinearSystem.of(dim, rows)) is expected


def test_dimension_checked():
    with pytest.raises(ValueError):
        LinearSystem.of(2, [((1,), 0, ">=")])


ints = st.integers(-6, 6)


@st.composite
def system_with_witness(draw):
    d = draw(st.integers(1, 3))
    x0 = [F(draw(ints), draw(st.integers(1, 4))) for _ in range(d)]
    rows = []
    for _ in range(draw(st.integers(1, 7))):
        a = [draw(ints) for _ in range(d)]
        val = sum(ai * xi for ai, xi in zip(a, x0))
        rel = draw(st.sampled_from(["=", ">=", ">"]))
        slack = F(draw(st.integers(0, 3))) if rel != "=" else F(0)
        if rel == ">" and slack == 0:
            slack = F(1, 2)
        rows.append((a, val - slack, rel))
    return d, x0, rows


@settings(max_examples=200, deadline=None)
@given(system_with_witness())
def test_systems_with_a_witness_are_feasible(data):
    d, _, rows = data
    assert is_feasible(LinearSystem.of(d, rows))


@settings(max_examples=200, deadline=None)
@given(system_with_witness(), st.integers(0, 10))
def test_contradiction_makes_infeasible(data, k):
    d, x0, rows = data
    a, b, _ = rows[k % len(rows)]
    if all(v == 0 for v in a):
        return
    # a.x >= b together with a.x < b is empty
    bad = rows + [(a, b, ">="), ([-v for v in a], -b, ">")]
    assert not is_feasible(LinearSystem.of(d, bad))


def test_projection_bounds_a_box():
    sys_ = LinearSystem.of(2, [((1, 0), 0, ">="), ((-1, 0), -2, ">="), ((0, 1), 1, "="), ((1, 1), 0, ">=")])
    rows = project_onto(sys_, 0)
    assert any(c > 0 for c, _ in rows) and any(c < 0 for c, _ in rows)
    lo = max(e / c for c, e in rows if c > 0)
    hi = min(e / c for c, e in rows if c < 0)
    assert (lo, hi) == (0, 2)


def test_projection_of_empty_system():
    sys_ = LinearSystem.of(2, [((1, 0), 1, ">="), ((-1, 0), 0, ">=")])
    assert project_onto(sys_, 1) is None
