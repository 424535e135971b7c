import xml.etree.ElementTree as ET
from collections import Counter

import pytest

from arrenv.envelope import external_face_counts
from arrenv.generators import (
    cyclic_plane_arrangement,
    paper_line_arrangement,
    paper_plane_arrangement,
    random_simple_arrangement,
)
from arrenv.render import clip_line, off_euler, parse_off, render_envelope_off, render_svg

NS = "{http://www.w3.org/2000/svg}"


def svg_classes(text):
    root = ET.fromstring(text)
    return Counter(el.get("class") for el in root.iter() if el.get("class"))


def test_svg_triangle(triangle):
    c = svg_classes(render_svg(triangle))
    assert c["arrangement-line"] == 3
    assert c["external-edge"] == 3
    assert c["bounded-cell"] == 1


def test_svg_a27():
    c = svg_classes(render_svg(paper_line_arrangement(7)))
    assert c["arrangement-line"] == 7
    assert c["external-edge"] == 12


@pytest.mark.parametrize("seed", range(8))
def test_svg_counts_match_report(seed):
    arr = random_simple_arrangement(2, 4 + seed % 5, seed=seed)
    rep = external_face_counts(arr)
    c = svg_classes(render_svg(arr))
    assert c["external-edge"] == rep[1]
    assert c["external-vertex"] == rep[0]
    assert c["bounded-cell"] == rep.bounded_cells


def test_svg_rejects_planes(simplex3):
    with pytest.raises(ValueError):
        render_svg(simplex3)


def test_clip_line_box():
    seg = clip_line((1, 1), 1, [0, 0], [1, 1])
    assert set(seg) == {(0, 1), (1, 0)}
    assert clip_line((1, 0), 5, [0, 0], [1, 1]) is None


def test_off_simplex(simplex3):
    pts, faces, header = parse_off(render_envelope_off(simplex3))
    assert header == (4, 4, 6)
    assert all(len(f) == 3 for f in faces)
    assert len(pts) == 4


@pytest.mark.parametrize(
    "arr",
    [paper_plane_arrangement(6), cyclic_plane_arrangement(6), *[random_simple_arrangement(3, 5 + s % 3, seed=s) for s in range(5)]],
    ids=lambda a: f"n{a.n}",
)
def test_off_matches_report(arr):
    text = render_envelope_off(arr)
    f0, f1, f2 = external_face_counts(arr).external_counts
    _, faces, header = parse_off(text)
    assert header == (f0, f2, f1)
    assert off_euler(text) == 2
    # consistently oriented closed surface: each directed edge appears once
    directed = Counter((f[k], f[(k + 1) % len(f)]) for f in faces for k in range(len(f)))
    assert max(directed.values()) == 1
    assert all((b, a) in directed for a, b in directed)


def test_off_a36_header():
    assert render_envelope_off(paper_plane_arrangement(6)).splitlines()[1] == "20 23 41"


def test_off_outward(simplex3):
    # the bounded cell of the simplex arrangement is the standard simplex; normals point away from it
    pts, faces, _ = parse_off(render_envelope_off(simplex3))
    inside = [0.25, 0.25, 0.25]
    for f in faces:
        a, b, c = (pts[i] for i in f)
        u = [b[k] - a[k] for k in range(3)]
        v = [c[k] - a[k] for k in range(3)]
        n = [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
        assert sum(n[k] * (inside[k] - a[k]) for k in range(3)) < 0
