"""Drawings of arrangements: SVG and OFF documents, matplotlib figures."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction
from functools import cmp_to_key
from pathlib import Path
from typing import Sequence

from .arrangement import (
    Arrangement,
    Vertex,
    adjacent_cells,
    enumerate_vertices,
    face_vertices,
    is_bounded_face,
    require_simple,
)
from .envelope import bounded_cells, external_faces, external_facets
from .exact import Point

PAD = Fraction(1, 5)
SVG_WIDTH = 800


def _cyclic_order(points: Sequence[tuple[Fraction, Fraction]]) -> list[int]:
    """Indices of convex-position points in counter-clockwise order (exact)."""
    m = len(points)
    cx = sum((p[0] for p in points), Fraction(0)) / m
    cy = sum((p[1] for p in points), Fraction(0)) / m
    vec = [(p[0] - cx, p[1] - cy) for p in points]

    def half(v):
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    def cmp(i, j):
        a, b = vec[i], vec[j]
        ha, hb = half(a), half(b)
        if ha != hb:
            return ha - hb
        cross = a[0] * b[1] - a[1] * b[0]
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    return sorted(range(m), key=cmp_to_key(cmp))


def _vertex_box(arr: Arrangement):
    pts = [v.point for v in enumerate_vertices(arr)]
    lo = [min(p[c] for p in pts) for c in range(2)]
    hi = [max(p[c] for p in pts) for c in range(2)]
    for c in range(2):
        span = hi[c] - lo[c] or Fraction(1)
        lo[c] -= PAD * span
        hi[c] += PAD * span
    return lo, hi


def clip_line(coeffs, rhs, lo, hi) -> tuple[Point, Point] | None:
    """Segment of ``a . x = b`` inside the box ``[lo, hi]``, exactly."""
    a1, a2 = coeffs
    norm = a1 * a1 + a2 * a2
    p0 = (a1 * rhs / norm, a2 * rhs / norm)
    u = (-a2, a1)
    tmin, tmax = None, None
    for c in range(2):
        if u[c] == 0:
            if not lo[c] <= p0[c] <= hi[c]:
                return None
            continue
        t1 = (lo[c] - p0[c]) / u[c]
        t2 = (hi[c] - p0[c]) / u[c]
        t1, t2 = min(t1, t2), max(t1, t2)
        tmin = t1 if tmin is None else max(tmin, t1)
        tmax = t2 if tmax is None else min(tmax, t2)
    if tmin is None or tmin > tmax:
        return None
    return (
        (p0[0] + tmin * u[0], p0[1] + tmin * u[1]),
        (p0[0] + tmax * u[0], p0[1] + tmax * u[1]),
    )


def _ordered_polygon(arr: Arrangement, face) -> list[Vertex]:
    verts = face_vertices(arr, face)
    order = _cyclic_order([v.point for v in verts])
    return [verts[i] for i in order]


def render_svg(arr: Arrangement, shade_bounded: bool = True) -> str:
    """Lines clipped to the padded vertex box, external edges highlighted.

    Element classes: ``arrangement-line``, ``external-edge``,
    ``bounded-cell`` and ``external-vertex``.
    """
    if arr.dim != 2:
        raise ValueError("SVG rendering is for line arrangements")
    require_simple(arr)
    lo, hi = _vertex_box(arr)
    scale = Fraction(SVG_WIDTH) / (hi[0] - lo[0])
    height = (hi[1] - lo[1]) * scale

    def xy(p):
        return (float((p[0] - lo[0]) * scale), float((hi[1] - p[1]) * scale))

    svg = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        width=str(SVG_WIDTH),
        height=f"{float(height):.2f}",
        viewBox=f"0 0 {SVG_WIDTH} {float(height):.2f}",
    )
    ET.SubElement(svg, "style").text = (
        ".arrangement-line{stroke:#555;stroke-width:1}"
        ".external-edge{stroke:#c0392b;stroke-width:3}"
        ".bounded-cell{fill:#d6e4f0;stroke:none}"
        ".external-vertex{fill:#c0392b}"
    )
    if shade_bounded:
        g = ET.SubElement(svg, "g", id="bounded-cells")
        for cell in bounded_cells(arr):
            pts = " ".join("%.3f,%.3f" % xy(v.point) for v in _ordered_polygon(arr, cell))
            ET.SubElement(g, "polygon", {"class": "bounded-cell", "points": pts})
    g = ET.SubElement(svg, "g", id="lines")
    for i, h in enumerate(arr.hyperplanes):
        seg = clip_line(h.coeffs, h.rhs, lo, hi)
        if seg is None:
            continue
        (x1, y1), (x2, y2) = xy(seg[0]), xy(seg[1])
        ET.SubElement(g, "line", {
            "class": "arrangement-line", "data-index": str(i),
            "x1": f"{x1:.3f}", "y1": f"{y1:.3f}", "x2": f"{x2:.3f}", "y2": f"{y2:.3f}",
        })
    g = ET.SubElement(svg, "g", id="envelope")
    for f in external_facets(arr):
        a, b = face_vertices(arr, f)
        (x1, y1), (x2, y2) = xy(a.point), xy(b.point)
        ET.SubElement(g, "line", {
            "class": "external-edge",
            "x1": f"{x1:.3f}", "y1": f"{y1:.3f}", "x2": f"{x2:.3f}", "y2": f"{y2:.3f}",
        })
    for v in external_faces(arr, 0):
        p = next(w.point for w in face_vertices(arr, v))
        x, y = xy(p)
        ET.SubElement(g, "circle", {"class": "external-vertex", "cx": f"{x:.3f}", "cy": f"{y:.3f}", "r": "3"})
    ET.indent(svg)
    return ET.tostring(svg, encoding="unicode") + "\n"


def _sub(p, q):
    return tuple(x - y for x, y in zip(p, q))


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _centroid(points):
    m = len(points)
    return tuple(sum((p[c] for p in points), Fraction(0)) / m for c in range(len(points[0])))


def envelope_polygons(arr: Arrangement) -> tuple[list[Vertex], list[list[int]]]:
    """External vertices and each external facet as an outward-oriented cycle."""
    if arr.dim != 3:
        raise ValueError("envelope polygons are for plane arrangements")
    require_simple(arr)
    facets = external_facets(arr)
    ext_sv = set(external_faces(arr, 0))
    verts = [v for v in enumerate_vertices(arr) if v.sign_vector in ext_sv]
    index = {v.defining_set: k for k, v in enumerate(verts)}
    polys = []
    for f in facets:
        plane = f.index(0)
        h = arr.hyperplanes[plane]
        drop = max(range(3), key=lambda c: (abs(h.coeffs[c]), -c))
        keep = [c for c in range(3) if c != drop]
        fv = face_vertices(arr, f)
        order = _cyclic_order([(v.point[keep[0]], v.point[keep[1]]) for v in fv])
        cyc = [fv[i] for i in order]
        cell = next(c for c in adjacent_cells(arr, f) if is_bounded_face(arr, c))
        inside = _centroid([v.point for v in face_vertices(arr, cell)])
        p0, p1, p2 = cyc[0].point, cyc[1].point, cyc[2].point
        normal = _cross(_sub(p1, p0), _sub(p2, p0))
        if sum(a * b for a, b in zip(normal, _sub(inside, p0))) > 0:
            cyc.reverse()
        polys.append([index[v.defining_set] for v in cyc])
    return verts, polys


def render_envelope_off(arr: Arrangement) -> str:
    verts, polys = envelope_polygons(arr)
    edges = {frozenset((p[k], p[(k + 1) % len(p)])) for p in polys for k in range(len(p))}
    lines = ["OFF", f"{len(verts)} {len(polys)} {len(edges)}"]
    for v in verts:
        lines.append(" ".join(format(float(c), ".17g") for c in v.point))
    for p in polys:
        lines.append(" ".join(map(str, [len(p), *p])))
    return "\n".join(lines) + "\n"


def parse_off(text: str) -> tuple[list[tuple[float, ...]], list[list[int]], tuple[int, int, int]]:
    """Minimal OFF reader: vertices, faces and the header counts."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not rows or rows[0][0] != "OFF":
        raise ValueError("not an OFF document")
    nv, nf, ne = map(int, rows[1])
    pts = [tuple(map(float, r)) for r in rows[2:2 + nv]]
    faces = []
    for r in rows[2 + nv:2 + nv + nf]:
        k = int(r[0])
        faces.append([int(x) for x in r[1:1 + k]])
    return pts, faces, (nv, nf, ne)


def off_euler(text: str) -> int:
    pts, faces, _ = parse_off(text)
    edges = {frozenset((f[k], f[(k + 1) % len(f)])) for f in faces for k in range(len(f))}
    return len(pts) - len(edges) + len(faces)


# matplotlib figures


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def plot_arrangement(arr: Arrangement, path: str | Path, title: str | None = None) -> Path:
    """Write a figure of the arrangement and its envelope; format from suffix."""
    plt = _pyplot()
    path = Path(path)
    if arr.dim == 2:
        fig, ax = plt.subplots(figsize=(6, 6))
        lo, hi = _vertex_box(arr)
        for cell in bounded_cells(arr):
            poly = [tuple(map(float, v.point)) for v in _ordered_polygon(arr, cell)]
            ax.fill(*zip(*poly), color="#d6e4f0", lw=0)
        for h in arr.hyperplanes:
            seg = clip_line(h.coeffs, h.rhs, lo, hi)
            if seg:
                ax.plot([float(seg[0][0]), float(seg[1][0])], [float(seg[0][1]), float(seg[1][1])],
                        color="#555", lw=0.8)
        for f in external_facets(arr):
            a, b = face_vertices(arr, f)
            ax.plot([float(a.point[0]), float(b.point[0])], [float(a.point[1]), float(b.point[1])],
                    color="#c0392b", lw=2.5)
        ax.set_xlim(float(lo[0]), float(hi[0]))
        ax.set_ylim(float(lo[1]), float(hi[1]))
        ax.set_aspect("equal")
    else:
        from mpl_toolkits.mplot3d.art3d import Poly3DCollection

        verts, polys = envelope_polygons(arr)
        fig = plt.figure(figsize=(7, 6))
        ax = fig.add_subplot(projection="3d")
        xyz = [tuple(map(float, v.point)) for v in verts]
        coll = Poly3DCollection([[xyz[i] for i in p] for p in polys],
                                facecolor="#d6e4f0", edgecolor="#c0392b", lw=0.8, alpha=0.7)
        ax.add_collection3d(coll)
        for c, setter in enumerate((ax.set_xlim, ax.set_ylim, ax.set_zlim)):
            vals = [p[c] for p in xyz]
            span = (max(vals) - min(vals)) or 1.0
            setter(min(vals) - 0.1 * span, max(vals) + 0.1 * span)
    nf = len(external_facets(arr))
    ax.set_title(title or f"d={arr.dim}, n={arr.n}: {nf} external facets")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def plot_search_trace(trace: Sequence[tuple[int, int]], path: str | Path, floor: float | None = None) -> Path:
    plt = _pyplot()
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6, 3.5))
    its = [t for t, _ in trace]
    counts = [c for _, c in trace]
    ax.step(its, counts, where="post", color="#2c3e50")
    ax.plot(its, counts, "o", color="#2c3e50", ms=3)
    if floor is not None:
        ax.axhline(floor, color="#c0392b", ls="--", lw=1, label="proven lower bound")
        ax.legend(frameon=False)
    ax.set_xlabel("iteration")
    ax.set_ylabel("best external facet count")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
