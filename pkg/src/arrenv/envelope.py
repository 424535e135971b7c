"""External facets, external k-face counts and restriction to a plane."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arrangement import (
    Arrangement,
    Hyperplane,
    SignVector,
    adjacent_cells,
    enumerate_faces,
    is_bounded_face,
    is_subface,
    require_simple,
)


@dataclass(frozen=True)
class EnvelopeReport:
    dim: int
    n: int
    external_counts: tuple[int, ...]  # f^0_k for k = 0..d-1
    bounded_cells: int
    external_facets: tuple[SignVector, ...] = field(repr=False)

    @property
    def euler(self) -> int | None:
        if self.dim != 3:
            return None
        f0, f1, f2 = self.external_counts
        return f0 - f1 + f2

    @property
    def facet_count(self) -> int:
        return self.external_counts[-1]

    def __getitem__(self, k: int) -> int:
        return self.external_counts[k]


def external_facets(arr: Arrangement) -> list[SignVector]:
    """Bounded facets with exactly one bounded incident cell, sorted."""
    key = "external_facets"
    if key not in arr._cache:
        require_simple(arr)
        out = []
        for f in enumerate_faces(arr, arr.dim - 1):
            if not is_bounded_face(arr, f):
                continue
            plus, minus = adjacent_cells(arr, f)
            if is_bounded_face(arr, plus) != is_bounded_face(arr, minus):
                out.append(f)
        arr._cache[key] = sorted(out)
    return list(arr._cache[key])


def external_facets_via_unbounded_cell(arr: Arrangement) -> list[SignVector]:
    """Second definition: bounded facets lying on at least one unbounded cell."""
    require_simple(arr)
    out = []
    for f in enumerate_faces(arr, arr.dim - 1):
        if is_bounded_face(arr, f) and not all(
            is_bounded_face(arr, c) for c in adjacent_cells(arr, f)
        ):
            out.append(f)
    return sorted(out)


def bounded_cells(arr: Arrangement) -> list[SignVector]:
    require_simple(arr)
    return sorted(c for c in enumerate_faces(arr, arr.dim) if is_bounded_face(arr, c))


def external_faces(arr: Arrangement, k: int) -> list[SignVector]:
    """k-faces lying in the closure of some external facet."""
    facets = external_facets(arr)
    if k == arr.dim - 1:
        return facets
    return sorted(
        g for g in enumerate_faces(arr, k) if any(is_subface(g, f) for f in facets)
    )


def external_face_counts(arr: Arrangement) -> EnvelopeReport:
    facets = external_facets(arr)
    counts = tuple(len(external_faces(arr, k)) for k in range(arr.dim - 1)) + (len(facets),)
    return EnvelopeReport(
        dim=arr.dim,
        n=arr.n,
        external_counts=counts,
        bounded_cells=len(bounded_cells(arr)),
        external_facets=tuple(facets),
    )


def euler_characteristic(arr: Arrangement) -> int:
    if arr.dim != 3:
        raise ValueError("Euler characteristic of the envelope is defined here for d=3")
    return external_face_counts(arr).euler


@dataclass(frozen=True)
class Restriction:
    """Line arrangement induced on one plane of a plane arrangement.

    ``lines[t]`` is the index in the 3D arrangement of the plane cutting
    out line ``t``; ``frame`` lists the two kept 3D coordinates.
    """

    arrangement: Arrangement
    plane: int
    lines: tuple[int, ...]
    frame: tuple[int, int]
    dropped: int
    source: Hyperplane = field(repr=False)

    def vertex_to_3d(self, defining_set: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(sorted((self.plane,) + tuple(self.lines[t] for t in defining_set)))

    def lift(self, p2: tuple[Fraction, Fraction]) -> tuple[Fraction, ...]:
        h = self.source
        x = [Fraction(0)] * 3
        for c, v in zip(self.frame, p2):
            x[c] = v
        m = self.dropped
        x[m] = (h.rhs - sum(h.coeffs[c] * x[c] for c in self.frame)) / h.coeffs[m]
        return tuple(x)


def restrict(arr: Arrangement, i: int) -> Restriction:
    """Intersect every other plane with plane ``i``.

    The coordinate with the largest |coefficient| in plane ``i`` (lowest
    index on ties) is solved for; the other two are kept as the 2D frame.
    """
    if arr.dim != 3:
        raise ValueError("restriction is defined for plane arrangements")
    require_simple(arr)
    h = arr.hyperplanes[i]
    m = max(range(3), key=lambda c: (abs(h.coeffs[c]), -c))
    frame = tuple(c for c in range(3) if c != m)
    lines, hs = [], []
    for k, g in enumerate(arr.hyperplanes):
        if k == i:
            continue
        r = g.coeffs[m] / h.coeffs[m]
        coeffs = tuple(g.coeffs[c] - r * h.coeffs[c] for c in frame)
        hs.append(Hyperplane(coeffs, g.rhs - r * h.rhs))
        lines.append(k)
    sub = Arrangement(2, tuple(hs))
    require_simple(sub)
    return Restriction(sub, i, tuple(lines), frame, m, h)
