"""Independent slow oracles used to cross-check the production paths.

These scan all 3^n sign vectors or project faces onto coordinate axes.
They are gated to small n and never used by the envelope computation.
"""

from __future__ import annotations

from itertools import product

from .arrangement import (
    Arrangement,
    SignVector,
    face_dimension,
    face_system,
    is_face_nonempty,
    is_subface,
)
from .feasibility import project_onto

BRUTE_FORCE_LIMIT = 10


def brute_force_faces(arr: Arrangement) -> dict[int, frozenset[SignVector]]:
    """All nonempty faces grouped by dimension, found by testing every sign vector."""
    if arr.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_LIMIT}")
    found: dict[int, set[SignVector]] = {k: set() for k in range(arr.dim + 1)}
    for sv in product((-1, 0, 1), repeat=arr.n):
        zeros = sv.count(0)
        if zeros > arr.dim:
            continue
        if is_face_nonempty(arr, sv):
            found[face_dimension(arr, sv)].add(sv)
    return {k: frozenset(v) for k, v in found.items()}


def brute_force_faces_with_vertex(arr: Arrangement) -> dict[int, frozenset[SignVector]]:
    faces = brute_force_faces(arr)
    verts = faces[0]
    return {
        k: frozenset(f for f in fs if any(is_subface(v, f) for v in verts))
        for k, fs in faces.items()
    }


def bounded_by_extremes(arr: Arrangement, sv: SignVector) -> bool:
    """Boundedness via coordinate extremes of the closed face.

    The closure is projected onto each axis by Fourier-Motzkin; the face is
    bounded iff every projection has both a lower and an upper bound.
    """
    system = face_system(arr, sv, closed=True)
    for j in range(arr.dim):
        rows = project_onto(system, j)
        if rows is None:
            raise ValueError(f"face {sv} is empty")
        if not any(c > 0 for c, _ in rows) or not any(c < 0 for c, _ in rows):
            return False
    return True


def brute_force_bounded_cells(arr: Arrangement) -> int:
    cells = brute_force_faces(arr)[arr.dim]
    return sum(1 for c in cells if bounded_by_extremes(arr, c))
