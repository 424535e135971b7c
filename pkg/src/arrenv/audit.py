"""Mechanical checks of the lower-bound arguments on concrete arrangements.

2D: external vertices are classified by their number of bounded incident
edges, a unit weight per external vertex is pushed onto lines, and lines are
typed by their two end vertices. 3D: the per-plane restriction count and the
Euler / edge-degree chain leading to the facet bound.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from pathlib import Path

from .arrangement import (
    Arrangement,
    SignVector,
    Vertex,
    enumerate_vertices,
    is_bounded_face,
    is_subface,
    require_simple,
)
from .envelope import (
    bounded_cells,
    external_face_counts,
    external_facets,
    external_facets_via_unbounded_cell,
    restrict,
)
from .errors import AuditError

log = logging.getLogger(__name__)

HOLDS, VIOLATED, NOT_APPLICABLE = "holds", "violated", "not-applicable"
HALF = Fraction(1, 2)


@dataclass
class CensusReport:
    vertex_types: dict[tuple[int, ...], int]
    line_weights: dict[int, Fraction]
    contributions: dict[tuple[int, ...], dict[int, Fraction]]
    total_weight: Fraction
    external_vertices: int


@dataclass
class LineCensus:
    applicable: bool
    line_types: dict[int, tuple[int, int]] = field(default_factory=dict)
    end_vertices: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=dict)
    h22_count: int = 0
    light_lines: int = 0  # lines with weight < 2
    violations: list[str] = field(default_factory=list)


def _external_vertices(arr: Arrangement) -> list[Vertex]:
    facets = external_facets(arr)
    return [v for v in enumerate_vertices(arr) if any(is_subface(v.sign_vector, f) for f in facets)]


def incident_edges(v: Vertex) -> list[tuple[int, SignVector]]:
    """The four edges at a vertex of a line arrangement, as (line, edge)."""
    out = []
    i, j = v.defining_set
    for keep, flip in ((i, j), (j, i)):
        for s in (1, -1):
            sv = list(v.sign_vector)
            sv[flip] = s
            out.append((keep, tuple(sv)))
    return out


def vertex_type_census(arr: Arrangement) -> CensusReport:
    """Type every external vertex (v2/v3/v4) and redistribute its unit weight.

    One unbounded incident edge: weight 1 to the line carrying it.
    Zero or two unbounded incident edges: 1/2 to each line through the vertex.
    """
    if arr.dim != 2:
        raise ValueError("vertex census is for line arrangements")
    require_simple(arr)
    if arr.n < 3:
        raise ValueError("vertex census needs n >= 3")
    types: dict[tuple[int, ...], int] = {}
    contributions: dict[tuple[int, ...], dict[int, Fraction]] = {}
    weights = {i: Fraction(0) for i in range(arr.n)}
    for v in _external_vertices(arr):
        edges = incident_edges(v)
        unbounded = [line for line, e in edges if not is_bounded_face(arr, e)]
        nb = 4 - len(unbounded)
        if nb < 2:
            raise AuditError(
                f"external vertex {v.defining_set} has only {nb} bounded incident edges"
            )
        types[v.defining_set] = nb
        if len(unbounded) == 1:
            share = {unbounded[0]: Fraction(1)}
        else:
            share = {i: HALF for i in v.defining_set}
        contributions[v.defining_set] = share
        for line, w in share.items():
            weights[line] += w
    total = sum(weights.values(), Fraction(0))
    if total != len(types):
        raise AuditError(f"weight not conserved: {total} != {len(types)}")
    return CensusReport(types, weights, contributions, total, len(types))


def _line_order_key(arr: Arrangement, i: int):
    a1, a2 = arr.hyperplanes[i].coeffs
    return lambda v: -a2 * v.point[0] + a1 * v.point[1]


def line_type_census(
    arr: Arrangement, census: CensusReport | None = None, strict: bool = True
) -> LineCensus:
    """Type each line by its extreme vertices and check the per-line weight bounds.

    Checked: end vertices are external and never v4; h33 and h23 lines weigh
    at least 2, h22 lines at least 1; an h23 line carries a v4 vertex; at most
    two h22 lines. ``light_lines`` counts lines of weight below 2, which is
    the quantity the total-weight bound really depends on. With ``strict``
    any violation raises ``AuditError``; otherwise they are listed.
    """
    if arr.dim != 2:
        raise ValueError("line census is for line arrangements")
    if arr.n < 4:
        return LineCensus(applicable=False)
    census = census or vertex_type_census(arr)
    out = LineCensus(applicable=True)
    bad = out.violations
    verts = enumerate_vertices(arr)
    for i in range(arr.n):
        on = sorted((v for v in verts if i in v.defining_set), key=_line_order_key(arr, i))
        ends = (on[0], on[-1])
        out.end_vertices[i] = (ends[0].defining_set, ends[1].defining_set)
        kinds = []
        for v in ends:
            t = census.vertex_types.get(v.defining_set)
            if t is None:
                bad.append(f"end vertex {v.defining_set} of line {i} is not external")
            elif t == 4:
                bad.append(f"end vertex {v.defining_set} of line {i} has type v4")
            kinds.append(t or 0)
        ltype = tuple(sorted(kinds))
        out.line_types[i] = ltype
        w = census.line_weights[i]
        if ltype == (3, 3) and w < 2:
            bad.append(f"line {i} of type h33 has weight {w} < 2")
        elif ltype == (2, 2) and w < 1:
            bad.append(f"line {i} of type h22 has weight {w} < 1")
        elif ltype == (2, 3):
            if not any(census.vertex_types.get(v.defining_set) == 4 for v in on):
                bad.append(f"line {i} of type h23 carries no v4 vertex")
            if w < 2:
                bad.append(f"line {i} of type h23 has weight {w} < 2")
    out.h22_count = sum(1 for t in out.line_types.values() if t == (2, 2))
    out.light_lines = sum(1 for w in census.line_weights.values() if w < 2)
    if out.h22_count > 2:
        bad.append(f"{out.h22_count} lines of type h22, at most 2 allowed")
    if out.light_lines > 2:
        bad.append(f"{out.light_lines} lines of weight < 2, at most 2 allowed")
    if strict and bad:
        raise AuditError("; ".join(bad))
    return out


@dataclass
class BoundsReport:
    d: int
    n: int
    facets: int
    lower_bound: Fraction | None
    hypothesis_bound: int
    verdicts: dict[str, str]

    @property
    def ok(self) -> bool:
        return all(v != VIOLATED for k, v in self.verdicts.items() if k != "hypothesis")

    def assert_propositions(self) -> None:
        bad = [k for k, v in self.verdicts.items() if v == VIOLATED and k != "hypothesis"]
        if bad:
            raise AuditError(f"proven bounds violated: {', '.join(bad)}")


def _verdict(applicable: bool, holds: bool) -> str:
    if not applicable:
        return NOT_APPLICABLE
    return HOLDS if holds else VIOLATED


def check_bounds(arr: Arrangement, dump_dir: Path | None = None) -> BoundsReport:
    """Compare f^0_{d-1} with every applicable bound as exact rationals.

    The ``hypothesis`` verdict is informational; a violation is logged and,
    with ``dump_dir``, the arrangement is written out for inspection.
    """
    rep = external_face_counts(arr)
    d, n = arr.dim, arr.n
    facets = rep.facet_count
    hyp = d * comb(n - 2, d - 1)
    verdicts: dict[str, str] = {}
    if d == 2:
        lower = Fraction(2 * (n - 1))
        applicable = n >= 4
        verdicts["lower_2d"] = _verdict(applicable, facets >= lower)
        verdicts["vertices_equal_facets"] = _verdict(True, rep[0] == rep[1])
    else:
        lower = Fraction(n * (n - 2) + 6, 3)
        applicable = n >= 5
        f0, f1, f2 = rep.external_counts
        verdicts["lower_3d"] = _verdict(applicable, facets >= lower)
        verdicts["euler"] = _verdict(n >= 4, rep.euler == 2)
        verdicts["edge_degree"] = _verdict(applicable, 2 * f1 >= 3 * f0)
        verdicts["vertex_bound"] = _verdict(applicable, f0 >= Fraction(2 * n * (n - 2), 3))
    verdicts["hypothesis"] = _verdict(True, facets >= hyp)
    if verdicts["hypothesis"] == VIOLATED:
        log.warning("hypothesis bound %d exceeds %d external facets (d=%d, n=%d)", hyp, facets, d, n)
        if dump_dir is not None:
            from .fileio import write_arrangement

            dump_dir.mkdir(parents=True, exist_ok=True)
            path = dump_dir / f"hypothesis_d{d}_n{n}_f{facets}.arr"
            write_arrangement(path, arr, comments=["hypothesis bound violated"])
    return BoundsReport(d, n, facets, lower if applicable else None, hyp, verdicts)


@dataclass
class TripleCountReport:
    applicable: bool
    restriction_counts: list[int] = field(default_factory=list)
    restriction_total: int = 0
    external_vertices: int = 0
    multiplicity: dict[tuple[int, ...], int] = field(default_factory=dict)


def triple_counting_check(arr: Arrangement) -> TripleCountReport:
    """External vertices of each plane's line arrangement, counted over all planes."""
    if arr.dim != 3:
        raise ValueError("triple counting is for plane arrangements")
    require_simple(arr)
    if arr.n < 5:
        return TripleCountReport(applicable=False)
    ext3 = {v.defining_set for v in _external_vertices(arr)}
    out = TripleCountReport(applicable=True, external_vertices=len(ext3))
    for i in range(arr.n):
        res = restrict(arr, i)
        if res.arrangement.n != arr.n - 1:
            raise AuditError(f"restriction to plane {i} has {res.arrangement.n} lines")
        ext2 = _external_vertices(res.arrangement)
        if len(ext2) < 2 * (arr.n - 2):
            raise AuditError(
                f"restriction to plane {i} has {len(ext2)} external vertices < {2 * (arr.n - 2)}"
            )
        for v in ext2:
            key = res.vertex_to_3d(v.defining_set)
            if key not in ext3:
                raise AuditError(f"external vertex {key} of restriction {i} is internal in 3D")
            out.multiplicity[key] = out.multiplicity.get(key, 0) + 1
        out.restriction_counts.append(len(ext2))
    out.restriction_total = sum(out.restriction_counts)
    if any(m > 3 for m in out.multiplicity.values()):
        raise AuditError("an external vertex was counted more than three times")
    third = Fraction(out.restriction_total, 3)
    if not out.external_vertices >= third >= Fraction(2 * arr.n * (arr.n - 2), 3):
        raise AuditError(
            f"counting chain broken: f0={out.external_vertices}, sum/3={third}, "
            f"2n(n-2)/3={Fraction(2 * arr.n * (arr.n - 2), 3)}"
        )
    return out


@dataclass
class AuditReport:
    d: int
    n: int
    bounds: BoundsReport
    definitions_agree: bool
    census: CensusReport | None = None
    lines: LineCensus | None = None
    triple: TripleCountReport | None = None
    last_plane_cells: dict[str, int] | None = None
    errors: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors and self.bounds.ok and self.definitions_agree


def _last_hyperplane_cells(arr: Arrangement) -> dict[str, int]:
    """Bounded cells gained by adding the last hyperplane, next to C(n,2)."""
    n, d = arr.n, arr.dim
    before = len(bounded_cells(arr.without(n - 1)))
    after = len(bounded_cells(arr))
    return {
        "before": before,
        "after": after,
        "added": after - before,
        "expected_added_C(n-2,d-1)": comb(n - 2, d - 1),
        "alternative_C(n,2)": comb(n, 2),
    }


def audit(arr: Arrangement, dump_dir: Path | None = None) -> AuditReport:
    """Run every applicable check; proven-statement failures land in ``errors``."""
    require_simple(arr)
    bounds = check_bounds(arr, dump_dir)
    agree = external_facets(arr) == external_facets_via_unbounded_cell(arr)
    rep = AuditReport(arr.dim, arr.n, bounds, agree)
    if not agree:
        rep.errors.append("the two external-facet definitions disagree")
    if not bounds.ok:
        rep.errors.append("proven bound violated: " + ", ".join(
            k for k, v in bounds.verdicts.items() if v == VIOLATED and k != "hypothesis"))
    try:
        if arr.dim == 2:
            if arr.n >= 3:
                rep.census = vertex_type_census(arr)
                rep.lines = line_type_census(arr, rep.census, strict=False)
                rep.errors.extend(rep.lines.violations)
        else:
            rep.triple = triple_counting_check(arr)
            if arr.n >= 5:
                rep.last_plane_cells = _last_hyperplane_cells(arr)
    except AuditError as e:
        rep.errors.append(str(e))
    return rep


def external_vertex_sets(arr: Arrangement) -> set[tuple[int, ...]]:
    return {v.defining_set for v in _external_vertices(arr)}


__all__ = [
    "CensusReport",
    "LineCensus",
    "BoundsReport",
    "TripleCountReport",
    "AuditReport",
    "vertex_type_census",
    "line_type_census",
    "check_bounds",
    "triple_counting_check",
    "audit",
    "incident_edges",
    "external_vertex_sets",
]
