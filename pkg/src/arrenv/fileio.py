"""Plain-text arrangement files and the analysis report document.

Arrangement file::

    # optional comment lines
    d n
    a_1 ... a_d b        (n rows, meaning a . x = b)

Every number is ``p`` or ``p/q``. Files are UTF-8 with LF line endings.
"""

from __future__ import annotations

import json
from math import comb
from pathlib import Path
from typing import Any, Iterable

from .arrangement import Arrangement, Hyperplane, check_simple
from .envelope import external_face_counts
from .errors import ParseError
from .exact import format_rational, parse_rational


def parse_arrangement_with_comments(text: str) -> tuple[Arrangement, list[str]]:
    comments: list[str] = []
    header: tuple[int, int] | None = None
    rows: list[Hyperplane] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise ParseError("header must be 'd n'", lineno)
            try:
                d, n = int(fields[0]), int(fields[1])
            except ValueError:
                raise ParseError("malformed header", lineno) from None
            if d not in (2, 3):
                raise ParseError(f"dimension {d} not in {{2, 3}}", lineno)
            if n < 1:
                raise ParseError(f"bad hyperplane count {n}", lineno)
            header = (d, n)
            continue
        d, n = header
        if len(rows) == n:
            raise ParseError(f"more than {n} hyperplane rows", lineno)
        if len(fields) != d + 1:
            raise ParseError(f"expected {d + 1} fields, got {len(fields)}", lineno)
        try:
            values = [parse_rational(f) for f in fields]
        except ValueError as e:
            raise ParseError(str(e), lineno) from None
        if all(v == 0 for v in values[:d]):
            raise ParseError("zero coefficient row", lineno)
        rows.append(Hyperplane(tuple(values[:d]), values[d]))
    if header is None:
        raise ParseError("missing header")
    if len(rows) != header[1]:
        raise ParseError(f"expected {header[1]} hyperplane rows, found {len(rows)}")
    return Arrangement(header[0], tuple(rows)), comments


def parse_arrangement(text: str) -> Arrangement:
    return parse_arrangement_with_comments(text)[0]


def serialize_arrangement(arr: Arrangement, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{arr.dim} {arr.n}")
    for h in arr.hyperplanes:
        lines.append(" ".join(format_rational(v) for v in (*h.coeffs, h.rhs)))
    return "\n".join(lines) + "\n"


def read_arrangement(path: str | Path) -> tuple[Arrangement, list[str]]:
    return parse_arrangement_with_comments(Path(path).read_text(encoding="utf-8"))


def write_arrangement(path: str | Path, arr: Arrangement, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(serialize_arrangement(arr, comments), encoding="utf-8", newline="\n")


def analysis_report(arr: Arrangement) -> dict[str, Any]:
    """The analysis document: counts, bounds and verdicts, JSON-ready."""
    from .audit import check_bounds

    doc: dict[str, Any] = {"d": arr.dim, "n": arr.n, "simple": bool(check_simple(arr))}
    if not doc["simple"]:
        return doc
    rep = external_face_counts(arr)
    for k, c in enumerate(rep.external_counts):
        doc[f"f{k}_external"] = c
    doc["bounded_cells"] = rep.bounded_cells
    doc["bounded_cells_expected"] = comb(arr.n - 1, arr.dim)
    if arr.dim == 3:
        doc["euler"] = rep.euler
    b = check_bounds(arr)
    bounds: dict[str, Any] = {
        "hypothesis": b.hypothesis_bound,
        "verdicts": dict(b.verdicts),
    }
    key = "lower_2d" if arr.dim == 2 else "lower_3d"
    bounds[key] = None if b.lower_bound is None else format_rational(b.lower_bound)
    doc["bounds"] = bounds
    return doc


def dump_report(doc: dict[str, Any]) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
