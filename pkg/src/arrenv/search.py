"""Seeded hill descent over simple arrangements, minimizing external facets.

A move redraws one hyperplane (uniform index) with fresh integer
coefficients from the same box as ``random_simple_arrangement``. It is kept
if the facet count drops, or with probability 1/2 if it ties. After
``restart_period`` moves without a new best the walk restarts from a fresh
random simple arrangement. Everything is driven by one SplitMix64 stream,
so a run is reproducible from its arguments.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .arrangement import MAX_LINES, MAX_PLANES, Arrangement, check_simple
from .envelope import external_facets
from .errors import ArrangementError, AuditError, GuardrailError
from .generators import SplitMix64, random_hyperplane, random_simple_arrangement_from

log = logging.getLogger(__name__)

RESTART_PERIOD = 200
RETRY_CAP = 1000
# Below this many external facets a 6-plane arrangement would be a
# counterexample to the known minimum over all combinatorial types.
KNOWN_MIN_3D_6 = 22


@dataclass
class SearchResult:
    best: Arrangement
    best_count: int
    trace: list[tuple[int, int]] = field(default_factory=list)
    flagged: list[Path] = field(default_factory=list)
    restarts: int = 0


def facet_count(arr: Arrangement) -> int:
    return len(external_facets(arr))


def _floor(d: int, n: int) -> int:
    # proven minimum for lines; for planes, ceil of (n(n-2)+6)/3
    if d == 2:
        return 2 * (n - 1)
    return -(-(n * (n - 2) + 6) // 3)


def minimize_external_facets(
    d: int,
    n: int,
    seed: int,
    iterations: int,
    start: Arrangement | None = None,
    coord_bound: int = 100,
    restart_period: int = RESTART_PERIOD,
    dump_dir: Path | None = None,
    on_improvement: Callable[[int, int, Arrangement], None] | None = None,
) -> SearchResult:
    if d not in (2, 3):
        raise ValueError("d must be 2 or 3")
    if n > (MAX_LINES if d == 2 else MAX_PLANES):
        raise GuardrailError(f"n={n} exceeds the guardrail for d={d}")
    if n < d + 1:
        raise ValueError("a simple arrangement needs n >= d+1")
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    rng = SplitMix64(seed)
    if start is None:
        current = random_simple_arrangement_from(rng, d, n, coord_bound)
    else:
        if (start.dim, start.n) != (d, n):
            raise ValueError(f"start arrangement is d={start.dim}, n={start.n}")
        if not check_simple(start):
            raise ArrangementError("start arrangement is not simple")
        current = start
    cur = facet_count(current)
    result = SearchResult(current, cur, [(0, cur)])
    floor = _floor(d, n)

    def record(it: int, arr: Arrangement, count: int) -> None:
        if count < floor:
            raise AuditError(f"found {count} external facets, below the proven floor {floor}")
        if d == 3 and n == 6 and count < KNOWN_MIN_3D_6:
            log.warning("6-plane arrangement with only %d external facets", count)
            if dump_dir is not None:
                from .fileio import write_arrangement

                dump_dir.mkdir(parents=True, exist_ok=True)
                path = dump_dir / f"counterexample_seed{seed}_it{it}_f{count}.arr"
                write_arrangement(path, arr, comments=[f"{count} external facets, d=3 n=6"])
                result.flagged.append(path)
        result.best, result.best_count = arr, count
        result.trace.append((it, count))
        if on_improvement is not None:
            on_improvement(it, count, arr)

    if on_improvement is not None:
        on_improvement(0, cur, current)
    stale = 0
    for it in range(1, iterations + 1):
        idx = rng.below(n)
        for _ in range(RETRY_CAP):
            h = random_hyperplane(rng, d, coord_bound)
            if h is None:
                continue
            cand = Arrangement(d, current.hyperplanes[:idx] + (h,) + current.hyperplanes[idx + 1:])
            if check_simple(cand):
                break
        else:
            raise ArrangementError(f"no simple proposal within {RETRY_CAP} draws at iteration {it}")
        c = facet_count(cand)
        if c < cur or (c == cur and rng.coin()):
            current, cur = cand, c
        if cur < result.best_count:
            record(it, current, cur)
            stale = 0
        else:
            stale += 1
        if stale >= restart_period:
            current = random_simple_arrangement_from(rng, d, n, coord_bound)
            cur = facet_count(current)
            result.restarts += 1
            stale = 0
            if cur < result.best_count:
                record(it, current, cur)
    return result
