"""Exact linear feasibility by Fourier-Motzkin elimination.

Constraints read ``coeffs . x  REL  rhs`` with ``REL`` one of ``"="``,
``">="`` or ``">"``. A combined inequality is strict iff one of its parents
is, which keeps the elimination exact for mixed strict/non-strict systems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Sequence

RELATIONS = ("=", ">=", ">")


class Constraint(NamedTuple):
    coeffs: tuple[Fraction, ...]
    rhs: Fraction
    relation: str = ">="


@dataclass(frozen=True)
class LinearSystem:
    dim: int
    constraints: tuple[Constraint, ...]

    def __post_init__(self) -> None:
        for c in self.constraints:
            if len(c.coeffs) != self.dim:
                raise ValueError(
                    f"constraint has {len(c.coeffs)} coefficients, expected {self.dim}"
                )
            if c.relation not in RELATIONS:
                raise ValueError(f"unknown relation {c.relation!r}")

    @classmethod
    def of(cls, dim: int, rows: Iterable[Sequence]) -> "LinearSystem":
        """Build from ``(coeffs, rhs, relation)`` triples of plain numbers."""
        cons = tuple(
            Constraint(tuple(Fraction(a) for a in co), Fraction(b), rel)
            for co, b, rel in rows
        )
        return cls(dim, cons)


# Working rows are integer tuples (a_1, ..., a_d, b, strict) meaning
# a . x >= b (> b when strict). Scaling by positive integers keeps every
# relation intact, so rows are cleared of denominators and gcd-reduced.
_Row = tuple[tuple[int, ...], int, bool]


def _integer_row(coeffs: Sequence[Fraction], rhs: Fraction) -> tuple[list[int], int]:
    den = 1
    for v in (*coeffs, rhs):
        q = v.denominator
        if q != 1:
            den = den * q // gcd(den, q)
    if den == 1:
        return [v.numerator for v in coeffs], rhs.numerator
    return [v.numerator * (den // v.denominator) for v in coeffs], rhs.numerator * (den // rhs.denominator)


def _reduce(a: Sequence[int], b: int) -> tuple[tuple[int, ...], int]:
    g = 0
    for v in a:
        g = gcd(g, v)
    g = gcd(g, b)
    if g > 1:
        return tuple(v // g for v in a), b // g
    return tuple(a), b


def _substitute_equalities(cons: Sequence[Constraint]) -> list[_Row] | None:
    eqs = []
    ineqs = []
    for c in cons:
        a, b = _integer_row(c.coeffs, c.rhs)
        if c.relation == "=":
            eqs.append((a, b))
        else:
            ineqs.append((a, b, c.relation == ">"))
    while eqs:
        a, b = eqs.pop()
        j = next((k for k, v in enumerate(a) if v != 0), None)
        if j is None:
            if b != 0:
                return None
            continue
        aj = a[j]
        if aj < 0:
            a, b, aj = [-v for v in a], -b, -aj

        def elim(row, rhs):
            f = row[j]
            if f == 0:
                return row, rhs
            return [aj * x - f * y for x, y in zip(row, a)], aj * rhs - f * b

        eqs = [elim(r, h) for r, h in eqs]
        ineqs = [(*elim(r, h), st) for r, h, st in ineqs]
    return [(*_reduce(r, h), st) for r, h, st in ineqs]


def _normalize(rows: Iterable[_Row]) -> list[_Row] | None:
    """Drop trivial rows, detect contradictions, keep the strongest row per direction."""
    best: dict[tuple[int, ...], tuple[int, int, bool]] = {}
    for a, b, strict in rows:
        g = 0
        for v in a:
            g = gcd(g, v)
        if g == 0:
            if b > 0 or (strict and b == 0):
                return None
            continue
        key = tuple(v // g for v in a) if g > 1 else a
        old = best.get(key)
        if old is None:
            best[key] = (b, g, strict)
            continue
        # compare b/g with old_b/old_g
        lhs, rhs = b * old[1], old[0] * g
        if lhs > rhs or (lhs == rhs and strict and not old[2]):
            best[key] = (b, g, strict)
    return [(tuple(v * g for v in key), b, st) for key, (b, g, st) in best.items()]


def _eliminate(rows: list[_Row], j: int) -> list[_Row]:
    pos, neg, out = [], [], []
    for row in rows:
        c = row[0][j]
        if c > 0:
            pos.append(row)
        elif c < 0:
            neg.append(row)
        else:
            out.append(row)
    for ap, bp, sp in pos:
        cp = ap[j]
        for an, bn, sn in neg:
            cn = -an[j]
            a = [x * cn + y * cp for x, y in zip(ap, an)]
            out.append((*_reduce(a, bp * cn + bn * cp), sp or sn))
    return out


def _fm(rows: list[_Row] | None, keep: frozenset[int] = frozenset()) -> list[_Row] | None:
    if rows is None:
        return None
    rows = _normalize(rows)
    while rows:
        live = {j for a, _, _ in rows for j, v in enumerate(a) if v != 0} - keep
        if not live:
            break

        def cost(j: int) -> int:
            p = sum(1 for a, _, _ in rows if a[j] > 0)
            n = sum(1 for a, _, _ in rows if a[j] < 0)
            return p * n - p - n

        j = min(sorted(live), key=cost)
        rows = _normalize(_eliminate(rows, j))
        if rows is None:
            return None
    return rows


def is_feasible(system: LinearSystem) -> bool:
    """True iff the system has a real (equivalently rational) solution."""
    return _fm(_substitute_equalities(system.constraints)) is not None


def project_onto(system: LinearSystem, j: int) -> list[tuple[Fraction, Fraction]] | None:
    """Project the closed system onto coordinate ``j``.

    Equalities are split into two opposing inequalities and every other
    coordinate is eliminated. Returns ``(c, e)`` pairs meaning ``c*x_j >= e``,
    or ``None`` if the system is infeasible. Strict relations are treated
    as their closures.
    """
    rows: list[_Row] = []
    for c in system.constraints:
        a, b = _integer_row(c.coeffs, c.rhs)
        rows.append((tuple(a), b, False))
        if c.relation == "=":
            rows.append((tuple(-v for v in a), -b, False))
    out = _fm(rows, keep=frozenset({j}))
    if out is None or _fm(list(out)) is None:
        return None
    return [(Fraction(a[j]), Fraction(b)) for a, b, _ in out]
