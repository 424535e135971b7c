"""Exact rational scalars and tiny dense linear algebra (d <= 3)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Rational = Fraction
Point = tuple[Fraction, ...]

_MINUS_SIGNS = ("−", "–")


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` (optional leading minus) into canonical form.

    Unreduced input such as ``4/6`` is accepted. The denominator must be
    positive after parsing; ``1/-2`` and ``1/0`` are rejected.
    """
    s = text.strip()
    for m in _MINUS_SIGNS:
        s = s.replace(m, "-")
    if not s:
        raise ValueError("empty rational")
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational: {text!r}") from None
    if sep and (not den.strip().isdigit()):
        raise ValueError(f"denominator must be a positive integer: {text!r}")
    if q == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(p, q)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def solve_square_system(
    a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]
) -> Point | None:
    """Solve ``A x = b`` exactly by Gaussian elimination.

    Returns ``None`` when ``A`` is singular. Any nonzero pivot is taken;
    there is no need for a numeric pivoting strategy.
    """
    d = len(a)
    if len(b) != d or any(len(row) != d for row in a):
        raise ValueError("dimension mismatch in square system")
    m = [[Fraction(v) for v in row] + [Fraction(rhs)] for row, rhs in zip(a, b)]
    for col in range(d):
        piv = next((r for r in range(col, d) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        prow = [v / pv for v in m[col]]
        m[col] = prow
        for r in range(d):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], prow)]
    return tuple(m[r][d] for r in range(d))


def determinant(a: Sequence[Sequence[Fraction]]) -> Fraction:
    d = len(a)
    if d == 1:
        return Fraction(a[0][0])
    if d == 2:
        return Fraction(a[0][0]) * a[1][1] - Fraction(a[0][1]) * a[1][0]
    if d == 3:
        return (
            Fraction(a[0][0]) * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - Fraction(a[0][1]) * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + Fraction(a[0][2]) * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        )
    raise ValueError("determinant only implemented for d <= 3")


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((Fraction(x) * y for x, y in zip(u, v)), Fraction(0))


def sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)
