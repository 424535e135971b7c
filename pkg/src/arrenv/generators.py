"""Explicit arrangement families and seeded random simple arrangements.

The explicit families follow the two constructions that attain few external
facets. Two small readings are applied: the last line of the planar family
meets the x2-axis at ``(0, 2+eps)``, and the cyclic plane family is the
first ``n`` planes of the spatial family with ``n+1`` planes.

Random arrangements use SplitMix64 so that a given ``(d, n, seed, bound)``
reproduces the same arrangement on every platform and in any language.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arrangement import Arrangement, Hyperplane, check_simple
from .errors import ArrangementError

MASK64 = (1 << 64) - 1
RANDOM_RETRIES = 1000


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood 2014); state is one 64-bit word."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        """Uniform integer in ``[0, m)`` by rejection (no modulo bias)."""
        limit = (1 << 64) - ((1 << 64) % m)
        while True:
            x = self.next()
            if x < limit:
                return x % m

    def integer(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def coin(self) -> bool:
        return self.next() >> 63 == 1


@dataclass(frozen=True)
class GeneratorParams:
    n: int
    epsilon: Fraction | None = None
    seed: int = 0
    coord_bound: int = 100


def _intercept_line(p: Fraction, q: Fraction) -> Hyperplane:
    return Hyperplane((1 / p, 1 / q), Fraction(1))


def _intercept_plane(p: Fraction, q: Fraction, r: Fraction) -> Hyperplane:
    return Hyperplane((1 / p, 1 / q, 1 / r), Fraction(1))


def _check_epsilon(eps: Fraction, upper: Fraction) -> Fraction:
    eps = Fraction(eps)
    if not 0 < eps < upper:
        raise ValueError(f"epsilon must lie strictly between 0 and {upper}, got {eps}")
    return eps


def paper_line_arrangement(n: int, epsilon: Fraction | None = None) -> Arrangement:
    """Simple line arrangement with exactly 2(n-1) external facets.

    ``h1`` is the x1-axis, ``h2`` the x2-axis, ``h_k`` (3 <= k < n) cuts the
    axes at ``1+(k-3)eps`` and ``1-(k-3)eps``, and ``h_n`` at 2 and ``2+eps``.
    Default ``eps = 1/(2(n-3))``; any value in ``(0, 1/(n-3))`` is allowed.
    """
    if n < 4:
        raise ValueError("the planar family needs n >= 4")
    upper = Fraction(1, n - 3)
    eps = _check_epsilon(Fraction(1, 2 * (n - 3)) if epsilon is None else epsilon, upper)
    hs = [Hyperplane((0, 1), 0), Hyperplane((1, 0), 0)]
    for k in range(3, n):
        hs.append(_intercept_line(1 + (k - 3) * eps, 1 - (k - 3) * eps))
    hs.append(_intercept_line(Fraction(2), 2 + eps))
    return Arrangement(2, tuple(hs))


def paper_plane_arrangement(n: int, epsilon: Fraction | None = None) -> Arrangement:
    """Simple plane arrangement with (n-4)(2n-3)+5 external facets.

    Coordinate planes ``x3=0``, ``x2=0``, ``x1=0`` come first; plane ``h_k``
    (4 <= k < n) has axis intercepts ``1+2(k-4)eps``, ``1+(k-4)eps`` and
    ``1-(k-4)eps``; the last plane has intercepts 3, 2 and ``3+eps``.
    Default ``eps = 1/(2(n-4))`` inside the legal interval ``(0, 1/(n-4))``.
    """
    if n < 5:
        raise ValueError("the spatial family needs n >= 5")
    upper = Fraction(1, n - 4)
    eps = _check_epsilon(Fraction(1, 2 * (n - 4)) if epsilon is None else epsilon, upper)
    hs = [Hyperplane((0, 0, 1), 0), Hyperplane((0, 1, 0), 0), Hyperplane((1, 0, 0), 0)]
    for k in range(4, n):
        t = k - 4
        hs.append(_intercept_plane(1 + 2 * t * eps, 1 + t * eps, 1 - t * eps))
    hs.append(_intercept_plane(Fraction(3), Fraction(2), 3 + eps))
    return Arrangement(3, tuple(hs))


def cyclic_plane_arrangement(n: int, epsilon: Fraction | None = None) -> Arrangement:
    """First ``n`` planes of ``paper_plane_arrangement(n + 1)``."""
    if n < 4:
        raise ValueError("the cyclic family needs n >= 4")
    full = paper_plane_arrangement(n + 1, epsilon)
    return Arrangement(3, full.hyperplanes[:n])


def random_hyperplane(rng: SplitMix64, d: int, bound: int) -> Hyperplane | None:
    coeffs = tuple(rng.integer(-bound, bound) for _ in range(d))
    rhs = rng.integer(-bound, bound)
    if all(c == 0 for c in coeffs):
        return None
    return Hyperplane(coeffs, rhs)


def random_hyperplanes(rng: SplitMix64, d: int, n: int, bound: int) -> list[Hyperplane | None]:
    return [random_hyperplane(rng, d, bound) for _ in range(n)]


def random_simple_arrangement_from(rng: SplitMix64, d: int, n: int, coord_bound: int) -> Arrangement:
    """Draw whole arrangements from ``rng`` until one is simple."""
    if d not in (2, 3):
        raise ValueError("d must be 2 or 3")
    if n < d + 1:
        raise ValueError("a simple arrangement needs n >= d+1")
    if coord_bound < 1:
        raise ValueError("coord_bound must be positive")
    for _ in range(RANDOM_RETRIES):
        hs = random_hyperplanes(rng, d, n, coord_bound)
        if any(h is None for h in hs):
            continue
        arr = Arrangement(d, tuple(hs))
        if check_simple(arr):
            return arr
    raise ArrangementError(
        f"no simple arrangement with d={d}, n={n}, bound={coord_bound} "
        f"after {RANDOM_RETRIES} draws"
    )


def random_simple_arrangement(d: int, n: int, seed: int = 0, coord_bound: int = 100) -> Arrangement:
    """Integer coefficients and right-hand sides uniform in ``[-B, B]``.

    Draw order per hyperplane is ``a_1, ..., a_d, b``; a draw containing a
    zero row or failing the simplicity check is discarded wholesale.
    """
    return random_simple_arrangement_from(SplitMix64(seed), d, n, coord_bound)
