"""Arrangements of lines (d=2) and planes (d=3), their faces and oracles.

Faces are identified by sign vectors: tuples over {-1, 0, +1} giving the
side of every hyperplane. Only faces that contain a vertex are enumerated;
in a simple arrangement these are found locally around each vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import GuardrailError, NotSimpleError
from .exact import Point, dot, sign, solve_square_system
from .feasibility import Constraint, LinearSystem, is_feasible

SignVector = tuple[int, ...]

MAX_LINES = 24
MAX_PLANES = 16

_SIGN_CHARS = {1: "+", -1: "-", 0: "0"}


@dataclass(frozen=True)
class Hyperplane:
    """The set ``{x : coeffs . x = rhs}``."""

    coeffs: tuple[Fraction, ...]
    rhs: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))
        if all(c == 0 for c in self.coeffs):
            raise ValueError("hyperplane needs a nonzero coefficient")

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def evaluate(self, p: Sequence[Fraction]) -> Fraction:
        return evaluate(self, p)


def evaluate(h: Hyperplane, p: Sequence[Fraction]) -> Fraction:
    """Return ``coeffs . p - rhs`` exactly."""
    if len(p) != h.dim:
        raise ValueError(f"point of dimension {len(p)} for hyperplane of dimension {h.dim}")
    return dot(h.coeffs, p) - h.rhs


@dataclass(frozen=True)
class Arrangement:
    dim: int
    hyperplanes: tuple[Hyperplane, ...]
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "hyperplanes", tuple(self.hyperplanes))
        if self.dim not in (2, 3):
            raise ValueError(f"dimension must be 2 or 3, got {self.dim}")
        for h in self.hyperplanes:
            if h.dim != self.dim:
                raise ValueError("hyperplane dimension does not match arrangement")
        limit = MAX_LINES if self.dim == 2 else MAX_PLANES
        if self.n > limit:
            raise GuardrailError(
                f"{self.n} hyperplanes in dimension {self.dim} exceeds the limit of {limit}"
            )

    @classmethod
    def from_rows(cls, dim: int, rows: Iterable[Sequence]) -> "Arrangement":
        """Build from rows ``(a_1, ..., a_d, b)`` meaning ``a . x = b``."""
        hs = []
        for row in rows:
            *a, b = row
            hs.append(Hyperplane(tuple(a), b))
        return cls(dim, tuple(hs))

    @property
    def n(self) -> int:
        return len(self.hyperplanes)

    def sign_vector(self, p: Sequence[Fraction]) -> SignVector:
        return tuple(sign(evaluate(h, p)) for h in self.hyperplanes)

    def without(self, i: int) -> "Arrangement":
        return Arrangement(self.dim, self.hyperplanes[:i] + self.hyperplanes[i + 1:])


@dataclass(frozen=True)
class Vertex:
    point: Point
    defining_set: tuple[int, ...]
    sign_vector: SignVector


@dataclass(frozen=True)
class SimplicityVerdict:
    ok: bool
    singular: tuple[tuple[int, ...], ...] = ()
    coincident: tuple[tuple[tuple[int, ...], ...], ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "simple"
        parts = []
        if self.singular:
            parts.append("no unique intersection for " + ", ".join(map(str, self.singular)))
        if self.coincident:
            parts.append("shared intersection point for " + "; ".join(
                " ".join(map(str, grp)) for grp in self.coincident))
        return "not simple: " + "; ".join(parts)


def format_sign_vector(sv: SignVector) -> str:
    return "".join(_SIGN_CHARS[s] for s in sv)


def parse_sign_vector(text: str) -> SignVector:
    inv = {"+": 1, "-": -1, "−": -1, "0": 0}
    try:
        return tuple(inv[ch] for ch in text.strip())
    except KeyError as e:
        raise ValueError(f"bad sign character {e.args[0]!r} in {text!r}") from None


def _intersections(arr: Arrangement):
    d = arr.dim
    for subset in combinations(range(arr.n), d):
        hs = [arr.hyperplanes[i] for i in subset]
        yield subset, solve_square_system([h.coeffs for h in hs], [h.rhs for h in hs])


def check_simple(arr: Arrangement) -> SimplicityVerdict:
    """Every d-subset must meet in one point, and all those points must differ."""
    cached = arr._cache.get("simple")
    if cached is not None:
        return cached
    if arr.n < arr.dim + 1:
        verdict = SimplicityVerdict(False)
    else:
        singular = []
        seen: dict[Point, list[tuple[int, ...]]] = {}
        for subset, p in _intersections(arr):
            if p is None:
                singular.append(subset)
            else:
                seen.setdefault(p, []).append(subset)
        coincident = tuple(tuple(g) for g in seen.values() if len(g) > 1)
        verdict = SimplicityVerdict(not singular and not coincident, tuple(singular), coincident)
    arr._cache["simple"] = verdict
    return verdict


def require_simple(arr: Arrangement) -> None:
    verdict = check_simple(arr)
    if not verdict:
        raise NotSimpleError(verdict.describe())


def enumerate_vertices(arr: Arrangement) -> list[Vertex]:
    """All C(n, d) vertices, in lexicographic order of their defining sets."""
    if "vertices" not in arr._cache:
        require_simple(arr)
        verts = []
        for subset, p in _intersections(arr):
            verts.append(Vertex(p, subset, arr.sign_vector(p)))
        arr._cache["vertices"] = verts
    return list(arr._cache["vertices"])


def enumerate_faces(arr: Arrangement, k: int) -> frozenset[SignVector]:
    """All k-faces incident to at least one vertex.

    Around a vertex of a simple arrangement the d hyperplanes through it look
    like coordinate hyperplanes, so every way of keeping ``d - k`` of its
    zeros and resolving the rest to +/- gives a realized k-face.
    """
    if not 0 <= k <= arr.dim:
        raise ValueError(f"face dimension {k} outside 0..{arr.dim}")
    key = ("faces", k)
    if key not in arr._cache:
        faces = set()
        for v in enumerate_vertices(arr):
            for resolved in combinations(v.defining_set, k):
                for signs in product((-1, 1), repeat=k):
                    sv = list(v.sign_vector)
                    for i, s in zip(resolved, signs):
                        sv[i] = s
                    faces.add(tuple(sv))
        arr._cache[key] = frozenset(faces)
    return arr._cache[key]


def face_system(arr: Arrangement, sv: SignVector, closed: bool = False) -> LinearSystem:
    """The open face (or its closure) of ``sv`` as a linear system."""
    if len(sv) != arr.n:
        raise ValueError("sign vector length does not match arrangement")
    cons = []
    strict = ">=" if closed else ">"
    for h, s in zip(arr.hyperplanes, sv):
        if s == 0:
            cons.append(Constraint(h.coeffs, h.rhs, "="))
        else:
            cons.append(Constraint(tuple(s * a for a in h.coeffs), s * h.rhs, strict))
    return LinearSystem(arr.dim, tuple(cons))


def is_face_nonempty(arr: Arrangement, sv: SignVector) -> bool:
    return is_feasible(face_system(arr, sv))


def is_bounded_face(arr: Arrangement, sv: SignVector) -> bool:
    """True iff the recession cone of the face is {0}.

    A nonzero recession direction has some nonzero coordinate, and the cone
    is invariant under positive scaling, so it suffices to test the 2d
    normalizations ``sigma * x_j = 1``.
    """
    cache = arr._cache.setdefault("bounded", {})
    hit = cache.get(sv)
    if hit is not None:
        return hit
    if len(sv) != arr.n:
        raise ValueError("sign vector length does not match arrangement")
    d = arr.dim
    cone = []
    for h, s in zip(arr.hyperplanes, sv):
        if s == 0:
            cone.append(Constraint(h.coeffs, Fraction(0), "="))
        else:
            cone.append(Constraint(tuple(s * a for a in h.coeffs), Fraction(0), ">="))
    bounded = True
    for j in range(d):
        for sigma in (1, -1):
            unit = tuple(Fraction(sigma if t == j else 0) for t in range(d))
            if is_feasible(LinearSystem(d, tuple(cone) + (Constraint(unit, Fraction(1), "="),))):
                bounded = False
                break
        if not bounded:
            break
    cache[sv] = bounded
    return bounded


def adjacent_cells(arr: Arrangement, facet: SignVector) -> tuple[SignVector, SignVector]:
    """The two cells on either side of a facet: its zero flipped to + and to -."""
    zeros = [i for i, s in enumerate(facet) if s == 0]
    if len(zeros) != 1:
        raise ValueError(f"a facet has exactly one zero, got {len(zeros)}")
    i = zeros[0]
    plus = facet[:i] + (1,) + facet[i + 1:]
    minus = facet[:i] + (-1,) + facet[i + 1:]
    return plus, minus


def is_subface(g: SignVector, f: SignVector) -> bool:
    """Sign-vector criterion for ``g`` lying in the closure of ``f``."""
    if len(g) != len(f):
        raise ValueError("sign vectors of different lengths")
    return all(a == 0 or a == b for a, b in zip(g, f))


def face_vertices(arr: Arrangement, f: SignVector) -> list[Vertex]:
    return [v for v in enumerate_vertices(arr) if is_subface(v.sign_vector, f)]


def face_dimension(arr: Arrangement, sv: SignVector) -> int:
    return arr.dim - sum(1 for s in sv if s == 0)
