"""Exact root systems in epsilon coordinates.

Families A-D at variable rank plus G2, F4, E6 and E8, realized with the
classical coordinates (E6 sits inside the E8 ambient space, spanned by the
first six E8 simple roots).  Every coordinate is a `fractions.Fraction`;
no floating point is used anywhere in this package.

The inner product is the Euclidean one on the ambient coordinates.  The
Killing form restricted to the real span of the roots equals this product
times a positive constant depending only on the algebra; every assertion
made downstream (exact vanishing, strict signs, root membership) is
invariant under positive scaling, so the constant is never needed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

FAMILIES = ("A", "B", "C", "D", "G2", "F4", "E6", "E8")

_EXCEPTIONAL_RANK = {"G2": 2, "F4": 4, "E6": 6, "E8": 8}

_ROOT_COUNT = {
    "A": lambda r: r * (r + 1),
    "B": lambda r: 2 * r * r,
    "C": lambda r: 2 * r * r,
    "D": lambda r: 2 * r * (r - 1),
    "G2": lambda r: 12,
    "F4": lambda r: 48,
    "E6": lambda r: 72,
    "E8": lambda r: 240,
}


class RootSystemError(ValueError):
    """Invalid root-system input (bad family/rank, non-root argument...)."""


class InvariantViolation(RuntimeError):
    """An internal guarantee failed; indicates a bug, not bad user input."""


class RootVector:
    """Immutable vector of exact rationals in the ambient epsilon basis."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable[Fraction | int | str]):
        self.coords = tuple(Fraction(c) for c in coords)

    @property
    def ambient_dim(self) -> int:
        return len(self.coords)

    def dot(self, other: "RootVector") -> Fraction:
        if len(self.coords) != len(other.coords):
            raise RootSystemError("ambient dimension mismatch")
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def norm_sq(self) -> Fraction:
        return self.dot(self)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "RootVector") -> "RootVector":
        return RootVector(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "RootVector") -> "RootVector":
        return RootVector(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "RootVector":
        return RootVector(-c for c in self.coords)

    def __rmul__(self, scalar) -> "RootVector":
        s = Fraction(scalar)
        return RootVector(s * c for c in self.coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, RootVector) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __lt__(self, other: "RootVector") -> bool:
        return self.coords < other.coords

    def __repr__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def root_vector(*coords) -> RootVector:
    """Shorthand constructor: root_vector(1, -1, 0)."""
    return RootVector(coords)


def zero_vector(dim: int) -> RootVector:
    return RootVector([0] * dim)


def reflect(v: RootVector, mirror: RootVector) -> RootVector:
    """Reflect v in the hyperplane orthogonal to mirror.

    Involutive, and maps the root system to itself whenever both arguments
    are roots of the same system.
    """
    nsq = mirror.norm_sq()
    if nsq == 0:
        raise RootSystemError("cannot reflect in the zero vector")
    return v - (2 * v.dot(mirror) / nsq) * mirror


def _gram_inverse(simples: Sequence[RootVector]) -> list[list[Fraction]]:
    """Invert the Gram matrix of the simple roots by Gaussian elimination."""
    n = len(simples)
    gram = [[simples[i].dot(simples[j]) for j in range(n)] for i in range(n)]
    aug = [gram[i] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise RootSystemError("simple roots are linearly dependent")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


class SimpleSystem:
    """An ordered choice of simple roots with exact decomposition support.

    The decomposition cache is a pure memo (each entry is a function of its
    key alone), so sharing a SimpleSystem across threads stays safe.
    """

    def __init__(self, simples: Sequence[RootVector]):
        self.simples = tuple(simples)
        if not self.simples:
            raise RootSystemError("a simple system needs at least one root")
        self.rank = len(self.simples)
        self._gram_inv = _gram_inverse(self.simples)
        self._cache: dict[RootVector, tuple[Fraction, ...]] = {}

    def coefficients(self, v: RootVector) -> tuple[Fraction, ...]:
        """Exact coordinates of v over the simple roots.

        Raises RootSystemError when v lies outside their span (relevant for
        ambient spaces larger than the rank, e.g. type A and E6).
        """
        cached = self._cache.get(v)
        if cached is not None:
            return cached
        rhs = [v.dot(s) for s in self.simples]
        coeffs = tuple(
            sum((row[j] * rhs[j] for j in range(self.rank)), Fraction(0))
            for row in self._gram_inv
        )
        recomposed = zero_vector(v.ambient_dim)
        for c, s in zip(coeffs, self.simples):
            recomposed = recomposed + c * s
        if recomposed != v:
            raise RootSystemError(f"{v!r} is not in the span of the simple roots")
        self._cache[v] = coeffs
        return coeffs

    def decompose(self, root: RootVector) -> tuple[int, ...]:
        """Integer coordinates of a root, validated to be of one sign."""
        coeffs = self.coefficients(root)
        if any(c.denominator != 1 for c in coeffs):
            raise RootSystemError(f"{root!r} has non-integral coordinates over the base")
        if any(c > 0 for c in coeffs) and any(c < 0 for c in coeffs):
            raise RootSystemError(f"{root!r} has mixed-sign coordinates over the base")
        return tuple(int(c) for c in coeffs)

    def is_positive(self, root: RootVector) -> bool:
        return all(c >= 0 for c in self.decompose(root))

    def key(self) -> frozenset[RootVector]:
        return frozenset(self.simples)

    def __repr__(self) -> str:
        return f"SimpleSystem{list(self.simples)!r}"


class RootSystem:
    """Immutable set of roots with a distinguished (standard) base."""

    def __init__(self, family: str, rank: int, roots: Iterable[RootVector], base: SimpleSystem):
        self.family = family
        self.rank = rank
        self.base = base
        self.sorted_roots = tuple(sorted(roots))
        self.roots = frozenset(self.sorted_roots)
        self.ambient_dim = self.sorted_roots[0].ambient_dim

    def is_root(self, v: RootVector) -> bool:
        return v in self.roots

    def require_root(self, v: RootVector) -> None:
        if not self.is_root(v):
            raise RootSystemError(f"{v!r} is not a root of {self.family}{self.rank}")

    @property
    def positive_roots(self) -> tuple[RootVector, ...]:
        """Positive roots of the standard base, in lexicographic order."""
        return self.positives(self.base)

    def positives(self, system: SimpleSystem) -> tuple[RootVector, ...]:
        """Positive roots with respect to an arbitrary simple system."""
        return tuple(v for v in self.sorted_roots if system.is_positive(v))

    def root_string(self, alpha: RootVector, beta: RootVector) -> tuple[int, int]:
        """The alpha-string through beta: maximal p <= 0 <= q with
        beta + n*alpha a root for all p <= n <= q."""
        self.require_root(alpha)
        self.require_root(beta)
        if alpha == beta or alpha == -beta:
            raise RootSystemError("root string requires alpha != ±beta")
        q = 0
        while beta + (q + 1) * alpha in self.roots:
            q += 1
        p = 0
        while beta + (p - 1) * alpha in self.roots:
            p -= 1
        return p, q

    def n_squared(self, alpha: RootVector, beta: RootVector) -> Fraction:
        """Squared structure constant N_{alpha,beta}^2 = q(1-p)/2 * |alpha|^2.

        Vanishes exactly when alpha + beta is not a root.
        """
        p, q = self.root_string(alpha, beta)
        return Fraction(q * (1 - p), 2) * alpha.norm_sq()

    def cartan_matrix(self, base: SimpleSystem | None = None) -> tuple[tuple[int, ...], ...]:
        """C[i][j] = 2<a_i, a_j> / <a_j, a_j> over the given (default standard) base."""
        simples = (base or self.base).simples
        rows = []
        for a in simples:
            row = []
            for b in simples:
                value = 2 * a.dot(b) / b.norm_sq()
                if value.denominator != 1:
                    raise InvariantViolation("non-integral Cartan pairing")
                row.append(int(value))
            rows.append(tuple(row))
        return tuple(rows)

    def validate_base(self, system: SimpleSystem) -> None:
        """Check that `system` is a genuine simple system for this root system.

        Requires: rank-many roots, linear independence (implicit in the Gram
        inverse), and an integral one-sign decomposition of every root.
        """
        if system.rank != self.rank:
            raise RootSystemError(f"expected {self.rank} simple roots, got {system.rank}")
        for s in system.simples:
            self.require_root(s)
        for v in self.sorted_roots:
            system.decompose(v)

    def __repr__(self) -> str:
        return f"RootSystem({self.family}, rank={self.rank}, roots={len(self.roots)})"


def _base_coords(family: str, rank: int) -> list[RootVector]:
    F = Fraction
    if family == "A":
        dim = rank + 1
        return [RootVector([F(int(j == i)) - F(int(j == i + 1)) for j in range(dim)]) for i in range(rank)]
    if family in ("B", "C", "D"):
        def unit(i):
            return [F(int(j == i)) for j in range(rank)]
        chain = [RootVector([a - b for a, b in zip(unit(i), unit(i + 1))]) for i in range(rank - 1)]
        if family == "B":
            return chain + [RootVector(unit(rank - 1))]
        if family == "C":
            return chain + [RootVector([2 * c for c in unit(rank - 1)])]
        last = [a + b for a, b in zip(unit(rank - 2), unit(rank - 1))]
        return chain + [RootVector(last)]
    if family == "G2":
        return [root_vector(1, -1, 0), root_vector(-2, 1, 1)]
    if family == "F4":
        return [
            root_vector(0, 1, -1, 0),
            root_vector(0, 0, 1, -1),
            root_vector(0, 0, 0, 1),
            RootVector([F(1, 2), F(-1, 2), F(-1, 2), F(-1, 2)]),
        ]
    # E8 base; E6 takes its first six simple roots in the same ambient space.
    half = Fraction(1, 2)
    e8 = [RootVector([half, -half, -half, -half, -half, -half, -half, half]),
          root_vector(1, 1, 0, 0, 0, 0, 0, 0)]
    for j in range(3, 9):
        coords = [0] * 8
        coords[j - 2] = 1
        coords[j - 3] = -1
        e8.append(RootVector(coords))
    return e8[:6] if family == "E6" else e8


def _closure(simples: Sequence[RootVector]) -> set[RootVector]:
    """Orbit of the base under its simple reflections (equals the root set)."""
    roots = set(simples)
    frontier = set(simples)
    while frontier:
        new = set()
        for v in frontier:
            for s in simples:
                image = reflect(v, s)
                if image not in roots:
                    new.add(image)
        roots |= new
        frontier = new
    return roots


def _validate_family(family: str, rank: int) -> None:
    if family not in FAMILIES:
        raise RootSystemError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if family in _EXCEPTIONAL_RANK:
        if rank != _EXCEPTIONAL_RANK[family]:
            raise RootSystemError(f"{family} has fixed rank {_EXCEPTIONAL_RANK[family]}, got {rank}")
        return
    minimum = {"A": 1, "B": 2, "C": 1, "D": 3}[family]
    if rank < minimum:
        raise RootSystemError(f"family {family} requires rank >= {minimum}, got {rank}")


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct the root system by reflection closure from the standard base.

    Deterministic; the result is validated against the closed-form root count
    for the family and is immutable afterwards, hence shared via the cache.
    """
    _validate_family(family, rank)
    base_roots = _base_coords(family, rank)
    roots = _closure(base_roots)
    expected = _ROOT_COUNT[family](rank)
    if len(roots) != expected:
        raise InvariantViolation(
            f"{family}{rank}: generated {len(roots)} roots, expected {expected}")
    if any(-v not in roots for v in roots):
        raise InvariantViolation(f"{family}{rank}: root set not closed under negation")
    system = RootSystem(family, rank, roots, SimpleSystem(base_roots))
    system.validate_base(system.base)
    return system


def all_simple_systems(rs: RootSystem, max_count: int | None = None) -> list[SimpleSystem]:
    """Every simple system of rs (one per Weyl chamber), by reflection BFS.

    Bounded searches only: `max_count`, when given, aborts once exceeded.
    Intended for small ranks; enumerating E8 chambers is out of scope.
    """
    start = frozenset(rs.base.simples)
    seen = {start}
    order = [start]
    queue = [start]
    while queue:
        current = queue.pop(0)
        for mirror in sorted(current):
            image = frozenset(reflect(v, mirror) for v in current)
            if image not in seen:
                seen.add(image)
                order.append(image)
                queue.append(image)
                if max_count is not None and len(seen) > max_count:
                    raise RootSystemError("simple-system enumeration exceeded its bound")
    return [SimpleSystem(sorted(s)) for s in order]
