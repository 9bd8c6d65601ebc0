"""Exact-arithmetic engine for simple Lie algebras and u(1).

All data is derived from the Cartan matrix of the chosen series: the
symmetrizer, the quadratic form on the weight lattice, the root system
(generated by closure under simple-root addition), the Weyl vector, the
dual Coxeter number and the algebra dimension.  Everything is computed
over `fractions.Fraction`; no floating point enters this module.

Normalization: the invariant bilinear form is scaled so that long roots
have squared length 2.  For u(1) the form on charges is (l, l') = l*l'/2,
chosen so that coset conformal weights built on top of this module
reproduce the standard parafermion closed forms with embedding index 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "LieAlgebraError",
    "InvalidWeightError",
    "SimpleAlgebra",
    "Weight",
    "parse_algebra",
    "inner_product",
    "weyl_vector",
    "casimir",
    "dual_coxeter",
    "dimension",
    "cartan_matrix",
    "quadratic_form",
    "positive_roots",
    "highest_root",
    "root_to_weight",
]

_SERIES = ("A", "B", "C", "D", "E", "F", "G", "u1")

# minimal ranks: B1/C1 coincide with A1 and D2 is not simple, so they are
# rejected rather than silently aliased
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_FIXED_RANK = {"F": 4, "G": 2}
_E_RANKS = (6, 7, 8)


class LieAlgebraError(ValueError):
    """Invalid algebra construction or query."""


class InvalidWeightError(LieAlgebraError):
    """Weight incompatible with the algebra it is used with."""


@dataclass(frozen=True)
class SimpleAlgebra:
    """A simple Lie algebra (or u(1)) given by its series letter and rank."""

    series: str
    rank: int

    def __post_init__(self) -> None:
        if self.series not in _SERIES:
            raise LieAlgebraError(f"unknown series {self.series!r}")
        if self.series == "u1":
            if self.rank != 1:
                raise LieAlgebraError("u1 has rank 1")
            return
        if self.rank < 1:
            raise LieAlgebraError("rank must be positive")
        if self.series in _MIN_RANK and self.rank < _MIN_RANK[self.series]:
            raise LieAlgebraError(
                f"{self.series}_n requires n >= {_MIN_RANK[self.series]}"
            )
        if self.series == "E" and self.rank not in _E_RANKS:
            raise LieAlgebraError("E series exists for ranks 6, 7, 8")
        if self.series in _FIXED_RANK and self.rank != _FIXED_RANK[self.series]:
            raise LieAlgebraError(
                f"{self.series} has fixed rank {_FIXED_RANK[self.series]}"
            )

    @property
    def is_abelian(self) -> bool:
        return self.series == "u1"

    @property
    def name(self) -> str:
        if self.series == "u1":
            return "u1"
        return f"{self.series}{self.rank}"

    def __str__(self) -> str:  # pragma: no cover - repr convenience
        return self.name


_NAME_RE = re.compile(r"^([A-G])\s*_?\s*(\d+)$")


def parse_algebra(name: str) -> SimpleAlgebra:
    """Parse names like "A1", "D4", "E8", "u1" (as used in CLI and configs)."""
    text = name.strip()
    if text.lower() in ("u1", "u(1)"):
        return SimpleAlgebra("u1", 1)
    m = _NAME_RE.match(text)
    if not m:
        raise LieAlgebraError(f"cannot parse algebra name {name!r}")
    return SimpleAlgebra(m.group(1), int(m.group(2)))


@dataclass(frozen=True)
class Weight:
    """A weight in the Dynkin-label basis; labels may be any rationals."""

    labels: tuple[Fraction, ...]

    def __init__(self, labels: Iterable[Fraction | int | str]) -> None:
        object.__setattr__(
            self, "labels", tuple(Fraction(x) for x in labels)
        )

    @staticmethod
    def zero(rank: int) -> "Weight":
        return Weight([0] * rank)

    def __len__(self) -> int:
        return len(self.labels)

    def __add__(self, other: "Weight") -> "Weight":
        if len(self) != len(other):
            raise InvalidWeightError("rank mismatch in weight addition")
        return Weight(a + b for a, b in zip(self.labels, other.labels))

    def scale(self, factor: Fraction | int) -> "Weight":
        f = Fraction(factor)
        return Weight(f * a for a in self.labels)


def _check_weight(algebra: SimpleAlgebra, w: Weight) -> None:
    if len(w) != algebra.rank:
        raise InvalidWeightError(
            f"weight of length {len(w)} used with {algebra.name} (rank {algebra.rank})"
        )


@lru_cache(maxsize=None)
def cartan_matrix(algebra: SimpleAlgebra) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix A[i][j] = <alpha_i, alpha_j^vee>; empty for u(1)."""
    if algebra.is_abelian:
        return ()
    n = algebra.rank
    a = [[2 * (i == j) for j in range(n)] for i in range(n)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    s = algebra.series
    if s == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif s == "B":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)  # last simple root is short
    elif s == "C":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)  # last simple root is long
    elif s == "D":
        for i in range(n - 3):
            link(i, i + 1)
        link(n - 3, n - 2)
        link(n - 3, n - 1)
    elif s == "E":
        for i, j in zip((0, 2, 3, 4, 5, 6), (2, 3, 4, 5, 6, 7)):
            if j < n:
                link(i, j)
        link(1, 3)
    elif s == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif s == "G":
        link(0, 1, -1, -3)  # first root long, second short
    return tuple(tuple(row) for row in a)


@lru_cache(maxsize=None)
def symmetrizer(algebra: SimpleAlgebra) -> tuple[Fraction, ...]:
    """d_i = (alpha_i, alpha_i)/2, normalized so max d_i = 1 (long root^2 = 2).

    Solved from the symmetry requirement d_i A_ij = d_j A_ji by propagating
    along the (connected) Dynkin diagram.
    """
    if algebra.is_abelian:
        return (Fraction(1),)
    a = cartan_matrix(algebra)
    n = algebra.rank
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and a[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(a[i][j], a[j][i])
                stack.append(j)
    if any(x is None for x in d):
        raise LieAlgebraError("Dynkin diagram is not connected")
    top = max(d)  # type: ignore[type-var]
    return tuple(x / top for x in d)  # type: ignore[operator]


def _invert(matrix: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Exact Gauss-Jordan inverse of a small rational matrix."""
    n = len(matrix)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def quadratic_form(algebra: SimpleAlgebra) -> tuple[tuple[Fraction, ...], ...]:
    """Matrix F with (w, w') = w^T F w' in the Dynkin basis.

    F = A^{-1} D for simple algebras; for u(1) the 1x1 matrix (1/2).
    """
    if algebra.is_abelian:
        return ((Fraction(1, 2),),)
    a = cartan_matrix(algebra)
    d = symmetrizer(algebra)
    inv = _invert([[Fraction(x) for x in row] for row in a])
    return tuple(
        tuple(inv[i][j] * d[j] for j in range(algebra.rank))
        for i in range(algebra.rank)
    )


def inner_product(algebra: SimpleAlgebra, w1: Weight, w2: Weight) -> Fraction:
    """Invariant bilinear form on weights (long roots have squared length 2)."""
    _check_weight(algebra, w1)
    _check_weight(algebra, w2)
    form = quadratic_form(algebra)
    total = Fraction(0)
    for i, x in enumerate(w1.labels):
        if x == 0:
            continue
        row = form[i]
        total += x * sum(row[j] * y for j, y in enumerate(w2.labels) if y != 0)
    return total


def weyl_vector(algebra: SimpleAlgebra) -> Weight:
    """Half-sum of positive roots: all Dynkin labels 1 (zero for u(1))."""
    if algebra.is_abelian:
        return Weight.zero(1)
    return Weight([1] * algebra.rank)


def casimir(algebra: SimpleAlgebra, mu: Weight) -> Fraction:
    """Quadratic Casimir eigenvalue (mu, mu + 2*rho); l^2/2 for u(1)."""
    _check_weight(algebra, mu)
    shifted = mu + weyl_vector(algebra).scale(2)
    return inner_product(algebra, mu, shifted)


@lru_cache(maxsize=None)
def positive_roots(algebra: SimpleAlgebra) -> tuple[tuple[int, ...], ...]:
    """Positive roots in simple-root coordinates, generated from the Cartan
    matrix by closure under simple-root addition (root strings)."""
    if algebra.is_abelian:
        return ()
    n = algebra.rank
    a = cartan_matrix(algebra)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots: set[tuple[int, ...]] = set(simple)
    layer = list(simple)
    while layer:
        nxt: list[tuple[int, ...]] = []
        for c in layer:
            for i in range(n):
                pairing = sum(c[k] * a[k][i] for k in range(n) if c[k])
                down = list(c)
                p = 0
                while True:
                    down[i] -= 1
                    if min(down) < 0 or tuple(down) not in roots:
                        break
                    p += 1
                if p - pairing > 0:
                    up = list(c)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in roots:
                        roots.add(cand)
                        nxt.append(cand)
        layer = nxt
    return tuple(sorted(roots))


def root_to_weight(algebra: SimpleAlgebra, coords: Sequence[int]) -> Weight:
    """Dynkin labels of a root given in simple-root coordinates."""
    a = cartan_matrix(algebra)
    n = algebra.rank
    return Weight(
        sum(coords[k] * a[k][j] for k in range(n)) for j in range(n)
    )


@lru_cache(maxsize=None)
def highest_root(algebra: SimpleAlgebra) -> tuple[int, ...]:
    """Simple-root coordinates of the highest root (max height)."""
    if algebra.is_abelian:
        raise LieAlgebraError("u1 has no roots")
    return max(positive_roots(algebra), key=lambda c: (sum(c), c))


def dual_coxeter(algebra: SimpleAlgebra) -> int:
    """Dual Coxeter number: 1 + sum of comarks; 0 for u(1)."""
    if algebra.is_abelian:
        return 0
    theta = highest_root(algebra)
    d = symmetrizer(algebra)
    total = Fraction(1) + sum(Fraction(m) * di for m, di in zip(theta, d))
    if total.denominator != 1:
        raise LieAlgebraError("comark sum is not integral")  # pragma: no cover
    return int(total)


def dimension(algebra: SimpleAlgebra) -> int:
    """rank + number of roots (1 for u(1))."""
    if algebra.is_abelian:
        return 1
    return algebra.rank + 2 * len(positive_roots(algebra))
