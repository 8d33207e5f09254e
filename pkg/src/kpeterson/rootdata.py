"""Type C_n root data in the epsilon basis.

Everything lives in the coordinates of the standard basis eps_1, ..., eps_n.
Simple roots are alpha_i = eps_i - eps_{i+1} (i < n) and alpha_n = 2 eps_n;
simple coroots are alpha_i^v = eps_i - eps_{i+1} (i < n) and alpha_n^v = eps_n,
so the coroot lattice is all of Z^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


def _as_half_integer(x) -> Fraction:
    q = Fraction(x)
    if 2 % q.denominator:
        raise ValueError(f"coordinate {x!r} is not a half-integer")
    return q


@dataclass(frozen=True)
class LatticeVector:
    """A vector in eps-coordinates; coordinates are integers or half-integers."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(_as_half_integer(c) for c in self.coords))

    @classmethod
    def integral(cls, coords: Iterable) -> "LatticeVector":
        """Build a vector that must lie in the coroot (or root) lattice."""
        v = cls(tuple(coords))
        if not v.is_integral():
            raise ValueError(f"{v.coords} is not integral")
        return v

    @classmethod
    def zero(cls, n: int) -> "LatticeVector":
        return cls((0,) * n)

    @classmethod
    def basis(cls, n: int, i: int) -> "LatticeVector":
        """The basis vector eps_i (1-based)."""
        if not 1 <= i <= n:
            raise IndexError(f"eps index {i} out of range 1..{n}")
        return cls(tuple(1 if j == i - 1 else 0 for j in range(n)))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def to_ints(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"{self.coords} is not integral")
        return tuple(int(c) for c in self.coords)

    def _check(self, other: "LatticeVector"):
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        self._check(other)
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        self._check(other)
        return LatticeVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(tuple(-a for a in self.coords))

    def __mul__(self, k) -> "LatticeVector":
        return LatticeVector(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"LatticeVector({tuple(str(c) for c in self.coords)})"


def _coords(v) -> tuple:
    return v.coords if isinstance(v, LatticeVector) else tuple(v)


def pair(xi, alpha) -> Fraction:
    """The standard pairing <xi, alpha> with <eps_i, eps_j> = delta_ij."""
    a, b = _coords(xi), _coords(alpha)
    if len(a) != len(b):
        raise ValueError(f"rank mismatch: {len(a)} vs {len(b)}")
    return sum((Fraction(x) * Fraction(y) for x, y in zip(a, b)), Fraction(0))


def is_positive(v: Sequence) -> bool:
    """Sign of a root in eps-coordinates: positive iff the first nonzero entry is."""
    for c in v:
        if c:
            return c > 0
    raise ValueError("zero vector is not a root")


@dataclass(frozen=True)
class RootSystemC:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"rank must be a positive integer, got {self.n!r}")

    def _index(self, i: int, lo: int = 1):
        if not lo <= i <= self.n:
            raise IndexError(f"index {i} out of range {lo}..{self.n}")

    def simple_root(self, i: int) -> LatticeVector:
        self._index(i)
        c = [0] * self.n
        if i < self.n:
            c[i - 1], c[i] = 1, -1
        else:
            c[-1] = 2
        return LatticeVector(tuple(c))

    def simple_coroot(self, i: int) -> LatticeVector:
        self._index(i)
        c = [0] * self.n
        if i < self.n:
            c[i - 1], c[i] = 1, -1
        else:
            c[-1] = 1
        return LatticeVector(tuple(c))

    def fundamental_coweight(self, i: int) -> LatticeVector:
        """varpi_0 = 0, varpi_i = eps_1 + ... + eps_i for i < n, varpi_n = half the sum."""
        self._index(i, lo=0)
        if i == self.n:
            return LatticeVector((Fraction(1, 2),) * self.n)
        return LatticeVector(tuple(1 if j < i else 0 for j in range(self.n)))

    def coroot_coordinates(self, xi) -> tuple[int, ...]:
        """Expansion xi = sum c_i alpha_i^v; c_i is the i-th partial sum of xi."""
        x = LatticeVector.integral(_coords(xi)).to_ints()
        if len(x) != self.n:
            raise ValueError(f"rank mismatch: {len(x)} vs {self.n}")
        out, acc = [], 0
        for c in x:
            acc += c
            out.append(acc)
        return tuple(out)

    def bracket_projection(self, xi) -> int:
        """The alpha_n^v coefficient of xi, i.e. the class of xi modulo the Levi coroots."""
        return self.coroot_coordinates(xi)[-1]

    @property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        """eps_i -+ eps_j (i < j) and 2 eps_i, as integer tuples."""
        return positive_roots(self.n)

    @property
    def levi_positive_roots(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots of the type A_{n-1} Levi: eps_i - eps_j, i < j."""
        return tuple(a for a in positive_roots(self.n) if sum(a) == 0)

    def cartan_entry(self, i: int, j: int) -> int:
        """<alpha_j^v, alpha_i>."""
        return int(pair(self.simple_coroot(j), self.simple_root(i)))


@lru_cache(maxsize=None)
def positive_roots(n: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for s in (-1, 1):
                c = [0] * n
                c[i], c[j] = 1, s
                out.append(tuple(c))
        c = [0] * n
        c[i] = 2
        out.append(tuple(c))
    return tuple(out)
