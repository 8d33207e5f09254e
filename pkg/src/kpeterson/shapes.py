"""Partitions indexing both Schubert bases, and the Weyl group elements attached to them.

``PartitionPC`` indexes the affine Grassmannian side: parts at most 2n, and a
part that is at most n must be strictly larger than the next part (only parts
>= n+1 repeat). ``StrictPartition`` is the n-bounded strict subset indexing
LG(n). Products such as ``x_lambda = rho_{l} ... rho_{1}`` put the smallest
part leftmost.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .rootdata import LatticeVector, RootSystemC
from .weyl import (
    AffineElement,
    SignedPermutation,
    from_word,
    multiply,
)


def _canonical_parts(parts: Iterable[int]) -> tuple[int, ...]:
    out = tuple(int(p) for p in parts)
    while out and out[-1] == 0:
        out = out[:-1]
    return out


@dataclass(frozen=True)
class PartitionPC:
    n: int
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = _canonical_parts(self.parts)
        object.__setattr__(self, "parts", parts)
        n = self.n
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"rank must be a positive integer, got {n!r}")
        for k, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"{parts}: parts must be positive")
            if p > 2 * n:
                raise ValueError(f"{parts}: part {p} exceeds 2n = {2 * n}")
            if k + 1 < len(parts):
                nxt = parts[k + 1]
                if nxt > p:
                    raise ValueError(f"{parts}: not weakly decreasing")
                if p <= n and nxt == p:
                    raise ValueError(f"{parts}: part {p} <= n = {n} repeats")

    @property
    def length(self) -> int:
        """Number of parts."""
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def first(self) -> int:
        """Largest part, 0 for the empty partition."""
        return self.parts[0] if self.parts else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return format_partition(self)

    def sort_key(self) -> tuple:
        return (self.size, self.parts)


@dataclass(frozen=True)
class StrictPartition(PartitionPC):
    """An n-bounded strict partition."""

    def __post_init__(self):
        PartitionPC.__post_init__(self)
        if self.parts and self.parts[0] > self.n:
            raise ValueError(f"{self.parts}: parts must be <= n = {self.n}")
        if any(a <= b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"{self.parts}: not strictly decreasing")


def format_partition(lam) -> str:
    parts = lam.parts if isinstance(lam, PartitionPC) else tuple(lam)
    return ",".join(map(str, parts)) if parts else "[]"


def shifted_diagram(mu: PartitionPC, cell: str = "[]", blank: str = "  ") -> str:
    """Shifted Young diagram: row i is indented i-1 cells."""
    if not mu.parts:
        return "(empty)"
    return "\n".join(blank * i + cell * p for i, p in enumerate(mu.parts))


# -- generators ---------------------------------------------------------------

def _index(sys: RootSystemC, i: int, lo: int, hi: int, what: str):
    if not lo <= i <= hi:
        raise IndexError(f"{what} index {i} out of range {lo}..{hi} (n={sys.n})")


def rho_word(sys: RootSystemC, i: int) -> list[int]:
    n = sys.n
    _index(sys, i, 1, 2 * n, "rho")
    if i <= n:
        return list(range(i - 1, -1, -1))
    return list(range(2 * n - i + 1, n)) + [n] + list(range(n - 1, -1, -1))


@lru_cache(maxsize=None)
def _rho(n: int, i: int) -> AffineElement:
    sys = RootSystemC(n)
    return from_word(sys, rho_word(sys, i))


def rho(sys: RootSystemC, i: int) -> AffineElement:
    """rho_i = s_{i-1}...s_1 s_0 (i <= n), s_{2n-i+1}...s_{n-1} s_n s_{n-1}...s_0 (i > n)."""
    _index(sys, i, 1, 2 * sys.n, "rho")
    return _rho(sys.n, i)


def _finite_word(n: int, word: Iterable[int]) -> SignedPermutation:
    w = SignedPermutation.identity(n)
    for i in word:
        w = w * SignedPermutation.generator(n, i)
    return w


def v_word(sys: RootSystemC, i: int) -> list[int]:
    n = sys.n
    _index(sys, i, 1, 2 * n, "v")
    if i <= n:
        return list(range(i, n)) + [n] + list(range(n - 1, 0, -1))
    return list(range(2 * n - i, 0, -1))


@lru_cache(maxsize=None)
def _v(n: int, i: int) -> SignedPermutation:
    return _finite_word(n, v_word(RootSystemC(n), i))


def v_of_index(sys: RootSystemC, i: int) -> SignedPermutation:
    """v_i = s_i...s_{n-1} s_n s_{n-1}...s_1 (i <= n), s_{2n-i}...s_1 (i > n); v_{2n} = 1."""
    _index(sys, i, 1, 2 * sys.n, "v")
    return _v(sys.n, i)


def u_word(sys: RootSystemC, k: int) -> list[int]:
    n = sys.n
    _index(sys, k, 1, n, "u")
    return list(range(n + 1 - k, n + 1))


@lru_cache(maxsize=None)
def _u(n: int, k: int) -> SignedPermutation:
    return _finite_word(n, u_word(RootSystemC(n), k))


def u_of_index(sys: RootSystemC, k: int) -> SignedPermutation:
    """u_k = s_{n+1-k} ... s_{n-1} s_n."""
    _index(sys, k, 1, sys.n, "u")
    return _u(sys.n, k)


# -- maps on partitions ------------------------------------------------------

def _sys(lam: PartitionPC) -> RootSystemC:
    if not isinstance(lam, PartitionPC):
        raise TypeError(f"expected a partition, got {type(lam).__name__}")
    return RootSystemC(lam.n)


def x_of(lam: PartitionPC) -> AffineElement:
    sys = _sys(lam)
    x = AffineElement.identity(sys.n)
    for p in reversed(lam.parts):
        x = multiply(x, rho(sys, p))
    return x


def v_of(lam: PartitionPC) -> SignedPermutation:
    """v(lambda) = v_{lambda_l} ... v_{lambda_1}."""
    sys = _sys(lam)
    w = SignedPermutation.identity(sys.n)
    for p in reversed(lam.parts):
        w = w * v_of_index(sys, p)
    return w


def xi_of(lam: PartitionPC) -> LatticeVector:
    """xi(lambda) = eps_1 + v_{l1}^{-1} eps_1 + v_{l1}^{-1} v_{l2}^{-1} eps_1 + ..."""
    sys = _sys(lam)
    n = sys.n
    e1 = (1,) + (0,) * (n - 1)
    total = [0] * n
    acc = SignedPermutation.identity(n)
    for k in range(lam.length):
        if k:
            acc = acc * v_of_index(sys, lam.parts[k - 1]).inverse()
        for j, c in enumerate(acc.apply(e1)):
            total[j] += c
    return LatticeVector(tuple(total))


def bracket_xi(lam: PartitionPC) -> int:
    return _sys(lam).bracket_projection(xi_of(lam))


def remove_first_row(lam: PartitionPC) -> PartitionPC:
    if not lam.parts:
        raise ValueError("cannot remove the first row of the empty partition")
    return PartitionPC(lam.n, lam.parts[1:])


def truncate(lam: PartitionPC) -> StrictPartition:
    """Drop every part greater than n."""
    _sys(lam)
    return StrictPartition(lam.n, tuple(p for p in lam.parts if p <= lam.n))


def star(mu: PartitionPC) -> StrictPartition:
    """(mu_1, ..., mu_l) -> (n+1-mu_l, ..., n+1-mu_1)."""
    if not isinstance(mu, StrictPartition):
        mu = StrictPartition(mu.n, mu.parts)
    return StrictPartition(mu.n, tuple(mu.n + 1 - p for p in reversed(mu.parts)))


def u_of(mu: PartitionPC) -> SignedPermutation:
    """u_mu = u_{mu_l} ... u_{mu_1}."""
    if not isinstance(mu, StrictPartition):
        mu = StrictPartition(mu.n, mu.parts)
    sys = RootSystemC(mu.n)
    w = SignedPermutation.identity(sys.n)
    for p in reversed(mu.parts):
        w = w * u_of_index(sys, p)
    return w


def big_part_count(lam: PartitionPC) -> int:
    return sum(1 for p in lam.parts if p >= lam.n + 1)


# -- enumeration -------------------------------------------------------------

def _gen_pc(n: int, weight: int, maxpart: int) -> Iterator[tuple[int, ...]]:
    if weight == 0:
        yield ()
        return
    for p in range(1, min(maxpart, weight) + 1):
        # a part <= n forces the remaining parts below it
        nxt = p if p > n else p - 1
        for rest in _gen_pc(n, weight - p, nxt):
            yield (p,) + rest


def enumerate_pc(sys: RootSystemC, max_weight: int) -> list[PartitionPC]:
    """All of P^n_C up to the given size, ordered by (size, parts)."""
    out = []
    for wt in range(max_weight + 1):
        out.extend(PartitionPC(sys.n, p) for p in sorted(_gen_pc(sys.n, wt, 2 * sys.n)))
    return out


def enumerate_sp(sys: RootSystemC) -> list[StrictPartition]:
    """All 2^n strict partitions with parts <= n, ordered by (size, parts)."""
    n = sys.n
    out = []
    for mask in range(1 << n):
        parts = tuple(sorted((i + 1 for i in range(n) if mask >> i & 1), reverse=True))
        out.append(StrictPartition(n, parts))
    out.sort(key=StrictPartition.sort_key)
    return out
