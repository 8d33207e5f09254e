"""The affine Weyl group of type C_n^(1) as W x| Q^v.

Elements are kept in the normal form ``w t_xi`` with ``w`` a signed
permutation and ``xi`` an integer vector; words are only produced on demand.
Products follow ``(w t_xi)(w' t_xi') = (w w') t_{w'^{-1} xi + xi'}`` and the
affine generator is ``s_0 = s_theta t_{-eps_1}``.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .rootdata import LatticeVector, RootSystemC, is_positive, positive_roots

DEFAULT_BFS_CAP = 5_000_000


class ResourceLimitError(RuntimeError):
    """Raised when an enumeration would exceed its state cap."""


@dataclass(frozen=True, slots=True)
class SignedPermutation:
    """``images[j]`` is +-k meaning w(eps_{j+1}) = +-eps_k."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(abs(a) for a in self.images) != list(range(1, n + 1)):
            raise ValueError(f"{self.images} is not a signed permutation")

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def generator(cls, n: int, i: int) -> "SignedPermutation":
        """Finite simple reflection s_i, 1 <= i <= n."""
        if not 1 <= i <= n:
            raise IndexError(f"finite generator index {i} out of range 1..{n}")
        im = list(range(1, n + 1))
        if i < n:
            im[i - 1], im[i] = im[i], im[i - 1]
        else:
            im[n - 1] = -n
        return cls(tuple(im))

    @property
    def n(self) -> int:
        return len(self.images)

    def apply(self, v: Sequence) -> tuple:
        out = [0] * len(v)
        for j, x in enumerate(v):
            k = self.images[j]
            if k > 0:
                out[k - 1] += x
            else:
                out[-k - 1] -= x
        return tuple(out)

    def __call__(self, v):
        if isinstance(v, LatticeVector):
            return LatticeVector(self.apply(v.coords))
        return self.apply(v)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")
        im = self.images
        return SignedPermutation(
            tuple(im[k - 1] if k > 0 else -im[-k - 1] for k in other.images)
        )

    def inverse(self) -> "SignedPermutation":
        out = [0] * self.n
        for j, k in enumerate(self.images):
            out[abs(k) - 1] = j + 1 if k > 0 else -(j + 1)
        return SignedPermutation(tuple(out))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def length(self) -> int:
        """Number of positive roots sent to negative roots."""
        return sum(not is_positive(self.apply(a)) for a in positive_roots(self.n))

    def has_right_descent(self, i: int) -> bool:
        """w(alpha_i) < 0, for 1 <= i <= n."""
        n = self.n
        if not 1 <= i <= n:
            raise IndexError(f"generator index {i} out of range 1..{n}")
        if i == n:
            return self.images[n - 1] < 0
        # w(eps_i - eps_{i+1}); positive iff the first nonzero coordinate is
        return not is_positive(self.apply((0,) * (i - 1) + (1, -1) + (0,) * (n - i - 1)))


@dataclass(frozen=True, slots=True)
class AffineElement:
    """The element ``w t_xi`` of W_af."""

    w: SignedPermutation
    xi: tuple[int, ...]

    def __post_init__(self):
        xi = self.xi.coords if isinstance(self.xi, LatticeVector) else self.xi
        xi = LatticeVector.integral(xi).to_ints()
        if len(xi) != self.w.n:
            raise ValueError(f"rank mismatch: {self.w.n} vs {len(xi)}")
        object.__setattr__(self, "xi", xi)

    @classmethod
    def identity(cls, n: int) -> "AffineElement":
        return cls(SignedPermutation.identity(n), (0,) * n)

    @classmethod
    def translation(cls, xi) -> "AffineElement":
        xi = xi.coords if isinstance(xi, LatticeVector) else tuple(xi)
        return cls(SignedPermutation.identity(len(xi)), xi)

    @classmethod
    def finite(cls, w: SignedPermutation) -> "AffineElement":
        return cls(w, (0,) * w.n)

    @property
    def n(self) -> int:
        return self.w.n

    @property
    def translation_vector(self) -> LatticeVector:
        return LatticeVector(self.xi)

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        return multiply(self, other)

    def is_identity(self) -> bool:
        return self.w.is_identity() and not any(self.xi)


def multiply(x: AffineElement, y: AffineElement) -> AffineElement:
    if x.n != y.n:
        raise ValueError(f"rank mismatch: {x.n} vs {y.n}")
    shifted = y.w.inverse().apply(x.xi)
    return AffineElement(x.w * y.w, tuple(a + b for a, b in zip(shifted, y.xi)))


def inverse(x: AffineElement) -> AffineElement:
    return AffineElement(x.w.inverse(), tuple(-c for c in x.w.apply(x.xi)))


def simple_reflection(sys: RootSystemC, i: int) -> AffineElement:
    n = sys.n
    if i == 0:
        s_theta = [*range(1, n + 1)]
        s_theta[0] = -1
        return AffineElement(SignedPermutation(tuple(s_theta)), (-1,) + (0,) * (n - 1))
    if not 1 <= i <= n:
        raise IndexError(f"generator index {i} out of range 0..{n}")
    return AffineElement.finite(SignedPermutation.generator(n, i))


def from_word(sys: RootSystemC, word: Iterable[int]) -> AffineElement:
    """Product s_{i_1} s_{i_2} ... of the letters of ``word``, left to right."""
    x = AffineElement.identity(sys.n)
    for i in word:
        x = multiply(x, simple_reflection(sys, i))
    return x


def length(x: AffineElement) -> int:
    """Iwahori-Matsumoto: sum over positive roots of |<xi, a> + [w a < 0]|."""
    total = 0
    xi, w = x.xi, x.w
    for a in positive_roots(x.n):
        p = sum(c * d for c, d in zip(xi, a))
        if not is_positive(w.apply(a)):
            p += 1
        total += abs(p)
    return total


def is_grassmannian(x: AffineElement) -> bool:
    """True iff x is minimal in its coset x W (every finite s_i lengthens x)."""
    sys = RootSystemC(x.n)
    lx = length(x)
    return all(length(multiply(x, simple_reflection(sys, i))) > lx for i in range(1, x.n + 1))


def min_coset_rep(w: SignedPermutation) -> SignedPermutation:
    """Minimal-length representative of w W_P with W_P = <s_1, ..., s_{n-1}>."""
    n = w.n
    while True:
        for i in range(1, n):
            if w.has_right_descent(i):
                w = w * SignedPermutation.generator(n, i)
                break
        else:
            return w


def is_peterson_rep(x: AffineElement) -> bool:
    """Membership in Peterson's coset representatives (W^P)_af.

    For every Levi positive root a, <xi, a> must be 0 when w(a) > 0 and -1
    when w(a) < 0.
    """
    for a in RootSystemC(x.n).levi_positive_roots:
        p = sum(c * d for c, d in zip(x.xi, a))
        want = 0 if is_positive(x.w.apply(a)) else -1
        if p != want:
            return False
    return True


def reduced_word(x: AffineElement) -> list[int]:
    """A reduced word, found by peeling right descents off greedily."""
    sys = RootSystemC(x.n)
    gens = [simple_reflection(sys, i) for i in range(x.n + 1)]
    word: list[int] = []
    cur, lcur = x, length(x)
    while lcur:
        for i, s in enumerate(gens):
            y = multiply(cur, s)
            ly = length(y)
            if ly < lcur:
                word.append(i)
                cur, lcur = y, ly
                break
        else:  # pragma: no cover - every nonidentity element has a descent
            raise AssertionError("no descent found")
    word.reverse()
    return word


def bfs_cap() -> int:
    return int(os.environ.get("PETERSON_BFS_CAP", DEFAULT_BFS_CAP))


def bfs_enumerate(
    sys: RootSystemC, max_len: int, cap: int | None = None
) -> dict[AffineElement, int]:
    """All elements of length <= max_len with their word distance from e.

    Breadth-first closure under left multiplication by s_0, ..., s_n. Insertion
    order is deterministic. Raises ResourceLimitError past ``cap`` states.
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    cap = bfs_cap() if cap is None else cap
    gens = [simple_reflection(sys, i) for i in range(sys.n + 1)]
    e = AffineElement.identity(sys.n)
    dist = {e: 0}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        d = dist[x]
        if d >= max_len:
            continue
        for s in gens:
            y = multiply(s, x)
            if y not in dist:
                if len(dist) >= cap:
                    raise ResourceLimitError(
                        f"BFS exceeded {cap} states (n={sys.n}, max_len={max_len})"
                    )
                dist[y] = d + 1
                queue.append(y)
    return dist
