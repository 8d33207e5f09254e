"""Exact coefficients in R(T) and R(T)[Q, Q^-1], and Schubert-class combinations.

A coefficient is a sparse map from exponent vectors to nonzero integers. The
exponent vector of ``LaurentCoeff`` lists eps-coordinates; ``NovikovCoeff``
appends the power of Q as one more coordinate.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .rootdata import RootSystemC
from .shapes import PartitionPC, StrictPartition


class _Sparse:
    """Integer linear combinations of Laurent monomials with a fixed key length."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], int] | Iterable = ()):
        self.n = n
        width = self._width(n)
        acc: dict[tuple[int, ...], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, c in items:
            key = tuple(int(k) for k in key)
            if len(key) != width:
                raise ValueError(f"exponent {key} has wrong length for n={n}")
            acc[key] = acc.get(key, 0) + int(c)
        self._terms = tuple(sorted((k, c) for k, c in acc.items() if c))
        self._hash = None

    @staticmethod
    def _width(n: int) -> int:
        return n

    @classmethod
    def zero(cls, n: int):
        return cls(n)

    @classmethod
    def one(cls, n: int):
        return cls(n, {(0,) * cls._width(n): 1})

    @classmethod
    def constant(cls, n: int, c: int):
        return cls(n, {(0,) * cls._width(n): c})

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _coerce(self, other):
        if isinstance(other, int):
            return type(self).constant(self.n, other)
        if type(other) is not type(self):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return type(self)(self.n, list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __neg__(self):
        return type(self)(self.n, [(k, -c) for k, c in self._terms])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], int] = {}
        for k1, c1 in self._terms:
            for k2, c2 in other._terms:
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + c1 * c2
        return type(self)(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are only defined for monomials")
        out = type(self).one(self.n)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = type(self).constant(self.n, other)
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.n, self._terms))
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}({self.n}, {dict(self._terms)})"


class LaurentCoeff(_Sparse):
    """An element of R(T) = Z[e^{+-eps_1}, ..., e^{+-eps_n}]."""

    __slots__ = ()

    @classmethod
    def monomial(cls, eps: Iterable[int], c: int = 1) -> "LaurentCoeff":
        eps = tuple(eps)
        return cls(len(eps), {eps: c})

    def to_novikov(self, q: int = 0) -> "NovikovCoeff":
        return NovikovCoeff(self.n, [(k + (q,), c) for k, c in self._terms])


class NovikovCoeff(_Sparse):
    """An element of R(T)[Q, Q^-1]; keys are (eps exponents..., Q exponent)."""

    __slots__ = ()

    @staticmethod
    def _width(n: int) -> int:
        return n + 1

    @classmethod
    def monomial(cls, eps: Iterable[int], q: int = 0, c: int = 1) -> "NovikovCoeff":
        eps = tuple(eps)
        return cls(len(eps), {eps + (q,): c})

    def shift_q(self, d: int) -> "NovikovCoeff":
        """Multiply by Q^d."""
        return NovikovCoeff(self.n, [(k[:-1] + (k[-1] + d,), c) for k, c in self._terms])

    def q_exponents(self) -> set[int]:
        return {k[-1] for k, _ in self._terms}

    def is_laurent(self) -> bool:
        """True when no term carries a power of Q."""
        return all(k[-1] == 0 for k, _ in self._terms)

    def to_laurent(self) -> LaurentCoeff:
        if not self.is_laurent():
            raise ValueError("coefficient involves Q")
        return LaurentCoeff(self.n, [(k[:-1], c) for k, c in self._terms])

    def canonical_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms by ascending Q exponent, then descending eps exponents."""
        return sorted(self._terms, key=lambda kc: (kc[0][-1], tuple(-e for e in kc[0][:-1])))

    def to_json(self) -> list[dict]:
        return [{"eps": list(k[:-1]), "q": k[-1], "c": c} for k, c in self.canonical_terms()]

    @classmethod
    def from_json(cls, n: int, data: list[dict]) -> "NovikovCoeff":
        return cls(n, [(tuple(t["eps"]) + (t["q"],), t["c"]) for t in data])


def root_expr_to_eps(sys: RootSystemC, coeffs: Iterable[int]) -> tuple[int, ...]:
    """sum c_i alpha_i in eps-coordinates (alpha_i = eps_i - eps_{i+1}, alpha_n = 2 eps_n)."""
    c = tuple(int(x) for x in coeffs)
    n = sys.n
    if len(c) != n:
        raise ValueError(f"rank mismatch: {len(c)} root coefficients for n={n}")
    out = [0] * n
    for i in range(n - 1):
        out[i] += c[i]
        out[i + 1] -= c[i]
    out[n - 1] += 2 * c[n - 1]
    return tuple(out)


class _Combo:
    """A finite linear combination of basis keys with ring coefficients."""

    __slots__ = ("n", "_terms")
    coeff_type: type = _Sparse

    def __init__(self, n: int, terms: Mapping | Iterable = ()):
        self.n = n
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, c in items:
            key = self._check_key(key)
            if isinstance(c, int):
                c = self.coeff_type.constant(n, c)
            if not isinstance(c, self.coeff_type) or c.n != n:
                raise ValueError(f"bad coefficient {c!r} for rank {n}")
            acc[key] = acc[key] + c if key in acc else c
        self._terms = {k: c for k, c in sorted(acc.items(), key=lambda kc: self._order(kc[0]))
                       if not c.is_zero()}

    def _check_key(self, key):
        raise NotImplementedError

    @staticmethod
    def _order(key):
        raise NotImplementedError

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def _same(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} and {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        self._same(other)
        return type(self)(self.n, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if isinstance(c, int):
            c = self.coeff_type.constant(self.n, c)
        return type(self)(self.n, [(k, c * v) for k, v in self._terms.items()])

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((type(self).__name__, self.n, tuple(self._terms.items())))

    def __repr__(self):
        return f"{type(self).__name__}({self.n}, {self._terms})"


class AffineCombo(_Combo):
    """sum c * O_lambda * (O_{(n+1)})^d, keyed by (lambda, d)."""

    __slots__ = ()
    coeff_type = LaurentCoeff

    def _check_key(self, key):
        lam, d = key
        if not isinstance(lam, PartitionPC):
            lam = PartitionPC(self.n, tuple(lam))
        elif type(lam) is not PartitionPC:
            lam = PartitionPC(lam.n, lam.parts)
        if lam.n != self.n:
            raise ValueError(f"partition rank {lam.n} differs from {self.n}")
        return (lam, int(d))

    @staticmethod
    def _order(key):
        lam, d = key
        return (d, lam.size, lam.parts)


class QuantumCombo(_Combo):
    """sum c * O^mu over strict partitions mu, with c in R(T)[Q, Q^-1]."""

    __slots__ = ()
    coeff_type = NovikovCoeff

    def _check_key(self, mu):
        if not isinstance(mu, StrictPartition):
            parts = mu.parts if isinstance(mu, PartitionPC) else tuple(mu)
            mu = StrictPartition(self.n, parts)
        if mu.n != self.n:
            raise ValueError(f"partition rank {mu.n} differs from {self.n}")
        return mu

    @staticmethod
    def _order(mu):
        # largest classes first, as relations are usually written
        return (-mu.size, tuple(-p for p in mu.parts))

    def shift_q(self, d: int) -> "QuantumCombo":
        return QuantumCombo(self.n, [(k, v.shift_q(d)) for k, v in self._terms.items()])
