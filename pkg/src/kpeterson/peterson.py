"""The K-theoretic Peterson correspondence for the Lagrangian Grassmannian LG(n).

An affine class O_lambda * (O_{(n+1)})^{-k} is sent to Q^{k - l(lambda)} O^{mu}
with mu = (lambda^{<=n})*. Modulo the first-row ideal every O_lambda reduces to
(O_{(n+1)})^a O_{lambda^{<=n}}, which is what makes this assignment an
isomorphism after localization.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache

from .kring import AffineCombo, QuantumCombo
from .rootdata import RootSystemC
from .shapes import (
    PartitionPC,
    StrictPartition,
    enumerate_sp,
    remove_first_row,
    star,
    truncate,
    u_of,
)
from .weyl import AffineElement, SignedPermutation, is_grassmannian, min_coset_rep

class NegativeQWarning(UserWarning):
    """A transported relation has a negative power of Q."""


@dataclass(frozen=True)
class PetersonContext:
    sys: RootSystemC

    @classmethod
    def of_rank(cls, n: int) -> "PetersonContext":
        return cls(RootSystemC(n))

    @property
    def n(self) -> int:
        return self.sys.n

    @property
    def special(self) -> PartitionPC:
        """The partition (n+1) whose class is inverted."""
        return PartitionPC(self.n, (self.n + 1,))

    @property
    def q_degree(self) -> int:
        return self.n + 1

    def check(self, lam: PartitionPC) -> PartitionPC:
        if not isinstance(lam, PartitionPC):
            lam = PartitionPC(self.n, tuple(lam))
        if lam.n != self.n:
            raise ValueError(f"partition of rank {lam.n} used at rank {self.n}")
        return lam


@dataclass(frozen=True)
class HomologyImage:
    """Image in QH_T(LG(n))_loc: q^q_exp sigma^mu, or zero when mu is None."""

    q_exp: int = 0
    mu: StrictPartition | None = None

    @classmethod
    def zero(cls) -> "HomologyImage":
        return cls()

    @property
    def is_zero(self) -> bool:
        return self.mu is None


def j_reduce(ctx: PetersonContext, lam: PartitionPC) -> tuple[int, StrictPartition]:
    """Strip first rows >= n+1 one at a time: O_lambda = (O_{(n+1)})^a O_mu mod J."""
    lam = ctx.check(lam)
    a = 0
    while lam.parts and lam.first >= ctx.n + 1:
        lam = remove_first_row(lam)
        a += 1
    # what is left has every part <= n
    return a, truncate(lam)


def phi_index(ctx: PetersonContext, lam: PartitionPC, k: int = 0) -> tuple[int, StrictPartition]:
    """Image of O_lambda (O_{(n+1)})^{-k}: returns (k - l(lambda), (lambda^{<=n})*)."""
    lam = ctx.check(lam)
    return k - lam.length, star(truncate(lam))


def phi_combo(ctx: PetersonContext, x: AffineCombo) -> QuantumCombo:
    if x.n != ctx.n:
        raise ValueError(f"rank mismatch: {x.n} vs {ctx.n}")
    terms = []
    for (lam, d), c in x.items():
        q, mu = phi_index(ctx, lam, -d)
        terms.append((mu, c.to_novikov(q)))
    return QuantumCombo(ctx.n, terms)


@lru_cache(maxsize=None)
def _coset_table(n: int) -> dict[SignedPermutation, StrictPartition]:
    sys = RootSystemC(n)
    return {u_of(mu): mu for mu in enumerate_sp(sys)}


def phi_grassmannian(ctx: PetersonContext, x: AffineElement) -> tuple[int, StrictPartition]:
    """Image of O_x for x = w t_xi in W_af^0: (Q exponent [xi], mu with u_mu = floor(w))."""
    if x.n != ctx.n:
        raise ValueError(f"rank mismatch: {x.n} vs {ctx.n}")
    if not is_grassmannian(x):
        raise ValueError("element is not 0-Grassmannian")
    rep = min_coset_rep(x.w)
    try:
        mu = _coset_table(ctx.n)[rep]
    except KeyError:  # pragma: no cover - W^P is exactly {u_mu}
        raise RuntimeError(f"coset representative {rep.images} is not of the form u_mu")
    return ctx.sys.bracket_projection(x.xi), mu


@dataclass(frozen=True)
class QuantumRelation:
    """O^{lhs[0]} * O^{lhs[1]} = rhs in QK_T(LG(n))."""

    n: int
    lhs: tuple[StrictPartition, StrictPartition]
    rhs: QuantumCombo

    def min_q_exponent(self) -> int | None:
        exps = [q for _, c in self.rhs.items() for q in c.q_exponents()]
        return min(exps) if exps else None


def transport_product(
    ctx: PetersonContext, lam: PartitionPC, mu: PartitionPC, rhs: AffineCombo
) -> QuantumRelation:
    """Carry an affine product expansion O_lam O_mu = rhs across to LG(n).

    Both sides are mapped; the Q^{-l(lam) - l(mu)} on the left is moved to the
    right, so a term c O_nu (O_{(n+1)})^d becomes
    c Q^{l(lam) + l(mu) - l(nu) - d} O^{(nu^{<=n})*}.
    """
    lam, mu = ctx.check(lam), ctx.check(mu)
    if rhs.n != ctx.n:
        raise ValueError(f"rank mismatch: {rhs.n} vs {ctx.n}")
    qa, a = phi_index(ctx, lam)
    qb, b = phi_index(ctx, mu)
    out = phi_combo(ctx, rhs).shift_q(-(qa + qb))
    rel = QuantumRelation(ctx.n, (a, b), out)
    low = rel.min_q_exponent()
    if low is not None and low < 0:
        warnings.warn(
            f"transported relation has Q^{low}; the input is probably not a product expansion",
            NegativeQWarning,
            stacklevel=2,
        )
    return rel


def homology_transport(ctx: PetersonContext, lam: PartitionPC, k: int = 0) -> HomologyImage:
    """sigma_lambda (sigma_{(n+1)})^{-k} -> q^{k - l(lambda)} sigma^{(lambda^{<=n})*}, or 0.

    Zero exactly when lambda_1 >= n+2. Partitions with lambda_1 <= n take the
    same formula as lambda_1 = n+1.
    """
    lam = ctx.check(lam)
    if lam.first >= ctx.n + 2:
        return HomologyImage.zero()
    q, mu = phi_index(ctx, lam, k)
    return HomologyImage(q, mu)


def degree_check(ctx: PetersonContext, lam: PartitionPC, k: int = 0) -> bool:
    """The homology map reverses degree, with deg q = n+1 and deg sigma^mu = |mu|."""
    lam = ctx.check(lam)
    img = homology_transport(ctx, lam, k)
    if img.is_zero:
        return True
    source = lam.size - k * ctx.q_degree
    target = img.q_exp * ctx.q_degree + img.mu.size
    return source + target == 0
