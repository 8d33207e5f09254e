"""Exhaustive small-rank checks of the structural facts the correspondence rests on.

Every suite returns a ``CheckReport``; failures keep at most ten
counterexamples but count all of them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

from . import shapes
from .peterson import (
    PetersonContext,
    degree_check,
    homology_transport,
    phi_grassmannian,
    phi_index,
)
from .rootdata import LatticeVector, RootSystemC
from .shapes import PartitionPC, StrictPartition, format_partition
from .weyl import (
    AffineElement,
    SignedPermutation,
    bfs_enumerate,
    is_grassmannian,
    is_peterson_rep,
    length,
    min_coset_rep,
    multiply,
    simple_reflection,
)

MAX_COUNTEREXAMPLES = 10


def describe(obj) -> str:
    """Short stable text for report entries."""
    if isinstance(obj, PartitionPC):
        return format_partition(obj)
    if isinstance(obj, SignedPermutation):
        return "w" + str(list(obj.images))
    if isinstance(obj, AffineElement):
        return f"w{list(obj.w.images)} t{list(obj.xi)}"
    if isinstance(obj, LatticeVector):
        return "(" + ", ".join(str(c) for c in obj.coords) + ")"
    if isinstance(obj, tuple):
        return "(" + ", ".join(describe(o) for o in obj) + ")"
    return str(obj)


@dataclass
class CheckReport:
    name: str
    params: dict
    cases: int = 0
    failure_count: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def case(self, ok: bool, input, expected, actual) -> bool:
        self.cases += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_COUNTEREXAMPLES:
                self.failures.append({
                    "input": describe(input),
                    "expected": describe(expected),
                    "actual": describe(actual),
                })
        return ok

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": dict(self.params),
            "passed": self.passed,
            "cases": self.cases,
            "failure_count": self.failure_count,
            "failures": list(self.failures),
        }

    def to_text(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        head = f"{'PASS' if self.passed else 'FAIL'} {self.name} [{params}] {self.cases} cases"
        if self.passed:
            return head
        lines = [head + f", {self.failure_count} failures"]
        for f in self.failures:
            lines.append(f"    input={f['input']} expected={f['expected']} actual={f['actual']}")
        return "\n".join(lines)


@dataclass
class AggregateReport:
    reports: list[CheckReport]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "reports": [r.to_dict() for r in self.reports]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        total = sum(r.cases for r in self.reports)
        tail = f"{'ALL PASS' if self.passed else 'FAILED'}: {len(self.reports)} suites, {total} cases"
        return "\n".join([r.to_text() for r in self.reports] + [tail])


def _eps(n: int, i: int) -> tuple[int, ...]:
    return tuple(1 if j == i - 1 else 0 for j in range(n))


def _partitions(n: int, max_weight: int) -> list[PartitionPC]:
    return shapes.enumerate_pc(RootSystemC(n), max_weight)


# -- suites -------------------------------------------------------------------

def check_bijection(n: int, max_weight: int = 10, cap: int | None = None) -> CheckReport:
    """lambda -> x_lambda against the BFS-enumerated 0-Grassmannian elements."""
    rep = CheckReport("bijection", {"n": n, "max_weight": max_weight})
    sys = RootSystemC(n)
    ball = bfs_enumerate(sys, max_weight, cap=cap)
    grass: dict[AffineElement, int] = {x: d for x, d in ball.items() if is_grassmannian(x)}
    seen: dict[AffineElement, PartitionPC] = {}
    by_weight = [0] * (max_weight + 1)
    for lam in _partitions(n, max_weight):
        x = shapes.x_of(lam)
        by_weight[lam.size] += 1
        ok = (
            x not in seen
            and is_grassmannian(x)
            and length(x) == lam.size
            and grass.get(x) == lam.size
        )
        rep.case(ok, lam, f"new W_af^0 element of length {lam.size}",
                 f"{describe(x)} len={length(x)} bfs={grass.get(x)} dup={describe(seen.get(x))}")
        seen.setdefault(x, lam)
    bfs_counts = [0] * (max_weight + 1)
    for d in grass.values():
        bfs_counts[d] += 1
    if by_weight != bfs_counts:
        rep.failure_count += 1
        rep.failures.append({"input": "counts by length", "expected": str(bfs_counts),
                             "actual": str(by_weight)})
    return rep


def check_decomposition(n: int, max_weight: int = 12) -> CheckReport:
    """x_lambda = v(lambda) t_{-xi(lambda)}."""
    rep = CheckReport("decomposition", {"n": n, "max_weight": max_weight})
    for lam in _partitions(n, max_weight):
        x = shapes.x_of(lam)
        y = multiply(AffineElement.finite(shapes.v_of(lam)),
                     AffineElement.translation(-shapes.xi_of(lam)))
        rep.case(x == y, lam, x, y)
    return rep


def check_bracket(n: int, max_weight: int = 12) -> CheckReport:
    """[xi(lambda)] = l(lambda) alpha_n^v."""
    rep = CheckReport("bracket", {"n": n, "max_weight": max_weight})
    for lam in _partitions(n, max_weight):
        b = shapes.bracket_xi(lam)
        rep.case(b == lam.length, lam, lam.length, b)
    return rep


def check_translation_steps(n: int, max_weight: int = 12) -> CheckReport:
    """xi(lambda) - xi(lambda^-) is eps_r (lambda_1 <= n+1) or some eps_i, i < n."""
    rep = CheckReport("translation_steps", {"n": n, "max_weight": max_weight})
    sys = RootSystemC(n)
    for lam in _partitions(n, max_weight):
        if not lam.parts:
            continue
        xi = shapes.xi_of(lam)
        diff = (xi - shapes.xi_of(shapes.remove_first_row(lam))).to_ints()
        if lam.first <= n + 1:
            s, r = divmod(lam.length, n)
            want = _eps(n, r if r else n)
            closed = 2 * s * sys.fundamental_coweight(n) + sys.fundamental_coweight(r)
            rep.case(diff == want and xi == closed, lam, (want, closed), (diff, xi))
        else:
            allowed = [_eps(n, i) for i in range(1, n)]
            rep.case(diff in allowed, lam, "eps_i with 1 <= i <= n-1", diff)
    return rep


def commutation_1_sides(sys: RootSystemC, i: int, j: int):
    """u_{i*} u_{j*} and u_{(j+1)*} u_{i*} s_{n-1}."""
    n = sys.n
    st = lambda k: n + 1 - k  # noqa: E731
    u = lambda k: shapes.u_of_index(sys, st(k))  # noqa: E731
    return u(i) * u(j), u(j + 1) * u(i) * SignedPermutation.generator(n, n - 1)


def commutation_2_sides(sys: RootSystemC, i: int):
    """v_{n+1} u_{i*} and u_{(i-1)*} v_{n+2}."""
    n = sys.n
    u = lambda k: shapes.u_of_index(sys, n + 1 - k)  # noqa: E731
    return (shapes.v_of_index(sys, n + 1) * u(i),
            u(i - 1) * shapes.v_of_index(sys, n + 2))


def check_commutations(n: int) -> CheckReport:
    rep = CheckReport("commutations", {"n": n})
    sys = RootSystemC(n)
    for i in range(1, n):
        for j in range(i, n):
            lhs, rhs = commutation_1_sides(sys, i, j)
            rep.case(lhs == rhs, ("u_{i*}u_{j*}", i, j), lhs, rhs)
    for i in range(2, n + 1):
        lhs, rhs = commutation_2_sides(sys, i)
        rep.case(lhs == rhs, ("v_{n+1}u_{i*}", i), lhs, rhs)
    return rep


def check_mcr(n: int) -> CheckReport:
    """floor(v(lambda)) = u_{lambda*} over all of SP(n); u_mu is a minimal representative."""
    rep = CheckReport("mcr", {"n": n})
    sys = RootSystemC(n)
    images = set()
    for mu in shapes.enumerate_sp(sys):
        got = min_coset_rep(shapes.v_of(mu))
        want = shapes.u_of(shapes.star(mu))
        u = shapes.u_of(mu)
        minimal = not any(u.has_right_descent(i) for i in range(1, n))
        rep.case(got == want and minimal and u not in images, mu, want, got)
        images.add(u)
    return rep


def check_kernel(n: int, max_weight: int = 12, ks: tuple[int, ...] = (-1, 0, 1, 2)) -> CheckReport:
    """Phi(O_lambda) = Q^-1 Phi(O_{lambda^-}) whenever lambda_1 >= n+1.

    Checked on the index formula for several localization powers k, and on
    the group side through x_lambda and x_{lambda^-}.
    """
    rep = CheckReport("kernel", {"n": n, "max_weight": max_weight})
    ctx = PetersonContext.of_rank(n)
    special = phi_grassmannian(ctx, shapes.x_of(ctx.special))
    rep.case(special == (-1, StrictPartition(n, ())), ctx.special, "(-1, [])", special)
    for lam in _partitions(n, max_weight):
        if lam.first < n + 1:
            continue
        minus = shapes.remove_first_row(lam)
        for k in ks:
            a, b = phi_index(ctx, lam, k), phi_index(ctx, minus, k - 1)
            rep.case(a == b, (lam, k), b, a)
        ga = phi_grassmannian(ctx, shapes.x_of(lam))
        q, mu = phi_grassmannian(ctx, shapes.x_of(minus))
        rep.case(ga == (q - 1, mu), lam, (q - 1, mu), ga)
    return rep


def check_map_consistency(n: int, max_weight: int = 12) -> CheckReport:
    """The element-level map on x_lambda agrees with the closed partition formula."""
    rep = CheckReport("map_consistency", {"n": n, "max_weight": max_weight})
    ctx = PetersonContext.of_rank(n)
    for lam in _partitions(n, max_weight):
        got = phi_grassmannian(ctx, shapes.x_of(lam))
        want = phi_index(ctx, lam, 0)
        rep.case(got == want, lam, want, got)
    return rep


def check_peterson_cosets(n: int, max_weight: int = 10) -> CheckReport:
    """x_lambda is a Peterson coset representative iff lambda_1 <= n+1."""
    rep = CheckReport("peterson_cosets", {"n": n, "max_weight": max_weight})
    for lam in _partitions(n, max_weight):
        got = is_peterson_rep(shapes.x_of(lam))
        want = lam.first <= n + 1
        rep.case(got == want, lam, want, got)
    return rep


def check_homology(n: int, max_weight: int = 10, ks: tuple[int, ...] = (0, 1, 2)) -> CheckReport:
    """Homology images vanish exactly for lambda_1 >= n+2, i.e. off the Peterson cosets."""
    rep = CheckReport("homology", {"n": n, "max_weight": max_weight})
    ctx = PetersonContext.of_rank(n)
    for lam in _partitions(n, max_weight):
        peterson = is_peterson_rep(shapes.x_of(lam))
        for k in ks:
            img = homology_transport(ctx, lam, k)
            if lam.first >= n + 2:
                want = "0"
                ok = img.is_zero
            else:
                want = (k - lam.length, shapes.star(shapes.truncate(lam)))
                ok = not img.is_zero and (img.q_exp, img.mu) == want
            ok = ok and img.is_zero == (not peterson)
            got = "0" if img.is_zero else (img.q_exp, img.mu)
            rep.case(ok, (lam, k), want, got)
    return rep


def check_degree_reversal(n: int, max_weight: int = 12, ks: tuple[int, ...] = (-1, 0, 1, 2)) -> CheckReport:
    rep = CheckReport("degree_reversal", {"n": n, "max_weight": max_weight})
    ctx = PetersonContext.of_rank(n)
    for lam in _partitions(n, max_weight):
        if lam.first > n + 1:
            continue
        mu = shapes.truncate(lam)
        identity = shapes.star(mu).size == mu.length * (n + 1) - mu.size
        for k in ks:
            ok = degree_check(ctx, lam, k) and identity
            rep.case(ok, (lam, k), True, ok)
    return rep


def check_length_oracle(n: int, max_len: int = 8, cap: int | None = None) -> CheckReport:
    """Closed-form length against BFS distance; each generator changes length by one."""
    rep = CheckReport("length_oracle", {"n": n, "max_len": max_len})
    sys = RootSystemC(n)
    gens = [simple_reflection(sys, i) for i in range(n + 1)]
    for x, d in bfs_enumerate(sys, max_len, cap=cap).items():
        lx = length(x)
        ok = lx == d and all(abs(length(multiply(x, s)) - lx) == 1 for s in gens)
        rep.case(ok, x, d, lx)
    return rep


# name -> runner(n, max_weight, max_len)
SUITES: dict[str, Callable[[int, int, int], CheckReport]] = {
    "bijection": lambda n, w, m: check_bijection(n, w),
    "decomposition": lambda n, w, m: check_decomposition(n, w),
    "bracket": lambda n, w, m: check_bracket(n, w),
    "translation_steps": lambda n, w, m: check_translation_steps(n, w),
    "commutations": lambda n, w, m: check_commutations(n),
    "mcr": lambda n, w, m: check_mcr(n),
    "kernel": lambda n, w, m: check_kernel(n, w),
    "map_consistency": lambda n, w, m: check_map_consistency(n, w),
    "peterson_cosets": lambda n, w, m: check_peterson_cosets(n, w),
    "homology": lambda n, w, m: check_homology(n, w),
    "degree_reversal": lambda n, w, m: check_degree_reversal(n, w),
    "length_oracle": lambda n, w, m: check_length_oracle(n, m),
}


def run_all(n: int, max_weight: int = 10, max_len: int = 8,
            suites: list[str] | None = None) -> AggregateReport:
    names = list(SUITES) if suites is None else suites
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    return AggregateReport([SUITES[s](n, max_weight, max_len) for s in names])
