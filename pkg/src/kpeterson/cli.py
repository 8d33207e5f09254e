"""Command line entry point.

Exit codes: 0 success, 1 failed verification, 2 usage error,
3 parse or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import shapes
from .peterson import PetersonContext, homology_transport, phi_index, transport_product
from .rootdata import RootSystemC
from .shapes import format_partition, shifted_diagram
from .textio import (
    RelationFileError,
    load_relation,
    parse_partition,
    print_quantum_relation,
    quantum_relation_json,
)
from .verify import SUITES, run_all
from .weyl import (
    ResourceLimitError,
    bfs_enumerate,
    is_grassmannian,
    is_peterson_rep,
    length,
    reduced_word,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_INVALID = 0, 1, 2, 3


class _InvalidInput(Exception):
    pass


def _partition(args) -> shapes.PartitionPC:
    try:
        return parse_partition(args.partition, args.n)
    except ValueError as exc:
        raise _InvalidInput(f"invalid partition {args.partition!r}: {exc}") from None


def _rank(n: int) -> RootSystemC:
    try:
        return RootSystemC(n)
    except ValueError as exc:
        raise _InvalidInput(str(exc)) from None


def _q_prefix(symbol: str, q: int) -> str:
    if q == 0:
        return ""
    return f"{symbol} * " if q == 1 else f"{symbol}^{q} * "


def cmd_element(args, out) -> int:
    _rank(args.n)
    lam = _partition(args)
    x = shapes.x_of(lam)
    word = reduced_word(x)
    print(f"partition: {format_partition(lam)}", file=out)
    print(f"finite part: {list(x.w.images)}", file=out)
    print(f"translation: {list(x.xi)}", file=out)
    print(f"length: {length(x)}", file=out)
    print(f"reduced word: {' '.join(f's{i}' for i in word) if word else '(empty)'}", file=out)
    print(f"grassmannian: {str(is_grassmannian(x)).lower()}", file=out)
    print(f"peterson: {str(is_peterson_rep(x)).lower()}", file=out)
    return EXIT_OK


def cmd_map(args, out) -> int:
    ctx = PetersonContext(_rank(args.n))
    lam = _partition(args)
    k = -args.loc_exp
    if args.homology:
        img = homology_transport(ctx, lam, k)
        if img.is_zero:
            print("0", file=out)
            return EXIT_OK
        q, mu = img.q_exp, img.mu
        print(f"{_q_prefix('q', q)}sigma[{','.join(map(str, mu.parts))}]", file=out)
    else:
        q, mu = phi_index(ctx, lam, k)
        print(f"{_q_prefix('Q', q)}O[{','.join(map(str, mu.parts))}]", file=out)
    if args.diagram:
        print(shifted_diagram(mu), file=out)
    return EXIT_OK


def cmd_transport(args, out) -> int:
    try:
        rf = load_relation(args.input)
    except RelationFileError as exc:
        raise _InvalidInput(str(exc)) from None
    ctx = PetersonContext.of_rank(rf.n)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        rel = transport_product(ctx, rf.lhs[0], rf.lhs[1], rf.rhs)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    if args.format == "json":
        print(json.dumps(quantum_relation_json(rel), indent=2), file=out)
    else:
        print(print_quantum_relation(rel), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    _rank(args.n)
    suites = None if args.suite == "all" else [args.suite]
    report = run_all(args.n, args.max_weight, args.max_len, suites)
    print(report.to_json() if args.format == "json" else report.to_text(), file=out)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_enumerate(args, out) -> int:
    sys_ = _rank(args.n)
    parts = shapes.enumerate_pc(sys_, args.max_weight)
    if not args.grassmannian_count:
        for lam in parts:
            print(format_partition(lam), file=out)
        return EXIT_OK
    counts = [0] * (args.max_weight + 1)
    for lam in parts:
        counts[lam.size] += 1
    ball = bfs_enumerate(sys_, args.max_weight)
    grass = [0] * (args.max_weight + 1)
    for x, d in ball.items():
        if is_grassmannian(x):
            grass[d] += 1
    print("weight partitions grassmannian", file=out)
    for wt in range(args.max_weight + 1):
        print(f"{wt} {counts[wt]} {grass[wt]}", file=out)
    return EXIT_OK if counts == grass else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="kpeterson",
        description="Type C affine Weyl combinatorics and the K-Peterson map to QK_T(LG(n)).",
    )
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("element", help="show x_lambda in W_af")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--partition", required=True, help='e.g. "3,2" or "[]"')
    e.set_defaults(func=cmd_element)

    m = sub.add_parser("map", help="image of O_lambda (O_(n+1))^D under the Peterson map")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--partition", required=True)
    m.add_argument("--loc-exp", type=int, default=0,
                   help="power D of O_(n+1) multiplying O_lambda (may be negative)")
    m.add_argument("--homology", action="store_true", help="use the homology limit instead")
    m.add_argument("--diagram", action="store_true", help="also draw the shifted diagram")
    m.set_defaults(func=cmd_map)

    t = sub.add_parser("transport", help="transport an affine product relation file")
    t.add_argument("--input", required=True)
    t.add_argument("--format", choices=("text", "json"), default="text")
    t.set_defaults(func=cmd_transport)

    v = sub.add_parser("verify", help="run the verification suites")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--max-weight", type=int, default=10)
    v.add_argument("--max-len", type=int, default=8, help="BFS depth for the length oracle")
    v.add_argument("--suite", choices=("all", *SUITES), default="all")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)

    en = sub.add_parser("enumerate", help="list P^n_C up to a weight")
    en.add_argument("--n", type=int, required=True)
    en.add_argument("--max-weight", type=int, required=True)
    en.add_argument("--grassmannian-count", action="store_true",
                    help="compare counts per weight with BFS over W_af^0")
    en.set_defaults(func=cmd_enumerate)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except _InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
