"""Text and JSON forms: coefficient expressions, partitions, relation files.

Coefficient grammar (whitespace is insignificant)::

    expr   := ["-"] term { ("+" | "-") term }
    term   := factor { "*" factor }
    factor := integer | "Q" [ "^" sint ] | "e^{" lin "}" | "(" expr ")"
    lin    := ["-"] sterm { ("+" | "-") sterm }
    sterm  := [integer] var | integer
    var    := "a" index | "eps" index

``a<i>`` is the simple root alpha_i and ``eps<i>`` the weight eps_i.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .kring import AffineCombo, LaurentCoeff, NovikovCoeff, QuantumCombo, root_expr_to_eps
from .rootdata import RootSystemC
from .shapes import PartitionPC, StrictPartition, format_partition

__all__ = [
    "CoeffParseError", "RelationFileError", "RelationFile",
    "parse_coeff", "print_coeff", "parse_partition", "format_partition",
    "print_quantum_combo", "print_quantum_relation", "quantum_relation_json",
    "load_relation", "relation_from_dict", "bundled_dataset", "DATASETS",
]

DATASETS = ("lg2_chevalley_affine.json", "lg2_product_rank2.json")


class CoeffParseError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class RelationFileError(ValueError):
    pass


# -- coefficient parser -------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z]+)|(?P<sym>\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, sys: RootSystemC, text: str):
        self.sys = sys
        self.n = sys.n
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def error(self, msg: str, pos: int | None = None):
        raise CoeffParseError(msg, self.text, self.peek()[2] if pos is None else pos)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def accept(self, value: str) -> bool:
        if self.peek()[1] == value and self.peek()[0] != "end":
            self.i += 1
            return True
        return False

    def expect(self, value: str):
        if not self.accept(value):
            self.error(f"expected {value!r}")

    def parse(self) -> NovikovCoeff:
        if self.peek()[0] == "end":
            self.error("empty expression")
        out = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return out

    def expr(self) -> NovikovCoeff:
        if self.accept("-"):
            acc = -self.term()
        else:
            self.accept("+")
            acc = self.term()
        while True:
            if self.accept("+"):
                acc = acc + self.term()
            elif self.accept("-"):
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> NovikovCoeff:
        acc = self.factor()
        while self.accept("*"):
            acc = acc * self.factor()
        return acc

    def _integer(self) -> int:
        kind, val, pos = self.peek()
        if kind != "int":
            self.error("expected an integer")
        self.take()
        return int(val)

    def _sint(self) -> int:
        braced = self.accept("{")
        sign = -1 if self.accept("-") else 1
        k = sign * self._integer()
        if braced:
            self.expect("}")
        return k

    def factor(self) -> NovikovCoeff:
        kind, val, pos = self.peek()
        n = self.n
        if kind == "int":
            self.take()
            return NovikovCoeff.constant(n, int(val))
        if kind == "name" and val == "Q":
            self.take()
            q = self._sint() if self.accept("^") else 1
            return NovikovCoeff.monomial((0,) * n, q)
        if kind == "name" and val == "e":
            self.take()
            self.expect("^")
            self.expect("{")
            eps = self.lin()
            self.expect("}")
            return NovikovCoeff.monomial(eps, 0)
        if self.accept("("):
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "end":
            self.error("unexpected end of expression")
        if kind == "name":
            self.error(f"unknown variable {val!r}")
        self.error(f"unexpected {val!r}")

    def lin(self) -> tuple[int, ...]:
        eps = [0] * self.n
        roots = [0] * self.n
        sign = -1 if self.accept("-") else 1
        while True:
            self.sterm(sign, eps, roots)
            if self.accept("+"):
                sign = 1
            elif self.accept("-"):
                sign = -1
            else:
                break
        from_roots = root_expr_to_eps(self.sys, roots)
        return tuple(a + b for a, b in zip(eps, from_roots))

    def sterm(self, sign: int, eps: list[int], roots: list[int]):
        coeff = 1
        kind, val, pos = self.peek()
        if kind == "int":
            coeff = self._integer()
            self.accept("*")
            if self.peek()[0] != "name":
                if coeff:
                    self.error("constant term in an exponent", pos)
                return
        kind, val, pos = self.take()
        if kind != "name" or val not in ("a", "eps"):
            self.error(f"unknown variable {val!r}", pos)
        _, idx_text, ipos = self.peek()
        idx = self._integer()
        if not 1 <= idx <= self.n:
            self.error(f"index {idx} out of range 1..{self.n}", ipos)
        target = roots if val == "a" else eps
        target[idx - 1] += sign * coeff


def parse_coeff(sys: RootSystemC, text: str) -> NovikovCoeff:
    return _Parser(sys, text).parse()


def _lin_text(eps: tuple[int, ...]) -> str:
    parts = []
    for i, c in enumerate(eps, start=1):
        if not c:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        if not parts:
            parts.append(f"{'-' if c < 0 else ''}{mag}eps{i}")
        else:
            parts.append(f"{'-' if c < 0 else '+'} {mag}eps{i}")
    return " ".join(parts)


def _canonical_terms(x: NovikovCoeff):
    return x.canonical_terms()


def _term_body(key: tuple[int, ...], c: int) -> str:
    eps, q = key[:-1], key[-1]
    factors = []
    if any(eps):
        factors.append("e^{" + _lin_text(eps) + "}")
    if q:
        factors.append("Q" if q == 1 else f"Q^{q}")
    if not factors:
        return str(abs(c))
    if abs(c) != 1:
        factors.insert(0, str(abs(c)))
    return " * ".join(factors)


def print_coeff(x) -> str:
    """Canonical text; ``parse_coeff(print_coeff(x)) == x``."""
    if isinstance(x, LaurentCoeff):
        x = x.to_novikov()
    terms = _canonical_terms(x)
    if not terms:
        return "0"
    out = []
    for k, (key, c) in enumerate(terms):
        body = _term_body(key, c)
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


# -- partitions ----------------------------------------------------------------

def parse_partition(text: str, n: int, strict: bool = False) -> PartitionPC:
    """Parse "3,3,2,1", "[]" (empty), optionally wrapped in () or []."""
    s = text.strip()
    if s[:1] in "([" and s[-1:] in ")]":
        s = s[1:-1].strip()
    if not s:
        parts: tuple[int, ...] = ()
    else:
        try:
            parts = tuple(int(p) for p in s.split(","))
        except ValueError:
            raise ValueError(f"malformed partition {text!r}") from None
    cls = StrictPartition if strict else PartitionPC
    return cls(n, parts)


# -- quantum side printing -------------------------------------------------------

def _class_text(mu: PartitionPC) -> str:
    return "O[" + (",".join(map(str, mu.parts))) + "]"


def print_quantum_combo(x: QuantumCombo) -> str:
    if x.is_zero():
        return "0"
    out = []
    for k, (mu, c) in enumerate(x.items()):
        terms = _canonical_terms(c)
        cls = _class_text(mu)
        if len(terms) == 1:
            (key, cc), = terms
            sign = "-" if cc < 0 else "+"
            if cc in (1, -1) and not any(key):
                body = cls
            else:
                body = _term_body(key, cc) + " * " + cls
        else:
            sign = "+"
            body = "(" + print_coeff(c) + ") * " + cls
        if k == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


def print_quantum_relation(rel) -> str:
    a, b = rel.lhs
    return f"{_class_text(a)} * {_class_text(b)} = {print_quantum_combo(rel.rhs)}"


def quantum_relation_json(rel) -> dict:
    a, b = rel.lhs
    return {
        "n": rel.n,
        "kind": "qk-product",
        "lhs": [format_partition(a), format_partition(b)],
        "rhs": [
            {"part": format_partition(mu), "coeff": c.to_json()}
            for mu, c in rel.rhs.items()
        ],
    }


# -- relation files ---------------------------------------------------------------

@dataclass(frozen=True)
class RelationFile:
    n: int
    kind: str
    lhs: tuple[PartitionPC, PartitionPC]
    rhs: AffineCombo
    notes: str = ""


def relation_from_dict(data: dict) -> RelationFile:
    try:
        n = data["n"]
        kind = data.get("kind", "affine-k-product")
        lhs_raw = data["lhs"]
        rhs_raw = data["rhs"]
    except (KeyError, TypeError) as exc:
        raise RelationFileError(f"missing field {exc}") from None
    if not isinstance(n, int) or n < 1:
        raise RelationFileError(f"bad rank {n!r}")
    if kind != "affine-k-product":
        raise RelationFileError(f"unsupported kind {kind!r}")
    if not isinstance(lhs_raw, list) or len(lhs_raw) != 2:
        raise RelationFileError("lhs must be a list of two partitions")
    sys = RootSystemC(n)
    try:
        lhs = tuple(parse_partition(str(p), n) for p in lhs_raw)
        terms = []
        for t in rhs_raw:
            coeff = parse_coeff(sys, t["coeff"])
            if not coeff.is_laurent():
                raise RelationFileError(f"affine coefficient {t['coeff']!r} involves Q")
            lam = parse_partition(str(t["part"]), n)
            terms.append(((lam, int(t.get("loc_exp", 0))), coeff.to_laurent()))
    except (KeyError, TypeError) as exc:
        raise RelationFileError(f"malformed rhs term: {exc}") from None
    except (ValueError, IndexError) as exc:
        if isinstance(exc, RelationFileError):
            raise
        raise RelationFileError(str(exc)) from None
    return RelationFile(n, kind, lhs, AffineCombo(n, terms), str(data.get("notes", "")))


def bundled_dataset(name: str) -> Path:
    return Path(str(resources.files("kpeterson") / "data" / name))


def load_relation(path) -> RelationFile:
    """Read a relation file; a bare bundled dataset name also resolves."""
    p = Path(path)
    if not p.exists() and p.name in DATASETS:
        p = bundled_dataset(p.name)
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise RelationFileError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise RelationFileError(f"{path}: invalid JSON ({exc})") from None
    return relation_from_dict(data)
