"""Command-line interface: expand expressions, run verification suites, list bases, print tables."""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import coeffs, cqsym, pqsym, scqsym, series, sqsym, verify
from . import words as W
from .coeffs import LinComb, TensorElem, algebra, render
from .words import Segmented

PRODUCT_CAP = 8
INTERNAL_CAP = 5

WORD_BASES = {"F": pqsym.F, "G": pqsym.G, "PCat": cqsym.PCat, "MM": cqsym.MM, "RCat": cqsym.RCat}
RIBBON_BASES = {"PS": sqsym.PS, "QS": sqsym.QS, "RS": sqsym.RS,
                "PSC": scqsym.PSC, "QSC": scqsym.QSC, "FSC": scqsym.FSC, "RSC": scqsym.RSC}
COMPOSITION_BASES = ("S", "R_ncsf", "M_qsym", "F_qsym")
ALIASES = {"R": "R_ncsf", "M": "M_qsym", "FQ": "F_qsym"}
INTERNAL_PRODUCTS = {"F": pqsym.internal, "PCat": cqsym.internal}
COPRODUCT_OPS = ("Delta", "DeltaL", "DeltaR")


class UsageError(Exception):
    pass


class ParseError(UsageError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"parse error at column {pos + 1}: {message}")
        self.pos = pos


# ---------------------------------------------------------------------------
# expressions

TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<bar>'\|'|\|)|(?P<op>[\[\](),+\-*./]))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


Value = Fraction | LinComb | TensorElem


class Evaluator:
    """Recursive descent over  expr := term (('+'|'-') term)* ;  term := unary (('*'|'.') unary)* ;
    unary := '-' unary | Delta* unary | primary ;  primary := int ['/' int] | NAME '[' index ']' | '(' expr ')'."""

    def __init__(self, text: str, product_cap: int = PRODUCT_CAP, internal_cap: int = INTERNAL_CAP):
        self.tokens = tokenize(text)
        self.i = 0
        self.product_cap = product_cap
        self.internal_cap = internal_cap

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def take(self, text: str | None = None, kind: str | None = None) -> Token:
        t = self.tok
        if (text is not None and t.text != text) or (kind is not None and t.kind != kind):
            want = repr(text) if text is not None else kind
            raise ParseError(f"expected {want}, found {t.text or 'end of input'!r}", t.pos)
        self.i += 1
        return t

    def parse(self) -> Value:
        value = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return value

    def expr(self) -> Value:
        value = self.term()
        while self.tok.text in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = _add(value, rhs if op.text == "+" else _neg(rhs), op.pos)
        return value

    def term(self) -> Value:
        value = self.unary()
        while self.tok.text in ("*", "."):
            op = self.take()
            rhs = self.unary()
            value = self._multiply(value, rhs, op) if op.text == "*" else self._internal(value, rhs, op)
        return value

    def unary(self) -> Value:
        if self.tok.text == "-":
            self.take()
            return _neg(self.unary())
        if self.tok.kind == "name" and self.tok.text in COPRODUCT_OPS:
            op = self.take()
            return self._coproduct(op, self.unary())
        return self.primary()

    def primary(self) -> Value:
        t = self.tok
        if t.kind == "num":
            self.take()
            value = Fraction(int(t.text))
            if self.tok.text == "/":
                self.take()
                den = self.take(kind="num")
                if int(den.text) == 0:
                    raise ParseError("division by zero", den.pos)
                value /= int(den.text)
            return value
        if t.text == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        if t.kind == "name":
            return self.atom()
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.pos)

    def atom(self) -> LinComb:
        name_tok = self.take(kind="name")
        basis = ALIASES.get(name_tok.text, name_tok.text)
        if basis not in coeffs.ALGEBRAS:
            raise ParseError(f"unknown basis {name_tok.text!r}", name_tok.pos)
        self.take("[")
        blocks: list[list[int]] = [[]]
        expect_entry = True
        while self.tok.text != "]":
            t = self.tok
            if t.kind == "num" and expect_entry:
                blocks[-1].append(int(self.take().text))
                expect_entry = False
            elif t.kind == "bar" and not expect_entry:
                self.take()
                blocks.append([])
                expect_entry = True
            elif t.text == "," and not expect_entry:
                self.take()
                expect_entry = True
            elif t.kind == "bar" and expect_entry and blocks[-1] == [] and len(blocks) > 1:
                raise ParseError("empty block", t.pos)
            else:
                raise ParseError(f"unexpected {t.text or 'end of input'!r} in index", t.pos)
        close = self.take("]")
        if expect_entry and (len(blocks) > 1 or blocks[0]):
            raise ParseError("index ends with a separator", close.pos)
        try:
            return _build_atom(basis, blocks)
        except ValueError as exc:
            raise UsageError(f"invalid index for {basis} at column {name_tok.pos + 1}: {exc}") from None

    # operators ----------------------------------------------------------------

    def _multiply(self, x: Value, y: Value, op: Token) -> Value:
        if isinstance(x, Fraction) or isinstance(y, Fraction):
            return _scale(x, y)
        if isinstance(x, LinComb) and isinstance(y, LinComb):
            total = _max_degree(x) + _max_degree(y)
            if total > self.product_cap:
                raise UsageError(f"degree cap exceeded at column {op.pos + 1}: product of total degree "
                                 f"{total} > {self.product_cap}")
            return _checked(lambda: x * y, op)
        if isinstance(x, TensorElem) and isinstance(y, TensorElem):
            return _checked(lambda: coeffs.tensor_algebra_product(x, y), op)
        raise ParseError("cannot multiply an element by a tensor", op.pos)

    def _internal(self, x: Value, y: Value, op: Token) -> Value:
        if isinstance(x, Fraction) or isinstance(y, Fraction):
            return _scale(x, y)
        if not (isinstance(x, LinComb) and isinstance(y, LinComb)):
            raise ParseError("the internal product needs two elements", op.pos)
        basis = x.basis if x else y.basis
        if basis not in INTERNAL_PRODUCTS:
            raise UsageError(f"no internal product on basis {basis} (available: {', '.join(INTERNAL_PRODUCTS)})")
        degrees = x.support_degrees() | y.support_degrees()
        if len(degrees) > 1:
            raise UsageError(f"internal product needs both operands in one degree, found {sorted(degrees)}")
        if degrees and max(degrees) > self.internal_cap:
            raise UsageError(f"degree cap exceeded at column {op.pos + 1}: internal product in degree "
                             f"{max(degrees)} > {self.internal_cap}")
        return _checked(lambda: INTERNAL_PRODUCTS[basis](x, y), op)

    def _coproduct(self, op: Token, x: Value) -> TensorElem:
        if not isinstance(x, LinComb):
            raise ParseError(f"{op.text} needs an element", op.pos)
        if _max_degree(x) > self.product_cap:
            raise UsageError(f"degree cap exceeded at column {op.pos + 1}")
        if op.text == "Delta":
            return _checked(lambda: coeffs.coproduct(x), op)
        halves = _checked(lambda: coeffs.half_coproducts(x), op)
        return halves[0] if op.text == "DeltaL" else halves[1]


def _build_atom(basis: str, blocks: list[list[int]]) -> LinComb:
    flat = [x for b in blocks for x in b]
    if basis in RIBBON_BASES:
        return RIBBON_BASES[basis](Segmented(tuple(tuple(b) for b in blocks) if flat else ()))
    if len(blocks) > 1:
        raise ValueError(f"bars are not allowed in {basis} indices")
    if basis in WORD_BASES:
        return WORD_BASES[basis](tuple(flat))
    if any(x <= 0 for x in flat):
        raise ValueError("composition parts must be positive")
    return LinComb.term(basis, tuple(flat))


def _checked(fn, op: Token):
    try:
        return fn()
    except coeffs.BasisMismatch as exc:
        raise UsageError(f"at column {op.pos + 1}: {exc}") from None
    except NotImplementedError as exc:
        raise UsageError(f"at column {op.pos + 1}: {exc}") from None


def _max_degree(x: LinComb) -> int:
    return max(x.support_degrees(), default=0)


def _neg(x: Value) -> Value:
    return -x


def _scale(x: Value, y: Value) -> Value:
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x * y
    c, v = (x, y) if isinstance(x, Fraction) else (y, x)
    return v.scale(c)


def _add(x: Value, y: Value, pos: int) -> Value:
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x + y
    if isinstance(x, Fraction) or isinstance(y, Fraction):
        c, v = (x, y) if isinstance(x, Fraction) else (y, x)
        if not isinstance(v, LinComb):
            raise ParseError("cannot add a scalar to a tensor", pos)
        return v + algebra(v.basis).one().scale(c)
    if type(x) is not type(y):
        raise ParseError("cannot add an element and a tensor", pos)
    try:
        return x + y
    except (coeffs.BasisMismatch, ValueError) as exc:
        raise ParseError(str(exc), pos) from None


def evaluate(text: str, product_cap: int = PRODUCT_CAP, internal_cap: int = INTERNAL_CAP) -> Value:
    return Evaluator(text, product_cap, internal_cap).parse()


# ---------------------------------------------------------------------------
# output

def _coeff_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def _key_json(key) -> tuple[list[int], list[int]]:
    if isinstance(key, Segmented):
        return list(key.flat), list(key.bars)
    return list(key), []


def json_lines(value: Value) -> list[str]:
    if isinstance(value, Fraction):
        return [json.dumps({"basis": None, "index": [], "bars": [], "coeff": _coeff_str(value)})]
    lines = []
    for key, c in value.items():
        if isinstance(value, LinComb):
            index, bars = _key_json(key)
            record = {"basis": value.basis, "index": index, "bars": bars, "coeff": _coeff_str(c)}
        else:
            parts = [_key_json(k) for k in key]
            record = {"basis": list(value.bases), "index": [p[0] for p in parts],
                      "bars": [p[1] for p in parts], "coeff": _coeff_str(c)}
        lines.append(json.dumps(record))
    return lines


def text_of(value: Value) -> str:
    return str(value) if isinstance(value, Fraction) else render(value)


def _item_str(item) -> str:
    if isinstance(item, Segmented):
        return str(item)
    return W.word_str(item)


# ---------------------------------------------------------------------------
# commands

DIMENSIONS = {
    "PQSym": lambda n: (n + 1) ** (n - 1),
    "SQSym": lambda n: int(series.schroder_series(n + 1)[n]),
    "CQSym": lambda n: int(series.catalan_series(n + 1)[n]),
    "SCQSym": lambda n: 3 ** (n - 1),
    "NCSF": lambda n: 2 ** (n - 1),
    "QSym": lambda n: 2 ** (n - 1),
    "FQSym": lambda n: _factorial(n),
}


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


ENUMERATION_KINDS = W.KINDS + ("CLASSES", "PQS")


def cmd_expand(args) -> int:
    cap = _cap(args)
    value = evaluate(args.expr, cap or PRODUCT_CAP, cap or INTERNAL_CAP)
    if args.coproduct:
        if not isinstance(value, LinComb):
            raise UsageError("--coproduct needs an element")
        value = coeffs.coproduct(value)
    if args.format == "json":
        for line in json_lines(value):
            print(line)
    else:
        print(text_of(value))
    return 0


def cmd_verify(args) -> int:
    checks = verify.run_suite(args.suite, args.max_degree, args.seed)
    if args.format == "json":
        for c in checks:
            print(json.dumps(c.as_dict()))
    else:
        for c in checks:
            line = f"{'PASS' if c.passed else 'FAIL'}  {c.suite}: {c.name} (degree {c.degree})"
            if not c.passed:
                line += f"  {len(c.failures)} failure(s), first: {c.counterexample}"
            print(line)
        print(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    return 0 if all(c.passed for c in checks) else 1


def cmd_enumerate(args) -> int:
    kind = args.kind.upper()
    cap = _cap(args) or W.enumeration_cap()
    if args.n > cap:
        raise UsageError(f"n={args.n} exceeds the enumeration cap {cap}")
    if kind == "CLASSES":
        items = sqsym.class_list(args.n)
    elif kind == "PQS":
        items = sqsym.pqs_generators(args.n)
    elif kind in W.KINDS:
        items = W.enumerate_kind(kind, args.n, cap)
    else:
        raise UsageError(f"unknown kind {args.kind!r}; expected one of {', '.join(ENUMERATION_KINDS)}")
    for item in items:
        if args.format == "json":
            index, bars = _key_json(item)
            print(json.dumps({"index": index, "bars": bars}))
        else:
            print(_item_str(item))
    return 0


def cmd_dims(args) -> int:
    name = {k.lower(): k for k in DIMENSIONS}.get(args.algebra.lower())
    if name is None:
        raise UsageError(f"unknown algebra {args.algebra!r}; expected one of {', '.join(DIMENSIONS)}")
    cap = _cap(args) or 20
    if args.n_max > cap:
        raise UsageError(f"n_max={args.n_max} exceeds the cap {cap}")
    dims = [DIMENSIONS[name](n) for n in range(1, args.n_max + 1)]
    if args.format == "json":
        print(json.dumps({"algebra": name, "dims": dims}))
    else:
        print(", ".join(map(str, dims)))
    return 0


def cmd_series(args) -> int:
    names = list(series.NAMED) if args.name == "all" else [args.name]
    for name in names:
        if name not in series.NAMED:
            raise UsageError(f"unknown series {name!r}; known: {', '.join(series.NAMED)}")
        coeffs_ = series.named_series(name, args.n + 1).ints(1)
        if args.format == "json":
            print(json.dumps({"series": name, "coefficients": coeffs_}))
        else:
            print(f"{name}: {', '.join(map(str, coeffs_))}")
    return 0


def _cap(args) -> int | None:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("PARKHOPF_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"PARKHOPF_CAP must be an integer, got {env!r}") from None
    return None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cap", type=int, default=None, help="degree or size cap (env PARKHOPF_CAP)")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")

    parser = argparse.ArgumentParser(prog="parkhopf", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="expand an expression")
    p.add_argument("expr")
    p.add_argument("--coproduct", action="store_true", help="apply the coproduct to the result")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=[*verify.SUITES, "all"])
    p.add_argument("max_degree", type=int, nargs="?", default=4)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="list an index set")
    p.add_argument("kind", help=", ".join(ENUMERATION_KINDS))
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("dims", parents=[common], help="graded dimensions of an algebra")
    p.add_argument("algebra", help=", ".join(DIMENSIONS))
    p.add_argument("n_max", type=int)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("series", parents=[common], help="coefficients of a named generating series")
    p.add_argument("name", nargs="?", default="all")
    p.add_argument("n", type=int, nargs="?", default=10)
    p.set_defaults(func=cmd_series)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
