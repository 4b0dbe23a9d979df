"""The ``.lsa`` text format for superalgebra laws.

A file is line oriented::

    # comments run to end of line
    dims 3 2
    even X0 X1 X2
    odd Y1 Y2
    param alpha
    [X0,X0] = X2
    [X0,Y1] = 1/2 Y2 - alpha Y1
    [Y1,Y1] = (1 + alpha^2) X0

``dims`` comes first.  ``even``/``odd`` are optional and default to
X0..X{n-1} and Y1..Ym.  A coefficient is a product of rationals and declared
parameters (``2 alpha``, ``alpha*beta``, ``alpha^2``) or a parenthesized sum
of such products.  Products that are not listed are zero.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .algebra import SuperAlgebra
from .errors import AlgebraError

# A monomial is a sorted tuple of parameter names (repeated for powers).
Monomial = tuple[str, ...]
Poly = dict[Monomial, Fraction]


class ParseError(AlgebraError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class BindingError(AlgebraError):
    pass


@dataclass(frozen=True)
class Definition:
    n: int
    m: int
    even_labels: tuple[str, ...]
    odd_labels: tuple[str, ...]
    params: tuple[str, ...] = ()
    # (left, right) -> {result label: coefficient polynomial}
    products: dict[tuple[str, str], dict[str, Poly]] = field(default_factory=dict)

    @property
    def labels(self) -> tuple[str, ...]:
        return self.even_labels + self.odd_labels

    def parity(self, label: str) -> int:
        return 0 if label in self.even_labels else 1


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<sym>[\[\],=+\-*^()]))")


@dataclass
class _Tok:
    kind: str
    text: str
    col: int


def _tokenize(body: str, lineno: int) -> list[_Tok]:
    toks, pos = [], 0
    while pos < len(body):
        if body[pos:].strip() == "":
            break
        mt = _TOKEN.match(body, pos)
        if mt is None or mt.end() == pos:
            col = pos + len(body[pos:]) - len(body[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {body[col - 1]!r}", lineno, col)
        kind = mt.lastgroup
        toks.append(_Tok(kind, mt.group(kind), mt.start(kind) + 1))
        pos = mt.end()
    return toks


def _poly_add(acc: Poly, other: Poly, scale: Fraction = Fraction(1)) -> None:
    for mono, c in other.items():
        v = acc.get(mono, Fraction(0)) + scale * c
        if v:
            acc[mono] = v
        else:
            acc.pop(mono, None)


def _poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            _poly_add(out, {tuple(sorted(ma + mb)): ca * cb})
    return out


class _LineParser:
    def __init__(self, toks: list[_Tok], lineno: int, end_col: int, params: set[str], labels: set[str]):
        self.toks, self.i, self.lineno, self.end_col = toks, 0, lineno, end_col
        self.params, self.labels = params, labels

    def peek(self) -> _Tok | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def error(self, msg: str, tok: _Tok | None = None) -> ParseError:
        tok = tok or self.peek()
        return ParseError(msg, self.lineno, tok.col if tok else self.end_col)

    def take(self, text: str | None = None, kind: str | None = None) -> _Tok:
        t = self.peek()
        if t is None or (text is not None and t.text != text) or (kind is not None and t.kind != kind):
            want = repr(text) if text else kind
            raise self.error(f"expected {want}" + (f", found {t.text!r}" if t else ", found end of line"))
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        t = self.peek()
        return t is not None and t.kind == "sym" and t.text == text

    def name_is_label(self) -> bool:
        t = self.peek()
        return t is not None and t.kind == "name" and t.text in self.labels

    # coefficient := factor ('*'? factor)*, stopping before a label
    def coefficient(self) -> Poly | None:
        poly: Poly | None = None
        while True:
            t = self.peek()
            if t is None or self.name_is_label():
                return poly
            if t.kind == "num":
                f: Poly = {(): Fraction(t.text)}
                self.i += 1
            elif t.kind == "name":
                if t.text not in self.params:
                    raise self.error(f"undeclared parameter or unknown label {t.text!r}", t)
                self.i += 1
                f = {(t.text,): Fraction(1)}
                if self.at("^"):
                    self.i += 1
                    k = int(self.take(kind="num").text.split("/")[0])
                    f = {(t.text,) * k: Fraction(1)}
            elif self.at("("):
                self.i += 1
                f = self.sum_of_coefficients()
                self.take(")")
            else:
                return poly
            poly = f if poly is None else _poly_mul(poly, f)
            if self.at("*"):
                self.i += 1

    def sum_of_coefficients(self) -> Poly:
        acc: Poly = {}
        sign = Fraction(1)
        if self.at("-") or self.at("+"):
            sign = Fraction(-1) if self.take().text == "-" else sign
        while True:
            c = self.coefficient()
            if c is None:
                raise self.error("expected a coefficient")
            _poly_add(acc, c, sign)
            if self.at("-") or self.at("+"):
                sign = Fraction(-1) if self.take().text == "-" else Fraction(1)
                continue
            return acc

    # rhs := '0' | ['+'|'-'] term (('+'|'-') term)*
    def rhs(self) -> dict[str, Poly]:
        t = self.peek()
        if t is not None and t.kind == "num" and t.text == "0" and self.i == len(self.toks) - 1:
            self.i += 1
            return {}
        out: dict[str, Poly] = {}
        sign = Fraction(1)
        if self.at("-") or self.at("+"):
            sign = Fraction(-1) if self.take().text == "-" else sign
        while True:
            start = self.peek()
            coef = self.coefficient()
            if not self.name_is_label():
                raise self.error("expected a basis label", self.peek() or start)
            lab = self.take(kind="name").text
            acc = out.setdefault(lab, {})
            _poly_add(acc, coef if coef is not None else {(): Fraction(1)}, sign)
            if not acc:
                del out[lab]
            if self.peek() is None:
                return out
            if self.at("-") or self.at("+"):
                sign = Fraction(-1) if self.take().text == "-" else Fraction(1)
                continue
            raise self.error(f"unexpected {self.peek().text!r}")


def parse(text: str) -> Definition:
    """Parse ``.lsa`` text into a Definition.  Errors carry a line and column."""
    dims: tuple[int, int] | None = None
    even: tuple[str, ...] | None = None
    odd: tuple[str, ...] | None = None
    params: list[str] = []
    products: dict[tuple[str, str], dict[str, Poly]] = {}

    def labels_fixed() -> tuple[tuple[str, ...], tuple[str, ...]]:
        nonlocal even, odd
        if even is None:
            even = tuple(f"X{i}" for i in range(dims[0]))
        if odd is None:
            odd = tuple(f"Y{j}" for j in range(1, dims[1] + 1))
        return even, odd

    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].rstrip()
        toks = _tokenize(body, lineno)
        if not toks:
            continue
        head = toks[0]
        end_col = len(body) + 1
        if head.kind == "name" and head.text in ("dims", "even", "odd", "param"):
            rest = toks[1:]
            if head.text == "dims":
                if dims is not None:
                    raise ParseError("dims declared twice", lineno, head.col)
                if len(rest) != 2 or any(t.kind != "num" or "/" in t.text for t in rest):
                    raise ParseError("dims takes two nonnegative integers", lineno,
                                     rest[0].col if rest else end_col)
                dims = (int(rest[0].text), int(rest[1].text))
                continue
            if dims is None:
                raise ParseError(f"{head.text} before dims", lineno, head.col)
            for t in rest:
                if t.kind != "name":
                    raise ParseError(f"expected a name, found {t.text!r}", lineno, t.col)
            names = [t.text for t in rest]
            if products and head.text != "param":
                raise ParseError(f"{head.text} after the first product", lineno, head.col)
            if head.text == "param":
                taken = set(params) | set(labels_fixed()[0]) | set(labels_fixed()[1])
                for t in rest:
                    if t.text in taken:
                        raise ParseError(f"duplicate name {t.text!r}", lineno, t.col)
                    taken.add(t.text)
                    params.append(t.text)
                continue
            want = dims[0] if head.text == "even" else dims[1]
            if (head.text == "even" and even is not None) or (head.text == "odd" and odd is not None):
                raise ParseError(f"{head.text} declared twice", lineno, head.col)
            if len(names) != want:
                raise ParseError(f"{head.text} lists {len(names)} labels but dims require {want}", lineno, head.col)
            other = (odd or ()) if head.text == "even" else (even or ())
            seen = set(other) | set(params)
            for t in rest:
                if t.text in seen:
                    raise ParseError(f"duplicate label {t.text!r}", lineno, t.col)
                seen.add(t.text)
            if head.text == "even":
                even = tuple(names)
            else:
                odd = tuple(names)
            continue
        if dims is None:
            raise ParseError("expected dims before products", lineno, head.col)
        ev, od = labels_fixed()
        label_set = set(ev) | set(od)
        p = _LineParser(toks, lineno, end_col, set(params), label_set)
        p.take("[")
        a = p.take(kind="name")
        p.take(",")
        b = p.take(kind="name")
        p.take("]")
        for t in (a, b):
            if t.text not in label_set:
                raise ParseError(f"unknown label {t.text!r}", lineno, t.col)
        p.take("=")
        key = (a.text, b.text)
        if key in products:
            raise ParseError(f"duplicate product [{a.text},{b.text}]", lineno, head.col)
        rhs = p.rhs()
        par = (a.text in od) ^ (b.text in od)
        for lab in rhs:
            if (lab in od) != par:
                raise ParseError(
                    f"grading violation in [{a.text},{b.text}] = ... {lab}: parity "
                    f"{int(a.text in od)}+{int(b.text in od)} != {int(lab in od)}", lineno, head.col)
        products[key] = rhs
    if dims is None:
        raise ParseError("missing dims", max(1, len(text.splitlines())), 1)
    ev, od = labels_fixed()
    return Definition(dims[0], dims[1], ev, od, tuple(params), products)


def _check_bindings(d: Definition, bindings: Mapping[str, object]) -> dict[str, Fraction]:
    extra = sorted(set(bindings) - set(d.params))
    if extra:
        raise BindingError(f"binding for undeclared parameter(s): {', '.join(extra)}")
    missing = [p for p in d.params if p not in bindings]
    if missing:
        raise BindingError(f"unbound parameter(s): {', '.join(missing)}")
    return {k: Fraction(v) for k, v in bindings.items()}


def _eval(poly: Poly, vals: Mapping[str, Fraction]) -> Fraction:
    total = Fraction(0)
    for mono, c in poly.items():
        for name in mono:
            c *= vals[name]
        total += c
    return total


def instantiate(d: Definition, bindings: Mapping[str, object] | None = None) -> SuperAlgebra:
    vals = _check_bindings(d, bindings or {})
    idx = {lab: i for i, lab in enumerate(d.labels)}
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (a, b), rhs in d.products.items():
        vec = {idx[lab]: _eval(poly, vals) for lab, poly in rhs.items()}
        vec = {k: c for k, c in vec.items() if c}
        if vec:
            table[(idx[a], idx[b])] = vec
    return SuperAlgebra(d.n, d.m, table, d.even_labels, d.odd_labels)


def loads(text: str, bindings: Mapping[str, object] | None = None) -> SuperAlgebra:
    return instantiate(parse(text), bindings)


def load(path, bindings: Mapping[str, object] | None = None) -> SuperAlgebra:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), bindings)


# ---------------------------------------------------------------------------
# canonical output
# ---------------------------------------------------------------------------


def _mono_text(mono: Monomial) -> str:
    parts = []
    for name in dict.fromkeys(mono):
        k = mono.count(name)
        parts.append(name if k == 1 else f"{name}^{k}")
    return " ".join(parts)


def _poly_terms(poly: Poly) -> list[tuple[Fraction, str]]:
    """(coefficient, monomial text) in degree-then-name order."""
    keys = sorted(poly, key=lambda mo: (len(mo), mo))
    return [(poly[k], _mono_text(k)) for k in keys]


def _join(terms: list[tuple[Fraction, str]]) -> str:
    out = []
    for c, tail in terms:
        mag = abs(c)
        if not tail:
            body = str(mag)
        else:
            body = tail if mag == 1 else f"{mag} {tail}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f" {'-' if c < 0 else '+'} {body}")
    return "".join(out)


def _header(n, m, even, odd, params=()) -> list[str]:
    lines = [f"dims {n} {m}", " ".join(("even",) + tuple(even)), " ".join(("odd",) + tuple(odd))]
    if params:
        lines.append(" ".join(("param",) + tuple(params)))
    return lines


def serialize(A: SuperAlgebra) -> str:
    """Canonical text: products in basis order of (left, right), results in basis order."""
    lines = _header(A.n, A.m, A.even_labels, A.odd_labels)
    lab = A.labels
    for (i, j) in sorted(A.table):
        vec = A.table[(i, j)]
        rhs = _join([(vec[k], lab[k]) for k in sorted(vec)])
        lines.append(f"[{lab[i]},{lab[j]}] = {rhs}")
    return "\n".join(lines) + "\n"


def serialize_definition(d: Definition) -> str:
    """Canonical text for a parametric definition (same ordering as ``serialize``)."""
    lines = _header(d.n, d.m, d.even_labels, d.odd_labels, d.params)
    idx = {lab: i for i, lab in enumerate(d.labels)}
    for key in sorted(d.products, key=lambda k: (idx[k[0]], idx[k[1]])):
        rhs = d.products[key]
        terms = []
        for lab in sorted(rhs, key=idx.__getitem__):
            pt = _poly_terms(rhs[lab])
            if len(pt) == 1:
                c, tail = pt[0]
                terms.append((c, f"{tail} {lab}" if tail else lab))
            else:
                terms.append((Fraction(1), f"({_join(pt)}) {lab}"))
        if terms:
            lines.append(f"[{key[0]},{key[1]}] = {_join(terms)}")
    return "\n".join(lines) + "\n"
