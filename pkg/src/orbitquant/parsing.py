"""Expression and algebra-config parsing.

Grammar (``^`` binds tightest, exponents are nonnegative integers)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | NAME | 'h' | '(' expr ')'

Division is only allowed by nonzero rational constants, so ``1/4*xH^2``
and ``xH/2`` parse but ``1/xH`` does not.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

import yaml

from .lie import LieAlgebraError, builtin, make_algebra, BUILTINS
from .poly import Poly
from .scalars import HPoly, to_rational
from .uh import UhElement, generator

__all__ = [
    "ExpressionSyntaxError",
    "UnknownIdentifier",
    "FormatError",
    "parse_expression",
    "parse_uh_expression",
    "parse_hpoly",
    "load_algebra",
    "algebra_from_config",
]


class ExpressionSyntaxError(ValueError):
    def __init__(self, src, pos, expected):
        self.src, self.pos, self.expected = src, pos, tuple(expected)
        found = repr(src[pos]) if pos < len(src) else "end of input"
        super().__init__(f"at position {pos}: expected {' or '.join(self.expected)}, found {found}")


class UnknownIdentifier(ValueError):
    def __init__(self, name, pos):
        self.name, self.pos = name, pos
        super().__init__(f"unknown identifier {name!r} at position {pos}")


class FormatError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(src):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1):
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2):
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3):
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src, ring):
        self.src = src
        self.ring = ring
        self.tokens = _tokenize(src)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def fail(self, *expected):
        raise ExpressionSyntaxError(self.src, self.tok[2], expected)

    def accept(self, op):
        if self.tok[0] == "op" and self.tok[1] == op:
            self.i += 1
            return True
        return False

    def parse(self):
        if self.tok[0] == "end":
            self.fail("an expression")
        value = self.expr()
        if self.tok[0] != "end":
            self.fail("an operator", "end of input")
        return value

    def expr(self):
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            if self.accept("*"):
                value = value * self.unary()
            elif self.tok[0] == "op" and self.tok[1] == "/":
                pos = self.tok[2]
                self.i += 1
                divisor = self.ring.scalar(self.unary())
                if divisor is None or divisor == 0:
                    raise ExpressionSyntaxError(self.src, pos + 1, ["a nonzero rational constant divisor"])
                value = value * (1 / divisor)
            else:
                return value

    def unary(self):
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.accept("^"):
            if self.tok[0] != "int":
                self.fail("a nonnegative integer exponent")
            k = int(self.tok[1])
            self.i += 1
            return base**k
        return base

    def atom(self):
        kind, text, pos = self.tok
        if kind == "int":
            self.i += 1
            return self.ring.const(Fraction(int(text)))
        if kind == "name":
            self.i += 1
            if text == "h":
                return self.ring.h()
            return self.ring.var(text, pos)
        if self.accept("("):
            value = self.expr()
            if not self.accept(")"):
                self.fail("')'")
            return value
        self.fail("a number", "an identifier", "'('")


class _PolyRing:
    def __init__(self, names):
        self.names = tuple(names)
        self.n = len(self.names)

    def const(self, q):
        return Poly.const(self.n, q)

    def h(self):
        return Poly.const(self.n, HPoly.h())

    def var(self, name, pos):
        if name not in self.names:
            raise UnknownIdentifier(name, pos)
        return Poly.var(self.n, self.names.index(name))

    def scalar(self, value):
        if value.degree <= 0 and value.is_h_free():
            return value.coeff((0,) * self.n).constant()
        return None


class _UhRing:
    def __init__(self, L):
        self.L = L

    def const(self, q):
        return UhElement.one(self.L) * q

    def h(self):
        return UhElement.one(self.L) * HPoly.h()

    def var(self, name, pos):
        if name in self.L.generators or name in self.L.names:
            return generator(self.L, self.L.index(name))
        raise UnknownIdentifier(name, pos)

    def scalar(self, value):
        if value.degree <= 0:
            c = value.coeff(())
            if c.is_constant():
                return c.constant()
        return None


class _HRing:
    def const(self, q):
        return HPoly.const(q)

    def h(self):
        return HPoly.h()

    def var(self, name, pos):
        raise UnknownIdentifier(name, pos)

    def scalar(self, value):
        return value.constant() if value.is_constant() else None


def parse_expression(src: str, L) -> Poly:
    """Commutative polynomial over the coordinate names of ``L`` (``L.names``)."""
    return _Parser(src, _PolyRing(L.names)).parse()


def parse_uh_expression(src: str, L) -> UhElement:
    """Noncommutative expression in the generators of ``L``, brought to PBW normal form."""
    return _Parser(src, _UhRing(L)).parse()


def parse_hpoly(src: str) -> HPoly:
    """Polynomial in ``h`` alone, e.g. ``3/4 + 1/2*h``."""
    return _Parser(src, _HRing()).parse()


# -- algebra configs --


def _load_mapping(path: Path):
    text = path.read_text()
    try:
        if path.suffix == ".json":
            data = json.loads(text)
        else:
            data = yaml.safe_load(text)
    except (json.JSONDecodeError, yaml.YAMLError) as exc:
        raise FormatError(f"{path}: cannot parse: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError(f"{path}: top level must be a mapping")
    return data


def algebra_from_config(data: dict, where: str = "<config>"):
    """Build a LieAlgebra from a decoded config mapping.

    Basis references in ``brackets`` are 1-based integers or coordinate names.
    """

    def err(field, msg, cause=None):
        exc = FormatError(f"{where}: {field}: {msg}")
        if cause is not None:
            raise exc from cause
        raise exc

    unknown = set(data) - {"dim", "names", "rank", "brackets", "invariants", "generators"}
    if unknown:
        err(sorted(unknown)[0], "unknown field")
    for key in ("dim", "names", "rank", "brackets"):
        if key not in data:
            err(key, "missing required field")
    names = data["names"]
    if not isinstance(names, list) or not all(isinstance(s, str) for s in names):
        err("names", "must be a list of strings")
    if data["dim"] != len(names):
        err("dim", f"{data['dim']} does not match {len(names)} names")

    def ref(x, field):
        if isinstance(x, bool):
            err(field, f"bad basis reference {x!r}")
        if isinstance(x, int):
            if not 1 <= x <= len(names):
                err(field, f"index {x} outside 1..{len(names)}")
            return x - 1
        if isinstance(x, str) and x in names:
            return names.index(x)
        err(field, f"bad basis reference {x!r}")

    table = {}
    if not isinstance(data["brackets"], list):
        err("brackets", "must be a list of records")
    for n, rec in enumerate(data["brackets"]):
        field = f"brackets[{n}]"
        if not isinstance(rec, dict) or set(rec) != {"i", "j", "coeffs"}:
            err(field, "record must have exactly the keys i, j, coeffs")
        i, j = ref(rec["i"], field + ".i"), ref(rec["j"], field + ".j")
        if i >= j:
            err(field, "brackets are given for i < j only")
        if (i, j) in table:
            err(field, "duplicate bracket")
        coeffs = {}
        if not isinstance(rec["coeffs"], dict):
            err(field + ".coeffs", "must be a mapping")
        for k, c in rec["coeffs"].items():
            if isinstance(k, str) and k.isdigit():
                k = int(k)
            try:
                coeffs[ref(k, field + ".coeffs")] = to_rational(c)
            except (TypeError, ValueError) as exc:
                err(field + ".coeffs", str(exc), exc)
        table[(i, j)] = coeffs
    invariants = None
    if data.get("invariants") is not None:
        srcs = data["invariants"]
        if not isinstance(srcs, list) or not all(isinstance(s, str) for s in srcs):
            err("invariants", "must be a list of expression strings")

        def _parser(src, n):
            def build(L):
                try:
                    return parse_expression(src, L)
                except ValueError as exc:
                    err(f"invariants[{n}]", str(exc), exc)
            return build

        invariants = [_parser(s, n) for n, s in enumerate(srcs)]
    try:
        return make_algebra(
            names, table, rank=data["rank"], invariants=invariants,
            generators=data.get("generators"), label=where,
        )
    except LieAlgebraError as exc:
        err("brackets", f"{type(exc).__name__}: {exc}", exc)


def load_algebra(spec: str):
    """Built-in algebra by name (``sl2``, ``so3``, ``sl3``) or a config file path."""
    if spec in BUILTINS:
        return builtin(spec)
    path = Path(spec)
    if not path.is_file():
        raise FormatError(f"{spec}: not a built-in algebra ({', '.join(sorted(BUILTINS))}) or a readable file")
    return algebra_from_config(_load_mapping(path), str(path))
