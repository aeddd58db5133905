"""Text forms for scalars, polynomials, plane maps, and matrices.

One grammar serves every entry point: integer and rational literals
(``3``, ``1/2``), the variables ``x``, ``y``, ``t``, ``z`` (which of them
are legal depends on what is being parsed), ``+ - * ^``, parentheses, and
unary minus.  ``/`` is accepted whenever the divisor is a nonzero
constant, which covers rational literals and function-field scalars such
as ``(z + 1)/(z^2)``.

Canonical printing orders monomials by ascending total degree, then by
ascending power of ``y``, writes every product with an explicit ``*``,
and separates terms with `` + `` / `` - ``.  Every printed form parses
back to an equal value; the round trip is pinned by tests.

>>> from tameplane import QQ
>>> format_poly2(parse_poly2(QQ, "y + x*x + x^2"))
'y + 2*x^2'
"""

from __future__ import annotations

import re

from .linear import PolyMat2
from .poly import Poly1, Poly2
from .ratfunc import RationalFunction, RationalFunctionField
from .scalars import QQ, PrimeField, PrimeFieldElement, _RATIO_TYPES


class ParseError(ValueError):
    """Malformed input text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


# ---------------------------------------------------------------------------
# field names


def field_spec(field) -> str:
    """The flag string that names ``field``; inverse of ``field_from_spec``."""
    if isinstance(field, RationalFunctionField):
        return field_spec(field.base) + "-of-z"
    if isinstance(field, PrimeField):
        return "fp:%d" % field.p
    if field == QQ:
        return "q"
    raise TypeError("unknown field %r" % (field,))


# ---------------------------------------------------------------------------
# tokenizer

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")

_OPS = set("+-*/^(),;")


def _tokenize(text: str) -> list:
    """Produce (kind, value, position) triples; kinds: int, name, op, end."""
    out = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in _OPS:
                raise ParseError("unexpected character %r" % ch, m.start(3))
            out.append(("op", ch, m.start(3)))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


# ---------------------------------------------------------------------------
# evaluator helpers: values are int | scalar | Poly1 | Poly2

def _as_constant(field, v, pos: int):
    """Reduce ``v`` to a field scalar, or complain at ``pos``."""
    if isinstance(v, (Poly1, Poly2)):
        if v.is_constant():
            return v.constant_term() if isinstance(v, Poly2) else v.constant_value()
        raise ParseError("divisor must be constant", pos)
    if isinstance(v, int):
        return field.of(v)
    return v


def _divide(field, a, b, pos: int):
    divisor = _as_constant(field, b, pos)
    if not divisor:
        raise ParseError("division by zero", pos)
    inv = field.one / field.of(divisor) if isinstance(divisor, int) else field.one / divisor
    if isinstance(a, (Poly1, Poly2)):
        return a.scale(inv)
    if isinstance(a, int):
        return field.of(a) * inv
    return a * inv


class _Parser:
    """Recursive descent over a token slice, evaluating as it goes."""

    def __init__(self, field, tokens: list, variables: dict):
        self.field = field
        self.tokens = tokens
        self.variables = variables
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_end(self):
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError("unexpected %r" % (value,), pos)

    def expression(self):
        value = self.term()
        while True:
            kind, op, _pos = self.peek()
            if kind == "op" and op in "+-":
                self.next()
                rhs = self.term()
                value = value + rhs if op == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, op, pos = self.peek()
            if kind == "op" and op == "*":
                self.next()
                value = value * self.factor()
            elif kind == "op" and op == "/":
                self.next()
                value = _divide(self.field, value, self.factor(), pos)
            else:
                return value

    def factor(self):
        kind, op, _pos = self.peek()
        if kind == "op" and op == "-":
            self.next()
            return -self.factor()
        if kind == "op" and op == "+":
            self.next()
            return self.factor()
        return self.power()

    def power(self):
        base = self.atom()
        kind, op, _pos = self.peek()
        if kind == "op" and op == "^":
            self.next()
            kind, value, pos = self.next()
            negative = False
            if kind == "op" and value == "-":
                negative = True
                kind, value, pos = self.next()
            if kind != "int":
                raise ParseError("exponent must be an integer literal", pos)
            if negative:
                raise ParseError("negative exponents are not supported", pos)
            return base ** value
        return base

    def atom(self):
        kind, value, pos = self.next()
        if kind == "int":
            return value
        if kind == "name":
            try:
                return self.variables[value]
            except KeyError:
                raise ParseError("unknown variable %r" % value, pos) from None
        if kind == "op" and value == "(":
            inner = self.expression()
            kind, value, pos = self.next()
            if not (kind == "op" and value == ")"):
                raise ParseError("expected ')'", pos)
            return inner
        raise ParseError("expected a value", pos)


def _split_top_level(tokens: list, separator: str) -> list:
    """Split a token list (with trailing end marker) at depth-0 separators."""
    groups = []
    current = []
    depth = 0
    for tok in tokens[:-1]:
        kind, value, _pos = tok
        if kind == "op" and value == "(":
            depth += 1
        elif kind == "op" and value == ")":
            depth -= 1
        if kind == "op" and value == separator and depth == 0:
            groups.append(current)
            current = []
        else:
            current.append(tok)
    groups.append(current)
    end = tokens[-1]
    return [g + [end] for g in groups]


def _variables_for(field, text: str, names: dict) -> dict:
    table = dict(names)
    if isinstance(field, RationalFunctionField):
        table.setdefault("z", field.gen)
    return table


def _run(field, tokens: list, variables: dict):
    parser = _Parser(field, tokens, variables)
    value = parser.expression()
    parser.expect_end()
    return value


# ---------------------------------------------------------------------------
# public parsers


def parse_scalar(field, text: str):
    """A field element from text; over K(z) the variable z is available."""
    value = _run(field, _tokenize(text), _variables_for(field, text, {}))
    if isinstance(value, (Poly1, Poly2)):
        raise ParseError("expected a scalar", 0)
    return field.of(value) if isinstance(value, int) else value


def parse_poly1(field, text: str, var: str = "t") -> Poly1:
    """A one-variable polynomial in ``var`` with coefficients in ``field``."""
    names = {var: Poly1.gen(field)}
    value = _run(field, _tokenize(text), _variables_for(field, text, names))
    if isinstance(value, Poly2):
        raise ParseError("unexpected two-variable expression", 0)
    if isinstance(value, Poly1):
        return value
    return Poly1.constant(field, field.of(value))


def parse_poly2(field, text: str) -> Poly2:
    """A polynomial in x and y with coefficients in ``field``."""
    names = {"x": Poly2.x(field), "y": Poly2.y(field)}
    value = _run(field, _tokenize(text), _variables_for(field, text, names))
    if isinstance(value, Poly1):
        raise ParseError("unexpected one-variable expression", 0)
    if isinstance(value, Poly2):
        return value
    return Poly2.constant(field, field.of(value))


def parse_auto(field, text: str):
    """A plane map literal: two comma-separated x,y-polynomials."""
    from .automorphisms import PlaneAuto

    tokens = _tokenize(text)
    groups = _split_top_level(tokens, ",")
    if len(groups) != 2:
        raise ParseError("expected exactly two comma-separated components",
                         tokens[-1][2])
    names = {"x": Poly2.x(field), "y": Poly2.y(field)}
    variables = _variables_for(field, text, names)
    components = []
    for group in groups:
        value = _run(field, group, variables)
        if isinstance(value, Poly1):
            raise ParseError("unexpected one-variable expression", 0)
        if not isinstance(value, Poly2):
            value = Poly2.constant(field, field.of(value))
        components.append(value)
    return PlaneAuto(components[0], components[1])


def parse_polymat(field, text: str) -> PolyMat2:
    """A 2x2 matrix of t-polynomials: rows split by ';', entries by ','."""
    tokens = _tokenize(text)
    rows = _split_top_level(tokens, ";")
    if len(rows) != 2:
        raise ParseError("expected two ';'-separated rows", tokens[-1][2])
    names = {"t": Poly1.gen(field)}
    variables = _variables_for(field, text, names)
    entries = []
    for row in rows:
        cells = _split_top_level(row, ",")
        if len(cells) != 2:
            raise ParseError("expected two ','-separated entries per row",
                             row[-1][2])
        for cell in cells:
            value = _run(field, cell, variables)
            if isinstance(value, Poly2):
                raise ParseError("unexpected two-variable expression", 0)
            if not isinstance(value, Poly1):
                value = Poly1.constant(field, field.of(value))
            entries.append(value)
    return PolyMat2(field, entries[0], entries[1], entries[2], entries[3])


# ---------------------------------------------------------------------------
# printers

_PLAIN_LITERAL = re.compile(r"\A\d+(/\d+)?\Z")


def format_scalar(field, value) -> str:
    """Canonical standalone text for a field element."""
    if isinstance(value, RationalFunction):
        num = format_poly1(value.num, "z")
        if value.den.degree() == 0:
            return num
        return "(%s)/(%s)" % (num, format_poly1(value.den, "z"))
    if isinstance(value, PrimeFieldElement):
        return str(value.value)
    return str(value)


def _split_sign(field, value):
    """(is_negative, absolute value); only plain rationals have a canonical sign."""
    if isinstance(value, _RATIO_TYPES):
        return value < 0, -value if value < 0 else value
    return False, value


def _coeff_factor(field, value) -> str:
    """Scalar text usable as the left factor of a '*' product."""
    s = format_scalar(field, value)
    if _PLAIN_LITERAL.match(s) or (s.startswith("(") and s.endswith(")")):
        return s
    return "(%s)" % s


def _join_terms(parts: list) -> str:
    out = []
    for i, (negative, body) in enumerate(parts):
        if i == 0:
            out.append("-" + body if negative else body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


def _term_text(field, coeff, monomial: str):
    negative, magnitude = _split_sign(field, coeff)
    if not monomial:
        return negative, format_scalar(field, magnitude)
    if magnitude == field.one:
        return negative, monomial
    return negative, "%s*%s" % (_coeff_factor(field, magnitude), monomial)


def format_poly1(p: Poly1, var: str = "t") -> str:
    """Canonical text, terms in ascending degree."""
    if p.is_zero():
        return "0"
    parts = []
    for e, c in sorted(p.items()):
        mono = "" if e == 0 else (var if e == 1 else "%s^%d" % (var, e))
        parts.append(_term_text(p.field, c, mono))
    return _join_terms(parts)


def format_poly2(p: Poly2) -> str:
    """Canonical text, ascending total degree, x-powers before y-powers."""
    if p.is_zero():
        return "0"
    parts = []
    for (i, j), c in sorted(p.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][1])):
        pieces = []
        if i:
            pieces.append("x" if i == 1 else "x^%d" % i)
        if j:
            pieces.append("y" if j == 1 else "y^%d" % j)
        parts.append(_term_text(p.field, c, "*".join(pieces)))
    return _join_terms(parts)


def format_auto(auto) -> str:
    """Two comma-separated components, e.g. ``x, y + x^2``."""
    return "%s, %s" % (format_poly2(auto.p), format_poly2(auto.q))


def format_polymat(m: PolyMat2) -> str:
    """Rows joined by ' ; ', entries by ', ', e.g. ``1, 0 ; t, 1``."""
    (a, b), (c, d) = m.rows()
    return "%s, %s ; %s, %s" % (
        format_poly1(a), format_poly1(b), format_poly1(c), format_poly1(d))
