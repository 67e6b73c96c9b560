"""Recursive-descent parser and deterministic printer for the
expression grammar.

Grammar (UTF-8, whitespace insignificant):

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := ('+' | '-')* power
    power    := atom ('^' natural)?
    atom     := natural | variable | '(' expr ')'
    variable := 'x' natural      (1-based index)

Exponents are nonnegative integers and bind to the preceding atom or
parenthesized expression.  The printer emits text in the same grammar
that reparses to an equal RationalFunction.
"""

import re
from fractions import Fraction

from gkzrational.errors import DomainError, ParseError
from gkzrational.laurent import LaurentPolynomial, RationalFunction

_TOKEN = re.compile(r"\s*(?:(\d+)|(x\d+)|([A-Za-z_]\w*)|([()+\-*/^]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}",
                             len(text) - len(stripped))
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("var", int(m.group(2)[1:]), m.start(2)))
        elif m.group(3) is not None:
            raise ParseError(f"unknown variable name {m.group(3)!r}", m.start(3))
        else:
            tokens.append(("op", m.group(4), m.start(4)))
        pos = m.end()
    return tokens


class _Lazy:
    """Unevaluated product of (RationalFunction, integer power) factors.

    Keeping products lazy until a '+' or the end of parsing means a
    denominator like (x2^2*x3 + x1^2*x4)^3 is recorded as a factor with
    multiplicity 3 instead of being expanded, which is what keeps
    repeated differentiation cheap later."""

    __slots__ = ("sign", "factors")

    def __init__(self, sign=1, factors=()):
        self.sign = sign
        self.factors = list(factors)

    @classmethod
    def of(cls, value):
        return cls(1, [(value, 1)])

    def mul(self, other):
        return _Lazy(self.sign * other.sign, self.factors + other.factors)

    def div(self, other):
        return _Lazy(self.sign * other.sign,
                     self.factors + [(f, -k) for f, k in other.factors])

    def pow(self, n):
        sign = self.sign if n % 2 else 1
        return _Lazy(sign, [(f, k * n) for f, k in self.factors])

    def neg(self):
        return _Lazy(-self.sign, self.factors)

    def realize(self, nvars):
        num = LaurentPolynomial.constant(nvars, self.sign)
        denom = []
        for f, k in self.factors:
            if k == 0:
                continue
            if k < 0:
                f = f.reciprocal()
                k = -k
            num = num * f.numerator ** k
            denom.extend((g, e * k) for g, e in f.denominator)
        return RationalFunction(num, denom)


class _Parser:
    def __init__(self, tokens, nvars, text_len):
        self.tokens = tokens
        self.i = 0
        self.nvars = nvars
        self.text_len = text_len

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.text_len)
        self.i += 1
        return tok

    def expect_op(self, symbol):
        tok = self.next()
        if tok[0] != "op" or tok[1] != symbol:
            raise ParseError(f"expected {symbol!r}", tok[2])

    def parse_expr(self):
        """Lazy when a single term, realized at every '+'/'-'."""
        first = self.parse_term()
        tok = self.peek()
        if not (tok and tok[0] == "op" and tok[1] in "+-"):
            return first
        value = first.realize(self.nvars)
        while True:
            tok = self.peek()
            if tok and tok[0] == "op" and tok[1] in "+-":
                self.i += 1
                rhs = self.parse_term().realize(self.nvars)
                value = value + rhs if tok[1] == "+" else value - rhs
            else:
                return _Lazy.of(value)

    def parse_term(self):
        value = self.parse_factor()
        while True:
            tok = self.peek()
            if tok and tok[0] == "op" and tok[1] in "*/":
                self.i += 1
                rhs = self.parse_factor()
                if tok[1] == "*":
                    value = value.mul(rhs)
                else:
                    if any(f.is_zero() and k > 0 for f, k in rhs.factors):
                        raise ParseError("division by the zero polynomial", tok[2])
                    value = value.div(rhs)
            else:
                return value

    def parse_factor(self):
        sign = 1
        while True:
            tok = self.peek()
            if tok and tok[0] == "op" and tok[1] in "+-":
                self.i += 1
                if tok[1] == "-":
                    sign = -sign
            else:
                break
        value = self.parse_power()
        return value if sign == 1 else value.neg()

    def parse_power(self):
        value = self.parse_atom()
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] == "^":
            self.i += 1
            etok = self.next()
            if etok[0] != "int":
                raise ParseError("exponent must be a nonnegative integer", etok[2])
            value = value.pow(etok[1])
        return value

    def parse_atom(self):
        tok = self.next()
        if tok[0] == "int":
            return _Lazy.of(RationalFunction.constant(self.nvars, tok[1]))
        if tok[0] == "var":
            idx = tok[1]
            if idx < 1 or idx > self.nvars:
                raise ParseError(f"unknown variable name 'x{idx}'", tok[2])
            return _Lazy.of(RationalFunction(LaurentPolynomial.variable(self.nvars, idx - 1)))
        if tok[0] == "op" and tok[1] == "(":
            value = self.parse_expr()
            self.expect_op(")")
            return value
        raise ParseError(f"unexpected token {tok[1]!r}", tok[2])


def parse(text, nvars=None):
    """Parse an expression into an exact RationalFunction.

    When nvars is None the variable count is the largest index that
    occurs (at least 1).
    """
    tokens = _tokenize(text)
    if nvars is None:
        nvars = max((t[1] for t in tokens if t[0] == "var"), default=1)
    parser = _Parser(tokens, nvars, len(text))
    value = parser.parse_expr()
    tok = parser.peek()
    if tok is not None:
        raise ParseError(f"unexpected trailing token {tok[1]!r}", tok[2])
    try:
        return value.realize(nvars)
    except DomainError as exc:
        raise ParseError(str(exc), len(text)) from None


# -- printing ----------------------------------------------------------


def _format_coeff_monomial(exponent, coeff):
    """One term as (sign, body) with body in the grammar."""
    parts = []
    c = coeff if coeff > 0 else -coeff
    sign = "+" if coeff > 0 else "-"
    num, den = c.numerator, c.denominator
    powers = []
    for i, e in enumerate(exponent):
        if e == 0:
            continue
        if e == 1:
            powers.append(f"x{i + 1}")
        elif e > 1:
            powers.append(f"x{i + 1}^{e}")
        else:
            raise ValueError("negative exponent reached the printer")
    if num != 1 or not powers:
        parts.append(str(num))
    parts.extend(powers)
    body = "*".join(parts)
    if den != 1:
        body = f"{body}/{den}"
    return sign, body


def format_polynomial(poly):
    """Canonical text for a polynomial with nonnegative exponents."""
    if poly.is_zero():
        return "0"
    pieces = []
    for idx, (e, c) in enumerate(poly.sorted_terms()):
        sign, body = _format_coeff_monomial(e, c)
        if idx == 0:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


def format_laurent(poly):
    """Canonical text for a Laurent polynomial; negative exponents are
    printed as a trailing monomial division."""
    g = poly.monomial_gcd()
    neg = tuple(min(x, 0) for x in g)
    if not any(neg):
        return format_polynomial(poly)
    shifted = poly.mul_monomial(tuple(-x for x in neg))
    denom_parts = []
    for i, e in enumerate(neg):
        if e < 0:
            denom_parts.append(f"x{i + 1}" if e == -1 else f"x{i + 1}^{-e}")
    num_text = format_polynomial(shifted)
    if len(shifted) > 1:
        num_text = f"({num_text})"
    return f"{num_text}/({'*'.join(denom_parts)})"


def format_rational(f):
    """Deterministic grammar text for a RationalFunction."""
    if f.is_zero():
        return "0"
    if not f.denominator:
        return format_laurent(f.numerator)
    num = f.numerator
    g = num.monomial_gcd()
    neg = tuple(min(x, 0) for x in g)
    monomial_factors = []
    if any(neg):
        num = num.mul_monomial(tuple(-x for x in neg))
        for i, e in enumerate(neg):
            if e < 0:
                monomial_factors.append(f"x{i + 1}" if e == -1 else f"x{i + 1}^{-e}")
    num_text = format_polynomial(num)
    if len(num) > 1 or num.sorted_terms()[0][1] < 0:
        num_text = f"({num_text})"
    den_parts = list(monomial_factors)
    for factor, k in f.denominator:
        text = f"({format_polynomial(factor)})"
        den_parts.append(text if k == 1 else f"{text}^{k}")
    den_text = "*".join(den_parts)
    if len(den_parts) > 1:
        den_text = f"({den_text})"
    return f"{num_text}/{den_text}"


def format_fraction(value):
    """Serialize a Fraction as 'p' or 'p/q' text."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text):
    text = str(text).strip()
    if "/" in text:
        p, q = text.split("/", 1)
        return Fraction(int(p.strip()), int(q.strip()))
    return Fraction(int(text))
