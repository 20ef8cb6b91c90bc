"""Parser for exact polynomial expressions.

Grammar (whitespace-insensitive)::

    expr    := term (('+' | '-') term)*
    term    := factor (('*' factor) | factor)*      juxtaposition multiplies
    factor  := atom ('^' integer)?
    atom    := rational | 'i' | variable | call | '(' expr ')' | '-' atom
    call    := ('Re' | 'Im' | 'conj') '(' expr ')'
    rational:= integer ('/' integer)?
    variable:= ('z' | 'zb' | 's') index

Variables are ``z1..zn`` (complex), ``zb1..zbn`` (their conjugates) and
``s1..sd`` (real).  Both ASCII '-' and the Unicode minus sign are
accepted.  The result is an untruncated :class:`~crjets.series.Series`
with :class:`~crjets.scalars.GQ` coefficients, so downstream recentring
works on exact global data; truncation to the analysis order happens when
the defining jet is built.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .scalars import GQ, I, ONE, conj
from .series import Series


class ParseError(ValueError):
    """Syntax error with a character position."""

    def __init__(self, message, pos):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


_TOKEN = re.compile(r"""
    (?P<num>\d+)
  | (?P<name>[A-Za-z]+\d*)
  | (?P<op>[-+*/^()]|−)
  | (?P<ws>\s+)
""", re.VERBOSE)

_VARNAME = re.compile(r"^(zb|z|s)(\d+)$")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError("unexpected character %r" % text[pos], pos)
        if m.lastgroup != "ws":
            kind = m.lastgroup
            value = m.group()
            if value == "−":
                value = "-"
            tokens.append((kind, value, pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent over the token list; builds Series directly."""

    def __init__(self, tokens, n, d):
        self.tokens = tokens
        self.i = 0
        self.n = n
        self.d = d
        self.m = 2 * n + d

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, value, pos = self.peek()
        if kind != "op" or value != op:
            raise ParseError("expected %r" % op, pos)
        return self.advance()

    # -- series helpers -------------------------------------------------

    def const(self, c):
        return Series.constant(self.m, None, c)

    def var(self, name, pos):
        m = _VARNAME.match(name)
        if m is None:
            raise ParseError("unknown name %r" % name, pos)
        prefix, idx = m.group(1), int(m.group(2))
        if idx < 1:
            raise ParseError("variable indices start at 1", pos)
        if prefix == "z":
            if idx > self.n:
                raise ParseError("z index %d exceeds n = %d" % (idx, self.n),
                                 pos)
            slot = idx - 1
        elif prefix == "zb":
            if idx > self.n:
                raise ParseError("zb index %d exceeds n = %d" % (idx, self.n),
                                 pos)
            slot = self.n + idx - 1
        else:
            if idx > self.d:
                raise ParseError("s index %d exceeds d = %d" % (idx, self.d),
                                 pos)
            slot = 2 * self.n + idx - 1
        return Series.variable(self.m, None, slot)

    # -- grammar --------------------------------------------------------

    def parse(self):
        out = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError("trailing input %r" % value, pos)
        return out

    def expr(self):
        kind, value, _ = self.peek()
        if kind == "op" and value == "-":
            self.advance()
            out = -self.term()
        else:
            out = self.term()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                rhs = self.term()
                out = out + rhs if value == "+" else out - rhs
            else:
                return out

    def term(self):
        out = self.factor()
        while True:
            kind, value, pos = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                out = out * self.factor()
            elif kind == "op" and value == "/":
                self.advance()
                out = out * self._rational_factor()
            elif kind in ("num", "name") or (kind == "op" and value == "("):
                out = out * self.factor()  # juxtaposition
            else:
                return out

    def _rational_factor(self):
        # only constant denominators make sense in a polynomial ring
        kind, value, pos = self.peek()
        if kind != "num":
            raise ParseError("denominator must be an integer", pos)
        self.advance()
        den = int(value)
        if den == 0:
            raise ParseError("division by zero", pos)
        return self.const(GQ(Fraction(1, den)))

    def factor(self):
        out = self.atom()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            kind, value, pos = self.peek()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer", pos)
            self.advance()
            e = int(value)
            acc = self.const(ONE)
            for _ in range(e):
                acc = acc * out
            return acc
        return out

    def atom(self):
        kind, value, pos = self.advance()
        if kind == "op" and value == "-":
            return -self.factor()
        if kind == "num":
            return self.const(GQ(Fraction(int(value))))
        if kind == "op" and value == "(":
            out = self.expr()
            self.expect_op(")")
            return out
        if kind == "name":
            if value == "i":
                return self.const(I)
            if value in ("Re", "Im", "conj"):
                self.expect_op("(")
                inner = self.expr()
                self.expect_op(")")
                return self._apply_call(value, inner)
            return self.var(value, pos)
        raise ParseError("unexpected token %r" % (value or "end of input"),
                         pos)

    def _apply_call(self, name, series):
        conj = _conjugate_series(series, self.n, self.d)
        if name == "conj":
            return conj
        half = GQ(Fraction(1, 2))
        if name == "Re":
            return (series + conj) * half
        minus_half_i = GQ(0, Fraction(-1, 2))
        return (series - conj) * minus_half_i


def _conjugate_series(series, n, d):
    """Formal conjugate: conjugate coefficients, swap z and zb blocks."""
    perm = list(range(2 * n + d))
    for j in range(n):
        perm[j], perm[n + j] = n + j, j
    return series.permute_vars(perm).map_coeffs(conj)


def parse_polynomial(text, n, d):
    """Parse an expression in z1..zn, zb1..zbn, s1..sd into an exact
    untruncated series over the Gaussian rationals."""
    return _Parser(_tokenize(text), n, d).parse()


def parse_constant(text):
    """Parse a variable-free expression into a single GQ value."""
    series = parse_polynomial(text, 0, 0)
    for key, c in series.coeffs.items():
        if any(key):
            raise ParseError("expected a constant, found a variable", 0)
    c = series.constant_term()
    return c if isinstance(c, GQ) else GQ(c)
