"""Parser for the ASCII polynomial grammar.

Examples: ``x1^2 - 3/2*x2*x3``, ``a c - b b``, ``x y^3 x - x y^4``.
Juxtaposition multiplies; in word rings the factor order is kept.
"""

from __future__ import annotations

import re
from fractions import Fraction

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1, text: str = ""):
        self.message = message
        self.line = line
        self.column = column
        self.text = text
        super().__init__(f"line {line}, column {column}: {message}")


def _tokenize(text: str, ring, line: int):
    names = sorted(ring.names, key=len, reverse=True)
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        start = m.start(m.lastindex)
        num, ident, sym = m.groups()
        if num is not None:
            tokens.append(("num", Fraction(num), start))
        elif ident is not None:
            # split an identifier into ring variables by longest match
            i = 0
            while i < len(ident):
                for name in names:
                    if ident.startswith(name, i):
                        tokens.append(("var", ring.names.index(name), start + i))
                        i += len(name)
                        break
                else:
                    raise ParseError(f"unknown variable in {ident!r}", line, start + i + 1, text)
        else:
            if sym not in "+-*^()":
                raise ParseError(f"unexpected character {sym!r}", line, start + 1, text)
            tokens.append((sym, sym, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring, line):
        self.text = text
        self.ring = ring
        self.line = line
        self.tokens = _tokenize(text, ring, line)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.line, tok[2] + 1, self.text)

    def poly(self):
        ring = self.ring
        result = ring.zero()
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        result = result + self.term().scale(sign)
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            result = result + self.term().scale(sign)
        return result

    def term(self):
        value = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                value = value * self.factor()
            elif kind in ("num", "var", "("):
                value = value * self.factor()
            else:
                return value

    def factor(self):
        tok = self.take()
        kind = tok[0]
        if kind == "num":
            value = self.ring.const(tok[1])
        elif kind == "var":
            value = self.ring.gen(tok[1])
        elif kind == "(":
            value = self.poly()
            if self.take()[0] != ")":
                self.error("expected ')'", self.tokens[self.i - 1])
        else:
            self.error("expected a number, variable or '('", tok)
        if self.peek()[0] == "^":
            self.take()
            exp = self.take()
            if exp[0] != "num" or exp[1].denominator != 1:
                self.error("exponent must be a non-negative integer", exp)
            value = value ** int(exp[1])
        return value


def parse_polynomial(text: str, ring, line: int = 1):
    """Parse one polynomial; raises ParseError with line/column on failure."""
    if not text.strip():
        raise ParseError("empty polynomial", line, 1, text)
    p = _Parser(text, ring, line)
    result = p.poly()
    if p.peek()[0] != "end":
        p.error("unexpected input")
    return result


def parse_generators(text: str, ring) -> list:
    """One polynomial per line (or separated by ';'); '#' starts a comment."""
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        offset = 0
        for chunk in body.split(";"):
            if chunk.strip():
                try:
                    gens.append(parse_polynomial(chunk, ring, lineno))
                except ParseError as exc:
                    raise ParseError(exc.message, lineno, exc.column + offset, raw) from None
            offset += len(chunk) + 1
    return gens
