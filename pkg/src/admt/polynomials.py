"""Polynomials over Q or F_p in commuting or non-commuting variables."""

from __future__ import annotations

from .monomials import ContextMismatch, Exponents, MonomialOrder, Word
from .scalars import Field, format_scalar


class PolyRing:
    """Ring context: variable names, commutativity, coefficient field, order."""

    def __init__(self, names, commutative: bool = True, field: Field | None = None,
                 order: MonomialOrder | None = None):
        names = list(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        self.names = tuple(names)
        self.n = len(names)
        self.commutative = commutative
        self.field = field or Field()
        self.order = order or MonomialOrder()
        if not commutative and self.order.kind != "deglex":
            raise ContextMismatch("degree-revlex is only defined for commutative rings")
        for extra in (self.order.weights, self.order.precedence):
            if extra is not None and len(extra) != self.n:
                raise ValueError("order data must have one entry per variable")

    # monomials
    def one(self):
        return Exponents.one(self.n) if self.commutative else Word(())

    def var_monomial(self, i: int):
        return Exponents.var(i, self.n) if self.commutative else Word((i,))

    def monomial(self, data):
        if self.commutative:
            m = Exponents(data)
            if len(m) != self.n:
                raise ContextMismatch("wrong number of exponents")
            return m
        return Word(data)

    def key(self, m):
        return self.order.key(m)

    def multidegree(self, m) -> tuple:
        return m.multidegree(self.n)

    def format_monomial(self, m) -> str:
        if m.is_one():
            return "1"
        if self.commutative:
            parts = []
            for name, a in zip(self.names, m):
                if a == 1:
                    parts.append(name)
                elif a > 1:
                    parts.append(f"{name}^{a}")
            return "*".join(parts)
        # run-length compress words: x y y x -> x*y^2*x
        parts = []
        i = 0
        while i < len(m):
            j = i
            while j < len(m) and m[j] == m[i]:
                j += 1
            name = self.names[m[i]]
            parts.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "*".join(parts)

    def compact_word(self, m) -> str:
        """Concatenated letter names, used for cell labels (e.g. ``adad``)."""
        if self.commutative:
            return self.format_monomial(m)
        return "".join(self.names[a] for a in m) or "1"

    # polynomials
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {self.one(): self.field(c)})

    def gen(self, i: int) -> "Polynomial":
        return Polynomial(self, {self.var_monomial(i): self.field.one})

    def gens(self):
        return [self.gen(i) for i in range(self.n)]

    def from_terms(self, terms) -> "Polynomial":
        acc = {}
        for m, c in terms:
            m = self.monomial(m) if not isinstance(m, (Exponents, Word)) else m
            acc[m] = acc.get(m, self.field.zero) + self.field(c)
        return Polynomial(self, acc)

    def parse(self, text: str) -> "Polynomial":
        from .parsing import parse_polynomial
        return parse_polynomial(text, self)

    def describe(self) -> str:
        brackets = "[{}]" if self.commutative else "<{}>"
        return f"{self.field}" + brackets.format(",".join(self.names))

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.names == other.names
                and self.commutative == other.commutative and self.field == other.field
                and self.order == other.order)

    def __hash__(self):
        return hash((self.names, self.commutative, self.field, self.order))

    def __repr__(self):
        return f"PolyRing({self.describe()}, {self.order.describe()})"


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps monomials to nonzero scalars."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c}

    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ContextMismatch("polynomials from different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return Polynomial(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._check(other)
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.mul(m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial(self.ring, acc)

    def __rmul__(self, other):
        if isinstance(other, Polynomial):
            return other.__mul__(self)
        return self.scale(other)

    def __pow__(self, k: int):
        out = self.ring.const(1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, s) -> "Polynomial":
        s = self.ring.field(s)
        return Polynomial(self.ring, {m: c * s for m, c in self.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        if not self.terms:
            return not other
        return self.terms == self.ring.const(other).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def monomials(self):
        """Monomials in decreasing order."""
        return sorted(self.terms, key=self.ring.key, reverse=True)

    def leading_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=self.ring.key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def monic(self) -> "Polynomial":
        return self.scale(1 / self.leading_coefficient()) if self.terms else self

    def tail(self) -> "Polynomial":
        lm = self.leading_monomial()
        return Polynomial(self.ring, {m: c for m, c in self.terms.items() if m != lm})

    @property
    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self.terms}) <= 1

    def constant_term(self):
        return self.terms.get(self.ring.one(), self.ring.field.zero)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for m in self.monomials():
            c = self.terms[m]
            neg = _is_negative(c)
            mag = -c if neg else c
            mono = self.ring.format_monomial(m)
            if m.is_one():
                body = format_scalar(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_scalar(mag)}*{mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({self})"


def _is_negative(c) -> bool:
    try:
        return c < 0 if not hasattr(c, "p") else False
    except TypeError:
        return False
