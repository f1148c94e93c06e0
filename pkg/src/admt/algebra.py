"""Elements of a quotient algebra A = k<x>/a and of A (x) A^op.

Elements are stored as finite sums over standard monomials, so two elements
are equal iff their term dictionaries agree.
"""

from __future__ import annotations

from .groebner import ReductionSystem
from .scalars import NotAUnit, format_scalar


class QuotientAlgebra:
    """A = k[x]/a (or the word version) with multiplication through normal forms."""

    def __init__(self, R: ReductionSystem):
        self.R = R
        self.ring = R.ring
        self.field = R.ring.field
        self._mul = {}
        self.one_monomial = R.ring.one()

    @property
    def commutative(self) -> bool:
        return self.ring.commutative

    def mul_monomials(self, u, v) -> dict:
        key = (u, v)
        hit = self._mul.get(key)
        if hit is None:
            if u.is_one():
                hit = {v: self.field.one}
            elif v.is_one():
                hit = {u: self.field.one}
            else:
                hit = self.R.nf_monomial(u.mul(v))
            self._mul[key] = hit
        return hit

    def element(self, terms) -> "AElem":
        return AElem(self, dict(terms))

    def monomial(self, m, c=1) -> "AElem":
        if not self.R.is_standard(m):
            return AElem(self, {k: v * self.field(c) for k, v in self.R.nf_monomial(m).items()})
        return AElem(self, {m: self.field(c)})

    def scalar(self, c) -> "AElem":
        return AElem(self, {self.one_monomial: self.field(c)})

    def zero(self) -> "AElem":
        return AElem(self, {})

    def one(self) -> "AElem":
        return self.scalar(1)

    def from_polynomial(self, p) -> "AElem":
        return AElem(self, self.R.nf_terms(p.terms))

    def multidegree(self, m) -> tuple:
        return self.ring.multidegree(m)

    def format_monomial(self, m) -> str:
        return self.ring.format_monomial(m)


def _add_into(acc: dict, m, c):
    v = acc.get(m)
    if v is None:
        acc[m] = c
    else:
        v = v + c
        if v:
            acc[m] = v
        else:
            del acc[m]


def _format_terms(items, fmt) -> str:
    parts = []
    for m, c in items:
        neg = _negative(c)
        mag = -c if neg else c
        mono = fmt(m)
        if mono == "1":
            body = format_scalar(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_scalar(mag)}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) or "0"


def _negative(c) -> bool:
    if hasattr(c, "p"):
        return False
    return c < 0


class AElem:
    """Element of A: dict from standard monomials to nonzero scalars."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: QuotientAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    def _lift(self, other):
        if isinstance(other, AElem):
            return other
        return self.alg.scalar(other) if other else self.alg.zero()

    def __add__(self, other):
        other = self._lift(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(acc, m, c)
        return AElem(self.alg, acc)

    __radd__ = __add__

    def __neg__(self):
        return AElem(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, AElem):
            s = self.alg.field(other)
            if not s:
                return self.alg.zero()
            return AElem(self.alg, {m: c * s for m, c in self.terms.items()})
        acc = {}
        mul = self.alg.mul_monomials
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for m, d in mul(m1, m2).items():
                    _add_into(acc, m, c * d)
        return AElem(self.alg, acc)

    def __rmul__(self, other):
        # scalars commute with everything
        return self.__mul__(other)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, AElem):
            return self.terms == other.terms
        return self.terms == self._lift(other).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def constant_term(self):
        return self.terms.get(self.alg.one_monomial, self.alg.field.zero)

    def is_unit(self) -> bool:
        return len(self.terms) == 1 and bool(self.constant_term())

    def unit_inverse(self) -> "AElem":
        if not self.is_unit():
            raise NotAUnit(f"{self} is not a nonzero constant")
        return self.alg.scalar(1 / self.constant_term())

    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=-1)

    def sorted_terms(self):
        key = self.alg.ring.key
        return sorted(self.terms.items(), key=lambda mc: key(mc[0]), reverse=True)

    def __str__(self):
        return _format_terms(self.sorted_terms(), self.alg.format_monomial)

    def __repr__(self):
        return f"AElem({self})"


class EnvelopingAlgebra:
    """A (x) A^op: pairs of standard monomials, (a(x)b)(c(x)d) = ac (x) db."""

    def __init__(self, alg: QuotientAlgebra):
        self.alg = alg
        self.field = alg.field
        self.one_pair = (alg.one_monomial, alg.one_monomial)

    def pure(self, left=None, right=None, c=1) -> "BiElem":
        one = self.alg.one_monomial
        left = one if left is None else left
        right = one if right is None else right
        out = {}
        s = self.field(c)
        for u, a in self.alg.monomial(left).terms.items():
            for v, b in self.alg.monomial(right).terms.items():
                _add_into(out, (u, v), a * b * s)
        return BiElem(self, out)

    def scalar(self, c) -> "BiElem":
        s = self.field(c)
        return BiElem(self, {self.one_pair: s} if s else {})

    def zero(self) -> "BiElem":
        return BiElem(self, {})

    def one(self) -> "BiElem":
        return self.scalar(1)

    def from_pairs(self, left: AElem, right: AElem) -> "BiElem":
        out = {}
        for u, a in left.terms.items():
            for v, b in right.terms.items():
                _add_into(out, (u, v), a * b)
        return BiElem(self, out)


class BiElem:
    """Element of A (x) A^op as a dict from (left, right) standard monomial pairs."""

    __slots__ = ("env", "terms")

    def __init__(self, env: EnvelopingAlgebra, terms: dict):
        self.env = env
        self.terms = terms

    def _lift(self, other):
        if isinstance(other, BiElem):
            return other
        return self.env.scalar(other) if other else self.env.zero()

    def __add__(self, other):
        other = self._lift(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(acc, m, c)
        return BiElem(self.env, acc)

    __radd__ = __add__

    def __neg__(self):
        return BiElem(self.env, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, BiElem):
            s = self.env.field(other)
            if not s:
                return self.env.zero()
            return BiElem(self.env, {m: c * s for m, c in self.terms.items()})
        mul = self.env.alg.mul_monomials
        acc = {}
        for (a, b), c1 in self.terms.items():
            for (c, d), c2 in other.terms.items():
                coef = c1 * c2
                lefts = mul(a, c)
                rights = mul(d, b)
                for u, x in lefts.items():
                    for v, y in rights.items():
                        _add_into(acc, (u, v), coef * x * y)
        return BiElem(self.env, acc)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, BiElem):
            return self.terms == other.terms
        return self.terms == self._lift(other).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def constant_term(self):
        return self.terms.get(self.env.one_pair, self.env.field.zero)

    def is_unit(self) -> bool:
        return len(self.terms) == 1 and bool(self.constant_term())

    def unit_inverse(self) -> "BiElem":
        if not self.is_unit():
            raise NotAUnit(f"{self} is not a nonzero constant")
        return self.env.scalar(1 / self.constant_term())

    def sorted_terms(self):
        key = self.env.alg.ring.key
        return sorted(self.terms.items(), key=lambda mc: (key(mc[0][0]), key(mc[0][1])), reverse=True)

    def __str__(self):
        fmt = self.env.alg.format_monomial
        parts = []
        for (u, v), c in self.sorted_terms():
            neg = _negative(c)
            mag = -c if neg else c
            body = f"({fmt(u)} ⊗ {fmt(v)})"
            if mag != 1:
                body = f"{format_scalar(mag)}*{body}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts) or "0"

    def __repr__(self):
        return f"BiElem({self})"
