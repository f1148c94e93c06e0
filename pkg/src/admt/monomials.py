"""Commutative and word monomials, and degree-compatible monomial orders."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


class ContextMismatch(TypeError):
    """Raised when commutative and word monomials are mixed."""


class Exponents(tuple):
    """Commutative monomial x^a stored as its exponent vector."""

    __slots__ = ()

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def commutative(self) -> bool:
        return True

    def mul(self, other: "Exponents") -> "Exponents":
        _same_kind(self, other)
        return Exponents(a + b for a, b in zip(self, other))

    def divides(self, other: "Exponents") -> bool:
        return all(a <= b for a, b in zip(self, other))

    def quotient(self, other: "Exponents") -> "Exponents":
        """self / other; ``other`` must divide ``self``."""
        return Exponents(a - b for a, b in zip(self, other))

    def multidegree(self, n: int | None = None) -> tuple:
        return tuple(self)

    def support(self) -> list[int]:
        return [i for i, a in enumerate(self) if a]

    def is_one(self) -> bool:
        return not any(self)

    @classmethod
    def one(cls, n: int) -> "Exponents":
        return cls((0,) * n)

    @classmethod
    def var(cls, i: int, n: int) -> "Exponents":
        return cls(1 if j == i else 0 for j in range(n))

    def __repr__(self):
        return f"Exponents{tuple(self)}"


class Word(tuple):
    """Non-commutative monomial: a sequence of 0-based letter indices."""

    __slots__ = ()

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def commutative(self) -> bool:
        return False

    def mul(self, other: "Word") -> "Word":
        _same_kind(self, other)
        return Word(tuple(self) + tuple(other))

    def divides(self, other: "Word") -> bool:
        """True when ``self`` occurs as a factor (contiguous subword) of ``other``."""
        return find_factor(other, self) >= 0

    def multidegree(self, n: int) -> tuple:
        counts = [0] * n
        for letter in self:
            counts[letter] += 1
        return tuple(counts)

    def is_one(self) -> bool:
        return len(self) == 0

    @classmethod
    def one(cls, n: int | None = None) -> "Word":
        return cls(())

    @classmethod
    def var(cls, i: int, n: int | None = None) -> "Word":
        return cls((i,))

    def __repr__(self):
        return f"Word{tuple(self)}"


def find_factor(word, sub, start: int = 0) -> int:
    """Position of the first occurrence of ``sub`` in ``word`` at or after ``start``."""
    k = len(sub)
    for i in range(start, len(word) - k + 1):
        if word[i:i + k] == sub:
            return i
    return -1


def _same_kind(u, v):
    if type(u) is not type(v):
        raise ContextMismatch(f"cannot combine {type(u).__name__} with {type(v).__name__}")


@dataclass(frozen=True)
class MonomialOrder:
    """Degree-compatible order.

    ``kind`` is ``"deglex"`` or ``"degrevlex"`` (commutative only).  Ties in
    total degree are first broken by an optional integer weight vector and
    then lexicographically, using ``precedence`` (variables listed from
    largest to smallest; default x1 > x2 > ... > xn).  For words the
    lexicographic part reads letters from the left.
    """

    kind: str = "deglex"
    weights: tuple | None = None
    precedence: tuple | None = None

    def __post_init__(self):
        if self.kind not in ("deglex", "degrevlex"):
            raise ValueError(f"unknown order {self.kind!r}")
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if self.precedence is not None:
            prec = tuple(int(i) for i in self.precedence)
            if sorted(prec) != list(range(len(prec))):
                raise ValueError("precedence must be a permutation of the variables")
            object.__setattr__(self, "precedence", prec)
            object.__setattr__(self, "_ranks", {v: r for r, v in enumerate(prec)})

    def rank(self, i: int) -> int:
        """Position of variable i in the precedence list (0 = largest)."""
        if self.precedence is None:
            return i
        return self._ranks[i]

    def _weight(self, m) -> int:
        w = self.weights
        if w is None:
            return 0
        if isinstance(m, Word):
            return sum(w[a] for a in m)
        return sum(a * b for a, b in zip(w, m))

    def key(self, m):
        """Sort key: ``key(u) < key(v)`` iff u precedes v."""
        if isinstance(m, Word):
            if self.kind != "deglex":
                raise ContextMismatch("degree-revlex is only defined for commutative monomials")
            if self.precedence is None:
                lex = tuple(-a for a in m)
            else:
                ranks = self._ranks
                lex = tuple(-ranks[a] for a in m)
            return (len(m), self._weight(m), lex)
        prec = self.precedence or range(len(m))
        if self.kind == "deglex":
            lex = tuple(m[i] for i in prec)
        else:
            lex = tuple(-m[i] for i in reversed(prec))
        return (sum(m), self._weight(m), lex)

    def largest_variable(self, m) -> int:
        """The order-largest variable dividing m; m(w) in the matching rules."""
        letters = set(m) if isinstance(m, Word) else [i for i, a in enumerate(m) if a]
        if not letters:
            raise ValueError("the unit monomial has no variables")
        return min(letters, key=self.rank)

    def describe(self) -> str:
        parts = [self.kind]
        if self.weights is not None:
            parts.append("weights=" + ",".join(map(str, self.weights)))
        if self.precedence is not None:
            parts.append("precedence=" + ",".join(map(str, self.precedence)))
        return " ".join(parts)


def compare(u, v, order: MonomialOrder) -> int:
    """-1, 0 or 1 according to u < v, u = v, u > v."""
    _same_kind(u, v)
    if isinstance(u, Exponents) and len(u) != len(v):
        raise ContextMismatch("exponent vectors of different length")
    ku, kv = order.key(u), order.key(v)
    return (ku > kv) - (ku < kv)


def divisors(w, order: MonomialOrder | None = None) -> list[tuple]:
    """All factorizations (u, v) with uv = w and u != 1, sorted by u.

    For words these are the prefix/suffix splits.
    """
    order = order or MonomialOrder()
    if w.is_one():
        raise ValueError("the unit monomial has no proper factorizations")
    if isinstance(w, Word):
        out = [(Word(w[:k]), Word(w[k:])) for k in range(1, len(w) + 1)]
    else:
        out = []
        for u in product(*(range(a + 1) for a in w)):
            if any(u):
                u = Exponents(u)
                out.append((u, w.quotient(u)))
    out.sort(key=lambda uv: order.key(uv[0]))
    return out


def monomials_of_degree(n: int, degree: int, commutative: bool) -> list:
    """All monomials of the given degree (unsorted enumeration order)."""
    if not commutative:
        return [Word(t) for t in product(range(n), repeat=degree)]
    out = []

    def rec(i, left, acc):
        if i == n - 1:
            out.append(Exponents(acc + [left]))
            return
        for a in range(left, -1, -1):
            rec(i + 1, left - a, acc + [a])

    if n == 0:
        return [Exponents(())] if degree == 0 else []
    rec(0, degree, [])
    return out
