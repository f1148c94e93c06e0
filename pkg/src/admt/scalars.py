"""Exact coefficient fields: the rationals and prime fields F_p."""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering


class NotAUnit(ArithmeticError):
    """Raised when an element without inverse is inverted."""


@total_ordering
class ModP:
    """Element of the prime field F_p."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.p = p
        self.value = value % p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other
        if isinstance(other, int):
            return ModP(other, self.p)
        if isinstance(other, Fraction):
            return ModP(other.numerator, self.p) / ModP(other.denominator, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ModP(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ModP(self.value - other.value, self.p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ModP(other.value - self.value, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ModP(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self):
        if self.value == 0:
            raise NotAUnit(f"0 is not invertible in F_{self.p}")
        return ModP(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return ModP(pow(self.value, k, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __lt__(self, other):
        # only used for deterministic sorting
        return self.value < self._coerce(other).value

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"ModP({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """A coefficient field: ``Field()`` is Q, ``Field(p)`` is F_p."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None and not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @classmethod
    def parse(cls, text: str) -> "Field":
        s = text.strip().replace(" ", "").upper()
        if s in ("Q", "QQ"):
            return cls()
        m = re.fullmatch(r"(?:FP\((\d+)\)|GF\((\d+)\)|F(\d+)|(\d+))", s)
        if not m:
            raise ValueError(f"unknown field {text!r}; use Q, Fp(p) or a prime p")
        return cls(int(next(g for g in m.groups() if g)))

    def __call__(self, x):
        """Convert an int, Fraction or field element into this field."""
        if self.p is None:
            if isinstance(x, ModP):
                raise ValueError("cannot move an F_p element into Q")
            return Fraction(x)
        if isinstance(x, ModP):
            if x.p != self.p:
                raise ValueError(f"mixing F_{x.p} and F_{self.p}")
            return x
        x = Fraction(x)
        return ModP(x.numerator, self.p) / ModP(x.denominator, self.p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @property
    def characteristic(self) -> int:
        return self.p or 0

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Field(Q)" if self.p is None else f"Field(F_{self.p})"

    def __str__(self):
        return "Q" if self.p is None else f"F{self.p}"


def format_scalar(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)


def invert_unit(c):
    """Inverse of a unit coefficient; scalars or objects with ``unit_inverse``."""
    if hasattr(c, "unit_inverse"):
        return c.unit_inverse()
    if not c:
        raise NotAUnit("zero is not a unit")
    if isinstance(c, ModP):
        return c.inverse()
    return 1 / Fraction(c)


def is_unit(c) -> bool:
    if hasattr(c, "is_unit"):
        return c.is_unit()
    return bool(c)
