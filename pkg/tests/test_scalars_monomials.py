from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from admt.monomials import (ContextMismatch, Exponents, MonomialOrder, Word, compare, divisors,
                            monomials_of_degree)
from admt.scalars import Field, ModP, NotAUnit, invert_unit, is_unit

primes = st.sampled_from([2, 3, 5, 7, 101])


@given(primes, st.integers(), st.integers(), st.integers())
def test_modp_field_axioms(p, a, b, c):
    x, y, z = ModP(a, p), ModP(b, p), ModP(c, p)
    assert x + y == y + x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == ModP(0, p)
    if x:
        assert x * x.inverse() == ModP(1, p)


def test_modp_rejects_mixed_primes():
    with pytest.raises(ValueError):
        ModP(1, 3) + ModP(1, 5)


@given(st.fractions())
def test_field_conversion_to_fp(q):
    F = Field(7)
    if q.denominator % 7:
        assert F(q) * F(q.denominator) == F(q.numerator)


def test_field_parse():
    assert Field.parse("Q") == Field()
    assert Field.parse("Fp(7)") == Field(7)
    assert Field.parse("GF(5)") == Field(5)
    with pytest.raises(ValueError):
        Field.parse("Fp(8)")


def test_unit_helpers():
    assert is_unit(Fraction(-2)) and not is_unit(0)
    assert invert_unit(Fraction(2, 3)) == Fraction(3, 2)
    with pytest.raises(NotAUnit):
        invert_unit(0)


exps = st.lists(st.integers(0, 4), min_size=3, max_size=3).map(Exponents)
words = st.lists(st.integers(0, 2), max_size=5).map(lambda t: Word(tuple(t)))
orders = st.sampled_from([MonomialOrder(), MonomialOrder("degrevlex"),
                          MonomialOrder(weights=(1, 2, 0)),
                          MonomialOrder(precedence=(2, 0, 1))])


@given(orders, exps, exps, exps)
def test_commutative_order_is_multiplicative(order, u, v, w):
    if compare(u, v, order) < 0:
        assert compare(u.mul(w), v.mul(w), order) < 0
    assert compare(u, u.mul(w), order) <= 0


@given(words, words, words)
def test_word_order_is_two_sided_multiplicative(u, v, w):
    order = MonomialOrder()
    if compare(u, v, order) < 0:
        assert compare(w.mul(u), w.mul(v), order) < 0
        assert compare(u.mul(w), v.mul(w), order) < 0


@given(exps)
def test_divisors_multiply_back(m):
    if m.is_one():
        return
    for u, v in divisors(m):
        assert u.mul(v) == m and not u.is_one()


def test_word_factor_and_multidegree():
    w = Word((0, 1, 1, 0))
    assert Word((1, 1)).divides(w) and not Word((0, 0)).divides(w)
    assert w.multidegree(2) == (2, 2)
    with pytest.raises(ContextMismatch):
        w.mul(Exponents((1, 0)))


def test_monomial_counts():
    assert len(monomials_of_degree(3, 2, True)) == 6
    assert len(monomials_of_degree(2, 3, False)) == 8


def test_largest_variable_respects_precedence():
    order = MonomialOrder(precedence=(1, 0))
    assert order.largest_variable(Exponents((1, 1))) == 1
    assert MonomialOrder().largest_variable(Word((1, 0))) == 0
