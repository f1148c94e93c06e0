import pytest
from hypothesis import given, strategies as st

from admt.catalog import CATALOG, ideal, infinite_overlap, twisted_cubic
from admt.groebner import IncompleteBasisError, buchberger, noncomm_complete
from admt.linalg import rank
from admt.monomials import Word, monomials_of_degree
from admt.polynomials import PolyRing


def _ideal_dimension(ring, gens, k):
    """dim_k of the degree-k part of a homogeneous ideal, by linear algebra."""
    rows = []
    for g in gens:
        e = k - g.degree
        if e < 0:
            continue
        for m in monomials_of_degree(ring.n, e, ring.commutative):
            if ring.commutative:
                rows.append(dict((ring.from_terms([(m, 1)]) * g).terms))
            else:
                for split in range(len(m) + 1):
                    left = ring.from_terms([(Word(m[:split]), 1)])
                    right = ring.from_terms([(Word(m[split:]), 1)])
                    rows.append(dict((left * g * right).terms))
    return rank(rows)


def _check_hilbert(R, gens, top):
    ring = R.ring
    for k in range(top + 1):
        total = len(monomials_of_degree(ring.n, k, ring.commutative))
        assert len(R.standard_monomials(k)) == total - _ideal_dimension(ring, gens, k)


def _check_reduced(R):
    lhs = [l for l, _ in R.rules]
    for a in lhs:
        for b in lhs:
            if a != b:
                assert not a.divides(b)
        for _, rhs in R.rules:
            assert all(not a.divides(m) for m in rhs.terms)


RING3 = PolyRing(["x", "y", "z"])
coeff = st.integers(-2, 2)
quadric = st.tuples(*[coeff] * 6).map(
    lambda c: RING3.from_terms(zip([RING3.monomial(e) for e in
                                    [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]],
                                   c)))


@given(st.lists(quadric, min_size=1, max_size=3))
def test_buchberger_matches_linear_algebra(gens):
    gens = [g for g in gens if g]
    if not gens:
        return
    R = buchberger(gens, ring=RING3)
    _check_reduced(R)
    for g in gens:
        assert R.normal_form(g).is_zero()
    _check_hilbert(R, gens, 4)


WRING = PolyRing(["a", "b"], commutative=False)
wquad = st.tuples(*[coeff] * 4).map(
    lambda c: WRING.from_terms(zip([Word(w) for w in [(0, 0), (0, 1), (1, 0), (1, 1)]], c)))


@given(st.lists(wquad, min_size=1, max_size=2))
def test_overlap_completion_matches_linear_algebra(gens):
    gens = [g for g in gens if g]
    if not gens:
        return
    R = noncomm_complete(gens, degree_bound=5, ring=WRING)
    _check_reduced(R)
    _check_hilbert(R, gens, 5)


def test_known_bases():
    R = ideal(["x", "y", "z"], ["x^2 - y*z", "x*y - z^2"])
    assert R.describe() == ["x*y -> z^2", "x^2 -> y*z", "x*z^2 -> y^2*z", "y^3*z -> z^4"]
    assert R.fully_complete


def test_twisted_cubic_rules_are_complete():
    R = twisted_cubic()
    assert R.fully_complete and len(R.rules) == 9
    assert sorted(R.ring.format_monomial(m) for m in R.mingen()) == sorted(
        ["a*c", "c*a", "a*d", "d*a", "b*d", "d*b", "b*a", "b*c", "d*c"])
    assert [len(R.standard_monomials(k)) for k in range(5)] == [1, 4, 7, 10, 13]


def test_infinite_basis_is_truncated():
    R = infinite_overlap(8)
    assert not R.fully_complete and R.complete_up_to_degree == 8
    names = [R.ring.format_monomial(m) for m in R.mingen()]
    assert names == ["x^2"] + [f"x*y{'' if n == 1 else '^' + str(n)}*x" for n in range(1, 7)]
    with pytest.raises(IncompleteBasisError):
        R.standard_monomials(9)


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_systems_are_reduced(name):
    _check_reduced(CATALOG[name]())
