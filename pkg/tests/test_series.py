import random

import pytest
import sympy
from hypothesis import given, strategies as st

from admt.bar import build_resolution
from admt.catalog import CATALOG, complete_intersection, ideal, polynomial_ring
from admt.oracle import tor_residue_field
from admt.series import (BettiTable, RationalSeries, UnsupportedSystem, automaton_series,
                         build_automaton, chain_table, closed_form_series,
                         commutative_upper_bound, resolution_betti, symbols_for)

WORD_SYSTEMS = ["twisted-cubic", "koszul3", "exterior2", "exterior3", "free-mod-xy",
                "mixed-words"]


def series(expr, n):
    return RationalSeries.from_expr(expr, n)


def test_truncation_of_geometric_series():
    (x,), t = symbols_for(1)
    S = series(1 / (1 - x * t), 1)
    assert S.truncate(4).entries == {(i, (i,)): 1 for i in range(5)}


def test_truncation_respects_homological_bound():
    (x, y), t = symbols_for(2)
    S = series((1 + x * t) * (1 + y * t), 2)
    assert S.truncate(5, 1).entries == {(0, (0, 0)): 1, (1, (1, 0)): 1, (1, (0, 1)): 1}


def test_truncation_of_a_product_with_cancellation():
    (x,), t = symbols_for(1)
    S = series((1 - x ** 2 * t ** 2) / (1 - x * t), 1)
    assert S.truncate(6).entries == {(0, (0,)): 1, (1, (1,)): 1}


def test_denominator_must_not_vanish_at_origin():
    (x,), t = symbols_for(1)
    with pytest.raises(ZeroDivisionError):
        series(1 / (x * t), 1)


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4), st.integers(1, 3))
def test_truncation_inverts_multiplication(coeffs, a):
    (x,), t = symbols_for(1)
    p = sum(c * (x * t) ** k for k, c in enumerate(coeffs)) + 1 - coeffs[0]
    S = series(p / (1 - x ** a * t), 1)
    table = S.truncate(8).entries
    # compare against sympy's own univariate expansion in a single variable z = x = t
    z = sympy.Symbol("z")
    expansion = sympy.series((p / (1 - x ** a * t)).subs({x: z, t: z}), z, 0, 9).removeO()
    poly = sympy.Poly(expansion, z)
    by_total = {}
    for (i, g), k in table.items():
        by_total[i + g[0]] = by_total.get(i + g[0], 0) + k
    want = {m[0]: int(c) for m, c in zip(poly.monoms(), poly.coeffs()) if m[0] <= 8}
    assert {k: v for k, v in by_total.items() if k <= 8 and v} == {k: v for k, v in want.items() if v}


def test_free_algebra_automaton():
    R = ideal(["x", "y"], [], commutative=False)
    S = automaton_series(build_automaton(R))
    (x, y), t = symbols_for(2)
    assert sympy.simplify(S.expr - (1 + x * t + y * t)) == 0


def test_single_square_automaton():
    R = ideal(["x"], ["x*x"], commutative=False)
    S = automaton_series(build_automaton(R))
    (x,), t = symbols_for(1)
    assert sympy.simplify(S.expr - 1 / (1 - x * t)) == 0


@pytest.mark.parametrize("name", WORD_SYSTEMS)
def test_automaton_truncation_equals_chain_enumeration(name):
    R = CATALOG[name]()
    S = automaton_series(build_automaton(R))
    d = 8 if name not in ("exterior3",) else 6
    assert S.truncate(d, d) == chain_table(R, d, d)


def test_automaton_language_is_the_chain_set():
    from admt.bar import enumerate_chains
    R = CATALOG["twisted-cubic"]()
    aut = build_automaton(R)
    assert set(aut.language(4, 6)) == set(enumerate_chains(R, "anick", 4, 6))


def test_automaton_needs_a_complete_system():
    R = CATALOG["x2-xy-words"]()
    with pytest.raises(UnsupportedSystem):
        build_automaton(R)
    aut = build_automaton(R, allow_truncated=True)
    assert aut.complete_to == 8


def test_automaton_rejects_commutative_rings():
    with pytest.raises(UnsupportedSystem):
        build_automaton(polynomial_ring(2))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bound_of_polynomial_ring_is_koszul(n):
    S = commutative_upper_bound(polynomial_ring(n), 4, 6)
    xs, t = symbols_for(n)
    expected = sympy.Integer(1)
    for x in xs:
        expected *= 1 + x * t
    assert sympy.simplify(S.expr - expected) == 0


def test_bound_equals_closed_form_for_complete_intersection():
    R = complete_intersection()
    gens = [tuple(m) for m in R.mingen()]
    closed = closed_form_series("complete-intersection", 3, gens)
    bound = commutative_upper_bound(R, 8, 8)
    assert bound.truncate(8, 8) == closed.truncate(8, 8)


@pytest.mark.parametrize("name", ["x2-xy", "four-cycle", "complete-intersection", "dual-numbers",
                                  "polynomial3"])
def test_bound_counts_critical_cells(name):
    R = CATALOG[name]()
    D, d = 5, 7
    assert commutative_upper_bound(R, D, d).truncate(d, D) == chain_table(R, D, d)


def _random_monomial_ideal(rng):
    n = rng.choice([2, 3])
    names = ["x", "y", "z"][:n]
    gens = []
    for _ in range(rng.randint(1, 3)):
        e = [rng.randint(0, 2) for _ in range(n)]
        if sum(e) < 2:
            e[rng.randrange(n)] += 2 - sum(e)
        gens.append("*".join(f"{v}^{a}" for v, a in zip(names, e) if a))
    return ideal(names, gens)


@given(st.integers(0, 2**32 - 1))
def test_bound_is_attained_on_minimal_resolutions(seed):
    R = _random_monomial_ideal(random.Random(seed))
    D, d = 4, 6
    res = build_resolution(R, D=D, d=d)
    bound = commutative_upper_bound(R, D, d).truncate(d, D)
    tor = BettiTable.from_counts(tor_residue_field(R, D - 1, d).entries)
    assert tor.dominated_by(bound)
    if res.minimal:
        assert bound == chain_table(R, D, d)


def test_closed_forms():
    xs, t = symbols_for(2)
    x, y = xs
    ci = closed_form_series("complete-intersection", 2, [(2, 0)])
    assert sympy.simplify(ci.expr - (1 + x * t) * (1 + y * t) / (1 - x ** 2 * t ** 2)) == 0
    assert sympy.simplify(closed_form_series("cartan", 2).expr
                          - 1 / ((1 - x * t) * (1 - y * t))) == 0
    with pytest.raises(ValueError):
        closed_form_series("unknown", 2)


def test_complete_intersection_series_matches_oracle():
    R = complete_intersection()
    gens = [tuple(m) for m in R.mingen()]
    closed = closed_form_series("complete-intersection", 3, gens).truncate(8, 8)
    tor = tor_residue_field(R, 8, 8)
    assert tor.weights == (1, 1, 1)
    assert BettiTable.from_counts(tor.entries).restrict(8, 8) == closed.collapse(tor.weights)


def test_betti_table_helpers():
    T = BettiTable.from_counts({(0, (0, 0)): 1, (1, (1, 0)): 2, (1, (0, 1)): 0, (2, (1, 1)): 1})
    assert T.totals() == {0: 1, 1: 2, 2: 1}
    assert T.by_degree() == {(0, 0): 1, (1, 1): 2, (2, 2): 1}
    assert T.collapse((2, 1)).entries == {(0, (0,)): 1, (1, (2,)): 2, (2, (3,)): 1}
    assert T.restrict(1).totals() == {0: 1, 1: 2}
    assert "total" in T.format_text()
    assert T.dominated_by(T) and not T.dominated_by(T.restrict(1))


def test_rational_series_format_uses_ring_names():
    (x,), t = symbols_for(1)
    assert series(1 / (1 - x * t), 1).format(["t"]) == "(1) / (-t*t_ + 1)"


def test_resolution_betti_of_polynomial_ring():
    res = build_resolution(polynomial_ring(3), D=3, d=3)
    assert resolution_betti(res).totals() == {0: 1, 1: 3, 2: 3, 3: 1}
