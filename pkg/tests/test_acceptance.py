"""Acceptance suite: one test per acceptance criterion, in order."""

import itertools
import random
import time
from math import comb

import pytest

from admt.bar import (build_resolution, normalization_matching,
                      normalized_bar, path_sum_cross_check, prop44_witness, type_ii_possible,
                      unnormalized_bar)
from admt.catalog import (CATALOG, commutators, complete_intersection, dual_numbers, exterior,
                          free_mod_xy, ideal, infinite_overlap, mixed_degree_commutative,
                          mixed_degree_words, polynomial_ring, twisted_cubic)
from admt.closed_forms import (cartan_label, cartan_resolution, ci_label, compare_up_to_signs)
from admt.complexes import check_boundary_squared, homology_ranks, specialize
from admt.hochschild import (bach_resolution, exterior_duality, hh_hilbert, hh_series,
                             hochschild_resolution)
from admt.morse import greedy_matching, morse_complex, validate_matching, verify_homotopy
from admt.oracle import tor_residue_field
from admt.series import (BettiTable, automaton_series, build_automaton, chain_table,
                         closed_form_series, resolution_betti, symbols_for)

from support import random_complex


def _counts(res, top):
    return [len(res.cells(i)) for i in range(1, top + 1)]


def test_01_twisted_cubic_chains_and_differential():
    start = time.perf_counter()
    res = build_resolution(twisted_cubic(), D=5, d=5)
    assert _counts(res, 5) == [4, 9, 18, 36, 72]
    adad = next(c for c in res.cells(4) if res.format_cell(c) == "[a|d|a|d]")
    terms = {res.format_cell(c): str(v) for c, v in res.differential(adad).items()}
    assert terms == {"[d|a|d]": "a", "[b|a|d]": "-c", "[b|d|b]": "-b"}
    assert time.perf_counter() - start < 10


def test_02_commutator_relations_give_the_koszul_complex():
    for n in range(1, 5):
        R = commutators(n)
        res = build_resolution(R, D=n + 1, d=n + 1)
        one = R.ring.field.one
        for r in range(n + 2):
            words = sorted(tuple(w[0] for w in c) for c in res.cells(r))
            assert words == sorted(itertools.combinations(range(n - 1, -1, -1), r))
        assert resolution_betti(res).totals() == {i: comb(n, i) for i in range(n + 1)}
        # in the basis (-1)^{r(r-1)/2} E_w the signs read (-1)^{r-j}
        twist = [(-1) ** (r * (r - 1) // 2) for r in range(n + 2)]
        for r in range(1, n + 1):
            for cell in res.cells(r):
                got = {c: v * twist[r] * twist[r - 1] for c, v in res.differential(cell).items()}
                expected = {cell[:j - 1] + cell[j:]:
                            res.context.left_coefficient(cell[j - 1]) * one * (-1) ** (r - j)
                            for j in range(1, r + 1)}
                assert got == expected


def test_03_exterior_algebra_gives_the_cartan_complex():
    D = 6
    for n in range(1, 4):
        R = exterior(n)
        res = build_resolution(R, D=D, d=D)
        assert [len(res.cells(i)) for i in range(D + 1)] == \
            [comb(n + i - 1, i) for i in range(D + 1)]
        assert compare_up_to_signs(res.complex, cartan_resolution(R, D),
                                   lambda c: cartan_label(R, c))


def test_04_complete_intersection_series():
    start = time.perf_counter()
    R = complete_intersection()
    d = 8
    gens = [tuple(m) for m in R.mingen()]
    closed = closed_form_series("complete-intersection", 3, gens).truncate(d, d)
    assert closed == chain_table(R, d, d)
    tor = tor_residue_field(R, d, d)
    assert closed.collapse(tor.weights) == BettiTable.from_counts(tor.entries)
    assert time.perf_counter() - start < 30


def test_05_minimality_and_type_ii_reductions():
    cubic_cone = ideal(["x", "y", "z", "w"], ["x*z - y^2", "x*w - y*z", "y*w - z^2"])
    assert {lhs.degree for lhs, _ in cubic_cone.rules} == {2}
    minimal_cases = [
        cubic_cone,                                                # quadratic commutative
        CATALOG["four-cycle"](),
        ideal(["x", "y"], ["x*y*x", "y*y"], commutative=False),     # monomial words
        free_mod_xy(),
        twisted_cubic(),                                           # equal-degree words
        exterior(2),
    ]
    for R in minimal_cases:
        res = build_resolution(R, D=4, d=6)
        found, _ = type_ii_possible(R, D=4, d=6)
        assert res.minimal and not found
    for R in (mixed_degree_commutative(), mixed_degree_words()):
        res = build_resolution(R, D=4, d=6)
        found, witness = type_ii_possible(R, D=4, d=6)
        assert not res.minimal and found and witness is not None
    assert prop44_witness(mixed_degree_words(), 4) is not None


def test_06_morse_reduction_of_random_complexes():
    start = time.perf_counter()
    rng = random.Random(20260101)
    for _ in range(500):
        C, hom = random_complex(rng, max_cells=30)
        assert len(C) <= 30
        M = greedy_matching(C, priority=lambda e: rng.random())
        assert validate_matching(C, M)
        data = morse_complex(C, M)
        assert check_boundary_squared(data.complex)
        found = homology_ranks(data.complex, C.degrees())
        assert {k: v for k, v in found.items() if v} == {k: v for k, v in hom.items() if v}
        check = verify_homotopy(data)
        assert set(check.results) >= {"C1", "C2", "H1", "H2"} and check.ok, check.witnesses
    assert time.perf_counter() - start < 60


def test_07_normalization_matching_gives_the_normalized_bar_complex():
    for R in (dual_numbers(), free_mod_xy()):
        D = 4
        U = unnormalized_bar(R, D + 1, D)
        data = morse_complex(U, normalization_matching(U))
        N = normalized_bar(R, D, D)
        critical = {c for i in range(D + 1) for c in data.critical.get(i, [])}
        assert critical == set(N.all_cells())
        for c in N.all_cells():
            assert data.boundary(c) == N.boundary(c)


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_08_reduction_rules_equal_path_sums(name):
    res = build_resolution(CATALOG[name](), D=4, d=5)
    path_sum_cross_check(res)


def test_09_specialized_resolution_ranks_equal_tor():
    algebras = [CATALOG["x2-xy"](), CATALOG["four-cycle"](), twisted_cubic(), exterior(2)]
    for R in algebras:
        res = build_resolution(R, D=5, d=8)
        tor = tor_residue_field(R, 4, 8)
        found = resolution_betti(res).restrict(4, 8).collapse(tor.weights)
        assert found == BettiTable.from_counts(tor.entries)


def test_10_infinite_groebner_basis_example():
    d = 8
    R = infinite_overlap(d)
    res = build_resolution(R, D=d, d=d)
    x, y = R.ring.parse("x"), R.ring.parse("y")
    xw = next(iter(x.terms))
    yw = next(iter(y.terms))
    expected = {(xw,), (yw,)}
    for length in range(2, d + 1):
        for ns in itertools.product(range(d), repeat=length - 1):
            if length + sum(ns) <= d:
                expected.add((xw,) + tuple(type(xw)(yw * k + xw) for k in ns))
    found = {c for i in range(1, d + 1) for c in res.cells(i)}
    assert found == expected
    unit_entries = [(res.format_cell(c), {res.format_cell(t): str(a) for t, a in v.items()})
                    for c, v in specialize(res.complex).diff.items() if v]
    assert not unit_entries, f"specialized differential has unit entries, first: {unit_entries[0]}"


def test_11_hochschild_resolutions():
    for n in range(1, 4):
        R = polynomial_ring(n)
        res = hochschild_resolution(R, D=n + 1, d=n + 1)
        assert hh_hilbert(res).totals() == {i: comb(n, i) for i in range(n + 1)}
        xs, t = symbols_for(n)
        koszul = 1
        for v in xs:
            koszul *= 1 + v * t
        assert (hh_series(R).expr - koszul).simplify() == 0
        assert exterior_duality(exterior(n), 6).ok
    for names, gens in ((["x"], ["x^2"]), (["x", "y", "z"], ["x^2 - y^2", "z^2"])):
        R = ideal(names, gens)
        res = hochschild_resolution(R, D=5, d=7)
        assert compare_up_to_signs(res.complex, bach_resolution(R, 5, 7),
                                   lambda c: ci_label(R, c))


@pytest.mark.parametrize("name", ["twisted-cubic", "koszul3", "exterior2", "exterior3",
                                  "free-mod-xy", "mixed-words", "x2-xy-words"])
def test_12_automaton_series_equals_chain_enumeration(name):
    R = CATALOG[name]()
    S = automaton_series(build_automaton(R, allow_truncated=True))
    d = 8
    assert S.truncate(d, d) == chain_table(R, d, d)
