from math import comb

import pytest

from admt.bar import build_resolution
from admt.catalog import CATALOG, ideal, polynomial_ring
from admt.monomials import MonomialOrder
from admt.oracle import UngradedAlgebra, find_grading, tor_bimodule, tor_residue_field
from admt.series import BettiTable, resolution_betti


@pytest.mark.parametrize("n", [1, 2, 3])
def test_tor_of_polynomial_ring(n):
    tor = tor_residue_field(polynomial_ring(n), n + 1, n + 1)
    assert tor.totals() == {i: comb(n, i) for i in range(n + 2)}


def test_tor_of_dual_numbers():
    tor = tor_residue_field(CATALOG["dual-numbers"](), 4, 4)
    assert tor.entries == {(i, (i,)): 1 for i in range(5)}


def test_tor_of_x2_xy():
    # Poincare series 1/(1 - x t - x y t^2 ... ) starts 1, 2, 3, 5, 8
    tor = tor_residue_field(CATALOG["x2-xy"](), 4, 6)
    assert tor.totals() == {0: 1, 1: 2, 2: 3, 3: 5, 4: 8}


def test_tor_of_free_mod_xy():
    tor = tor_residue_field(CATALOG["free-mod-xy"](), 4, 6)
    assert tor.totals() == {0: 1, 1: 2, 2: 1, 3: 0, 4: 0}


def test_tor_does_not_depend_on_the_order():
    gens = ["x^2 - y*z", "y^2 - x*z"]
    names = ["x", "y", "z"]
    a = tor_residue_field(ideal(names, gens), 3, 6)
    b = tor_residue_field(ideal(names, gens, order=MonomialOrder("degrevlex")), 3, 6)
    c = tor_residue_field(ideal(names, gens, order=MonomialOrder("deglex", precedence=(2, 1, 0))),
                          3, 6)
    assert a.entries == b.entries == c.entries


def test_grading_detection():
    assert find_grading(CATALOG["four-cycle"]()) == ("fine", None)
    assert find_grading(CATALOG["complete-intersection"]()) == ("weighted", (1, 1, 1))
    assert find_grading(CATALOG["mixed-commutative"]()) == ("weighted", (1, 2))
    with pytest.raises(UngradedAlgebra):
        find_grading(ideal(["x"], ["x^2 - x"]))


@pytest.mark.parametrize("name", ["x2-xy", "four-cycle", "twisted-cubic", "exterior2"])
def test_specialized_resolution_matches_tor(name):
    R = CATALOG[name]()
    D, d = 5, 8
    res = build_resolution(R, D=D, d=d)
    tor = tor_residue_field(R, 4, d)
    found = resolution_betti(res).restrict(4, d).collapse(tor.weights)
    assert found == BettiTable.from_counts(tor.entries)


@pytest.mark.parametrize("name", ["dual-numbers", "polynomial2", "exterior2"])
def test_bimodule_tor_of_small_algebras(name):
    from admt.hochschild import hh_hilbert, hochschild_resolution
    R = CATALOG[name]()
    res = hochschild_resolution(R, D=4, d=5)
    tor = tor_bimodule(R, 3, 5)
    assert hh_hilbert(res).restrict(3, 5) == BettiTable.from_counts(tor.entries)
