import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from admt.complexes import BasedComplex, check_boundary_squared, homology_ranks
from admt.linalg import Echelon, kernel, rank
from admt.morse import (InvalidEdge, Matching, MatchingViolation, greedy_matching,
                        morse_boundary_bruteforce, morse_complex, validate_matching,
                        verify_homotopy)
from admt.scalars import Field

from support import random_complex


def nonzero(ranks):
    return {k: v for k, v in ranks.items() if v}

seeds = st.integers(0, 2**32 - 1)


@given(seeds)
def test_random_complexes_are_complexes(seed):
    C, hom = random_complex(random.Random(seed))
    assert check_boundary_squared(C)
    assert nonzero(homology_ranks(C)) == nonzero(hom)


@given(seeds)
def test_greedy_morse_reduction(seed):
    rng = random.Random(seed)
    C, hom = random_complex(rng)
    M = greedy_matching(C, priority=lambda e: rng.random())
    assert validate_matching(C, M)
    D = morse_complex(C, M)
    assert check_boundary_squared(D.complex)
    assert nonzero(homology_ranks(D.complex, C.degrees())) == nonzero(hom)
    assert verify_homotopy(D).ok


@given(seeds)
def test_greedy_morse_reduction_over_fp(seed):
    rng = random.Random(seed)
    C, hom = random_complex(rng, max_cells=20, field=Field(5))
    D = morse_complex(C, greedy_matching(C))
    assert nonzero(homology_ranks(D.complex, C.degrees())) == nonzero(hom)
    assert verify_homotopy(D).ok


@given(seeds)
def test_elimination_equals_path_enumeration(seed):
    rng = random.Random(seed)
    C, _ = random_complex(rng, max_cells=12)
    M = greedy_matching(C, priority=lambda e: rng.random())
    D = morse_complex(C, M)
    for c in D.complex.all_cells():
        assert D.boundary(c) == morse_boundary_bruteforce(C, M, c)


def _square():
    """Boundary of a square: 4 vertices, 4 edges, 1 face."""
    C = BasedComplex("square")
    for v in "abcd":
        C.add_cell(v, 0)
    edges = {"ab": ("b", "a"), "bc": ("c", "b"), "cd": ("d", "c"), "da": ("a", "d")}
    for e in edges:
        C.add_cell(e, 1)
    C.add_cell("F", 2)
    for e, (h, t) in edges.items():
        C.set_boundary(e, {h: 1, t: -1})
    C.set_boundary("F", {"ab": 1, "bc": 1, "cd": 1, "da": 1})
    return C


def test_cycle_is_detected():
    C = _square()
    M = Matching([("ab", "b"), ("bc", "c"), ("cd", "d"), ("da", "a")])
    report = validate_matching(C, M)
    assert not report and report.condition == "acyclicity"
    with pytest.raises(MatchingViolation):
        morse_complex(C, M)


def test_shared_cell_and_bad_edges():
    C = _square()
    assert validate_matching(C, Matching([("ab", "b"), ("bc", "b")])).condition == "matching"
    with pytest.raises(InvalidEdge):
        validate_matching(C, Matching([("ab", "c")]))


def test_non_unit_weight_is_rejected():
    C = BasedComplex()
    C.add_cell("v", 0)
    C.add_cell("e", 1)
    C.set_boundary("e", {"v": 0 * Fraction(1) + 2})
    assert validate_matching(C, Matching([("e", "v")]))
    C.set_boundary("e", {"v": Field(2)(2) + 1})
    assert validate_matching(C, Matching([("e", "v")]))


def test_collapse_of_square_to_a_point():
    C = _square()
    M = greedy_matching(C)
    D = morse_complex(C, M)
    assert nonzero(homology_ranks(D.complex)) == {0: 1}
    assert sum(len(v) for v in D.critical.values()) == 1


def test_kernel_and_rank():
    images = {"a": {0: 1, 1: 1}, "b": {0: 2, 1: 2}, "c": {1: 1}}
    ker = kernel(images, ["a", "b", "c"])
    assert len(ker) == 1 and ker[0]["b"] == 1 and ker[0]["a"] == -2
    assert rank(images.values()) == 2
    ech = Echelon()
    assert ech.add({0: Fraction(1)}) and not ech.add({0: Fraction(3)})
