"""Named test algebras used by the test-suite and the command line."""

from __future__ import annotations

from .groebner import buchberger, noncomm_complete, reduction_system_from_rules
from .monomials import MonomialOrder
from .polynomials import PolyRing
from .scalars import Field


def _names(prefix: str, n: int):
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def ideal(names, gens, commutative=True, order=None, field=None, degree_bound=8):
    """Gröbner system of the ideal generated by polynomial strings."""
    ring = PolyRing(names, commutative, field or Field(), order or MonomialOrder())
    polys = [ring.parse(g) for g in gens]
    if commutative:
        return buchberger(polys, ring=ring)
    return noncomm_complete(polys, degree_bound=degree_bound, ring=ring)


def polynomial_ring(n: int, field=None):
    return ideal(_names("x", n), [], field=field)


def twisted_cubic(field=None):
    """Semigroup algebra of the twisted cubic as a quotient of k<a,b,c,d>.

    The nine quadratic rules are oriented by a weighted order with
    b > d > a > c on letters.
    """
    order = MonomialOrder("deglex", weights=(9, 4, 1, 0), precedence=(1, 3, 0, 2))
    ring = PolyRing("abcd", False, field or Field(), order)
    rules = [("a*c", "b*b"), ("c*a", "b*b"), ("a*d", "c*b"), ("d*a", "c*b"),
             ("b*d", "c*c"), ("d*b", "c*c"), ("b*a", "a*b"), ("b*c", "c*b"),
             ("d*c", "c*d")]
    return reduction_system_from_rules(ring, rules)


def commutators(n: int, field=None):
    """k<y1..yn> modulo y_i y_j - y_j y_i (i > j), with y_n the largest letter."""
    order = MonomialOrder("deglex", precedence=tuple(range(n - 1, -1, -1)))
    ring = PolyRing(_names("y", n), False, field or Field(), order)
    rules = [(f"y{i}*y{j}", f"y{j}*y{i}") for i in range(1, n + 1) for j in range(1, i)]
    return reduction_system_from_rules(ring, rules)


def exterior(n: int, field=None):
    """Exterior algebra as a quotient of the free algebra."""
    ring = PolyRing(_names("x", n), False, field or Field())
    gens = [f"x{i}*x{i}" for i in range(1, n + 1)]
    gens += [f"x{i}*x{j} + x{j}*x{i}" for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return noncomm_complete([ring.parse(g) for g in gens], degree_bound=4, ring=ring)


def infinite_overlap(degree_bound: int = 8, field=None):
    """<x^2 - xy>: no finite Gröbner basis, completed up to ``degree_bound``."""
    return ideal(["x", "y"], ["x*x - x*y"], commutative=False, field=field,
                 degree_bound=degree_bound)


def complete_intersection(field=None):
    """(x1^2 - x2^2, x3^2) in k[x1, x2, x3]."""
    return ideal(_names("x", 3), ["x1^2 - x2^2", "x3^2"], field=field)


def dual_numbers(field=None):
    """k[x]/(x^2)."""
    return ideal(["x"], ["x^2"], field=field)


def free_mod_xy(field=None):
    """k<x,y>/(xy)."""
    return ideal(["x", "y"], ["x*y"], commutative=False, field=field)


def x2_xy(field=None):
    """k[x,y]/(x^2, xy)."""
    return ideal(["x", "y"], ["x^2", "x*y"], field=field)


def four_cycle(field=None):
    """Stanley-Reisner ring of the 4-cycle 1-2-3-4-1: k[x1..x4]/(x1 x3, x2 x4)."""
    return ideal(_names("x", 4), ["x1*x3", "x2*x4"], field=field)


def mixed_degree_commutative(field=None):
    """(x^2 - y) in k[x,y]: a merge lands on a critical cell with a unit."""
    return ideal(["x", "y"], ["x^2 - y"], field=field)


def mixed_degree_words(field=None):
    """<x^2 - y, xy - yx> in k<x,y>."""
    return ideal(["x", "y"], ["x*x - y", "x*y - y*x"], commutative=False, field=field)


CATALOG = {
    "polynomial2": lambda: polynomial_ring(2),
    "polynomial3": lambda: polynomial_ring(3),
    "twisted-cubic": twisted_cubic,
    "koszul3": lambda: commutators(3),
    "exterior2": lambda: exterior(2),
    "exterior3": lambda: exterior(3),
    "x2-xy-words": infinite_overlap,
    "complete-intersection": complete_intersection,
    "dual-numbers": dual_numbers,
    "free-mod-xy": free_mod_xy,
    "x2-xy": x2_xy,
    "four-cycle": four_cycle,
    "mixed-commutative": mixed_degree_commutative,
    "mixed-words": mixed_degree_words,
}
