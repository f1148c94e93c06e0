"""Betti numbers by brute force: graded minimal free resolutions over a field.

Nothing here uses matchings, reduction sequences or automata.  The module is
resolved one grade at a time: in each grade the kernel of the previous map is
computed by Gaussian elimination and compared with the part of it already
generated by earlier generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .groebner import ReductionSystem
from .algebra import QuotientAlgebra
from .linalg import Echelon, kernel, rank
from .monomials import monomials_of_degree


class UngradedAlgebra(ValueError):
    """No positive grading makes the relations homogeneous."""


def find_grading(R: ReductionSystem, max_weight: int = 4):
    """Return ``(kind, weights)`` with kind ``"fine"`` or ``"weighted"``.

    Fine means every rule is homogeneous in the full multidegree; otherwise
    the smallest positive weight vector (lexicographically) under which all
    rules are homogeneous.
    """
    ring = R.ring
    n = ring.n
    rules = [(lhs, list(rhs.terms)) for lhs, rhs in R.rules]
    for lhs, rhs in rules:
        for m in rhs:
            if m.is_one():
                raise UngradedAlgebra("a relation has a constant term; k is not an A-module "
                                      "through the variables")
    if all(ring.multidegree(m) == ring.multidegree(lhs) for lhs, rhs in rules for m in rhs):
        return "fine", None
    for w in sorted(product(range(1, max_weight + 1), repeat=n), key=lambda v: (sum(v), v)):
        def wdeg(m):
            return sum(a * b for a, b in zip(w, ring.multidegree(m)))
        if all(wdeg(m) == wdeg(lhs) for lhs, rhs in rules for m in rhs):
            return "weighted", w
    raise UngradedAlgebra("the relations are not homogeneous for any small positive weights")


@dataclass
class TorTable:
    """dim Tor_i in each grade, for i <= D and grades of degree <= d."""

    entries: dict = field(default_factory=dict)   # (i, grade) -> dim
    D: int = 0
    d: int = 0
    grading: str = "fine"
    weights: tuple | None = None

    def totals(self) -> dict:
        out = {i: 0 for i in range(self.D + 1)}
        for (i, _), k in self.entries.items():
            out[i] += k
        return out

    def by_degree(self) -> dict:
        """(i, degree of the grade) -> dim."""
        out = {}
        for (i, g), k in self.entries.items():
            key = (i, sum(g))
            out[key] = out.get(key, 0) + k
        return dict(sorted(out.items()))

    def rows(self):
        return [(i, g, k) for (i, g), k in sorted(self.entries.items())]


class _Graded:
    """Standard monomials of A grouped by grade, and the grade arithmetic."""

    def __init__(self, R: ReductionSystem, d: int):
        R.require(d)
        self.R = R
        ring = R.ring
        self.kind, self.weights = find_grading(R)
        self.by_grade = {}
        for k in range(0, d + 1):
            for m in monomials_of_degree(ring.n, k, ring.commutative):
                if R.is_standard(m):
                    g = self.grade(m)
                    if self.size(g) <= d:
                        self.by_grade.setdefault(g, []).append(m)

    def grade(self, m) -> tuple:
        md = self.R.ring.multidegree(m)
        if self.kind == "fine":
            return tuple(md)
        return (sum(a * b for a, b in zip(self.weights, md)),)

    @staticmethod
    def size(g) -> int:
        return sum(g)

    @staticmethod
    def sub(g, h):
        out = tuple(a - b for a, b in zip(g, h))
        return out if min(out, default=0) >= 0 else None

    @staticmethod
    def add(g, h):
        return tuple(a + b for a, b in zip(g, h))

    def mul(self, u, v) -> dict:
        if u.is_one():
            return {v: 1}
        if v.is_one():
            return {u: 1}
        return self.R.nf_monomial(u.mul(v))


def _resolve(G: _Graded, D: int, d: int, acting, basis_of, act, first_map):
    """Generic stratified minimal resolution.

    ``acting(g)`` lists the monomials of the acting algebra in grade g,
    ``basis_of(gens, g)`` the basis of the free module on ``gens`` in grade g,
    ``act(a, b)`` multiplies a basis element by an acting monomial, and
    ``first_map`` sends basis elements of F_0 into the target being resolved.
    """
    zero = tuple(0 for _ in next(iter(G.by_grade)))
    grades = sorted(G.by_grade.keys() | _sums(G, d), key=lambda g: (G.size(g), g))
    # generators of F_0: one in grade zero
    gens = [[(zero, None)]]   # gens[i] = list of (grade, image vector in F_{i-1})
    table = {(0, zero): 1}

    def image(i, b):
        """Image of a basis element of F_i under the differential."""
        if i == 0:
            return first_map(b)
        *mon, g = b
        grade_g, vec = gens[i][g]
        out = {}
        for key, c in vec.items():
            for t, a in act(tuple(mon), key).items():
                _add(out, t, a * c)
        return out

    for i in range(1, D + 1):
        prev = gens[i - 1]
        new = []
        for g in grades:
            if G.size(g) > d:
                continue
            basis = basis_of(prev, g)
            if not basis:
                continue
            rows = {b: image(i - 1, b) for b in basis}
            ker = kernel(rows, basis)
            if not ker:
                continue
            span = Echelon()
            for h, (hg, vec) in enumerate(new):
                q = G.sub(g, hg)
                if q is None:
                    continue
                for a in acting(q):
                    moved = {}
                    for key, c in vec.items():
                        for t, w in act(a, key).items():
                            _add(moved, t, w * c)
                    span.add(moved)
            count = 0
            for z in ker:
                if span.add(z):
                    new.append((g, z))
                    count += 1
            if count:
                table[(i, g)] = count
        gens.append(new)
    return table


def _sums(G: _Graded, d: int) -> set:
    """All grades of total size <= d reachable as sums of monomial grades."""
    base = [g for g in G.by_grade if G.size(g) > 0]
    out = set(G.by_grade)
    frontier = set(out)
    while frontier:
        nxt = set()
        for g in frontier:
            for h in base:
                s = G.add(g, h)
                if G.size(s) <= d and s not in out:
                    nxt.add(s)
        out |= nxt
        frontier = nxt
    return out


def _add(out: dict, key, value):
    new = out.get(key, 0) + value
    if new:
        out[key] = new
    else:
        out.pop(key, None)


def tor_residue_field(R: ReductionSystem, D: int, d: int) -> TorTable:
    """dim Tor^A_i(k, k) in each grade, from a minimal free resolution of k by
    left A-modules."""
    G = _Graded(R, d)

    def acting(g):
        return [(m,) for m in G.by_grade.get(g, [])]

    def basis_of(gens, g):
        out = []
        for idx, (hg, _) in enumerate(gens):
            q = G.sub(g, hg)
            if q is None:
                continue
            for m in G.by_grade.get(q, []):
                out.append((m, idx))
        return out

    def act(a, b):
        (m,), (mm, idx) = a, b
        return {(nu, idx): c for nu, c in G.mul(m, mm).items()}

    def first_map(b):
        m, _ = b
        return {(): 1} if m.is_one() else {}

    table = _resolve(G, D, d, acting, basis_of, act, first_map)
    return TorTable(table, D, d, G.kind, G.weights)


def tor_bimodule(R: ReductionSystem, D: int, d: int) -> TorTable:
    """dim Tor^{A (x) A^op}_i(A, k) in each grade, from a minimal resolution of A
    over the enveloping algebra.  Grades add over both tensor factors."""
    G = _Graded(R, d)

    def pairs(g):
        out = []
        for gl, ls in G.by_grade.items():
            q = G.sub(g, gl)
            if q is None:
                continue
            for rm in G.by_grade.get(q, []):
                for lm in ls:
                    out.append((lm, rm))
        return out

    def acting(g):
        return pairs(g)

    def basis_of(gens, g):
        out = []
        for idx, (hg, _) in enumerate(gens):
            q = G.sub(g, hg)
            if q is None:
                continue
            for lm, rm in pairs(q):
                out.append((lm, rm, idx))
        return out

    def act(a, b):
        (lm, rm), (ll, rr, idx) = a, b
        out = {}
        for x, c in G.mul(lm, ll).items():
            for y, e in G.mul(rr, rm).items():
                _add(out, (x, y, idx), c * e)
        return out

    def first_map(b):
        lm, rm, _ = b
        return dict(G.mul(lm, rm))

    table = _resolve(G, D, d, acting, basis_of, act, first_map)
    return TorTable(table, D, d, G.kind, G.weights)


def free_complex_homology(C, R: ReductionSystem, d: int) -> dict:
    """k-dimension of the homology of a complex of free left A-modules.

    C is a based complex whose coefficients lie in A (the cells carry grades).
    Returns {(homological degree, total internal degree): dim} for internal
    degree <= d; an exact resolution of k shows only {(0, 0): 1} below the
    truncation edges.
    """
    R.require(d)
    alg = QuotientAlgebra(R)
    std = {0: [R.ring.one()]}
    for k in range(1, d + 1):
        std[k] = R.standard_monomials(k)
    out = {}
    for deg in range(d + 1):
        basis = {}
        for i in C.degrees():
            basis[i] = [(m, c) for c in C.cells(i)
                        for m in std.get(deg - sum(C.grade[c]), [])]

        def image(m, c):
            v = {}
            for t, w in C.diff[c].items():
                for mm, a in (alg.monomial(m) * w).terms.items():
                    _add(v, (mm, t), a)
            return v

        ranks = {i: rank([image(m, c) for m, c in b]) for i, b in basis.items()}
        for i, b in basis.items():
            h = len(b) - ranks[i] - ranks.get(i + 1, 0)
            if h:
                out[(i, deg)] = h
    return out


__all__ = ["TorTable", "free_complex_homology", "UngradedAlgebra", "find_grading", "tor_bimodule", "tor_residue_field"]
