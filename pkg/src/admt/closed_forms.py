"""Explicit resolutions: complete intersections (one- and two-sided) and the
Cartan complex of an exterior algebra, plus comparison with the reduced
resolutions up to relabeling and basis signs.

Closed-form cells are labeled ``("ci", I, l)`` with I a tuple of variable
indices (increasing in the order's precedence) and l the divided-power
exponents of t_1..t_s, or ``("cartan", l)`` with l the exponents of the
divided powers e_1..e_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product as iproduct

from .algebra import EnvelopingAlgebra, QuotientAlgebra
from .complexes import BasedComplex, _acc
from .groebner import ReductionSystem
from .monomials import Exponents, Word


class NotCompleteIntersection(ValueError):
    """The minimal generators of the initial ideal are not pairwise coprime."""


def is_complete_intersection(R: ReductionSystem) -> bool:
    if not R.ring.commutative:
        return False
    gens = R.mingen()
    for a, b in combinations(gens, 2):
        if any(x and y for x, y in zip(a, b)):
            return False
    return True


def _require_ci(R: ReductionSystem):
    if not R.ring.commutative:
        raise NotCompleteIntersection("complete intersections are defined for commutative rings")
    if not is_complete_intersection(R):
        raise NotCompleteIntersection(
            "initial ideal generators " + ", ".join(R.ring.format_monomial(m) for m in R.mingen())
            + " are not pairwise coprime")


class _CIData:
    """Variables in precedence order, the Gröbner elements f_j and their leading monomials."""

    def __init__(self, R: ReductionSystem, kind: str):
        _require_ci(R)
        self.R = R
        self.ring = R.ring
        self.n = R.ring.n
        self.order = R.ring.order
        self.vars = sorted(range(self.n), key=self.order.rank)   # largest first
        self.rank = {v: r for r, v in enumerate(self.vars)}
        self.alg = QuotientAlgebra(R)
        self.env = EnvelopingAlgebra(self.alg) if kind == "hochschild" else None
        self.kind = kind
        one = self.ring.field.one
        # f_j = lhs - rhs, listed by leading monomial in increasing order
        self.f = []
        for lhs, rhs in sorted(R.rules, key=lambda r: self.ring.key(r[0])):
            terms = {lhs: one}
            for m, c in rhs.terms.items():
                _acc(terms, m, -c)
            self.f.append((lhs, terms))
        self.s = len(self.f)

    def var(self, i):
        return Exponents.var(i, self.n)

    def x(self, i):
        """x_i, or T(x_i) = x_i (x) 1 - 1 (x) x_i two-sidedly."""
        m = self.var(i)
        if self.env is None:
            return self.alg.monomial(m)
        return self.env.pure(left=m) - self.env.pure(right=m)

    def smallest_variable(self, alpha) -> int:
        return max((i for i, a in enumerate(alpha) if a), key=self.rank.get)

    def t_coefficient(self, j: int, p: int):
        """T_p(f_j) one-sidedly, T_p(f_j)/T(x_p) two-sidedly."""
        _, terms = self.f[j]
        if self.env is None:
            out = self.alg.zero()
            for alpha, c in terms.items():
                if alpha.is_one() or self.smallest_variable(alpha) != p:
                    continue
                out = out + self.alg.monomial(alpha.quotient(self.var(p)), c)
            return out
        out = self.env.zero()
        r = self.rank[p]
        before = [v for v in self.vars if self.rank[v] < r]
        for alpha, c in terms.items():
            a = alpha[p]
            for k in range(a):
                left = [0] * self.n
                right = [0] * self.n
                for v in before:
                    left[v] = alpha[v]
                for v in self.vars[r + 1:]:
                    right[v] = alpha[v]
                left[p] = k
                right[p] = a - 1 - k
                out = out + self.env.pure(Exponents(left), Exponents(right), c)
        return out


def _ci_degree(data: _CIData, I, l):
    return len(I) + 2 * sum(l)


def _ci_grade(data: _CIData, I, l):
    g = [0] * data.n
    for i in I:
        g[i] += 1
    for (lhs, _), k in zip(data.f, l):
        for v in range(data.n):
            g[v] += k * lhs[v]
    return tuple(g)


def complete_intersection_resolution(R: ReductionSystem, D: int, d: int | None = None,
                                     kind: str = "bar") -> BasedComplex:
    """The complex on e_I t^(l) with the product-rule differential.

    ``kind="bar"`` resolves k over A, ``kind="hochschild"`` resolves A over
    A (x) A^op with T(x_i) and the divided differences T_p(f)/T(x_p).
    """
    data = _CIData(R, kind)
    n, s = data.n, data.s
    labels = []
    for r in range(0, min(n, D) + 1):
        for I in combinations(data.vars, r):
            I = tuple(sorted(I, key=data.rank.get))
            budget = (D - r) // 2
            for l in iproduct(range(budget + 1), repeat=s):
                if sum(l) > budget:
                    continue
                g = _ci_grade(data, I, l)
                if d is not None and sum(g) > d:
                    continue
                labels.append((I, l))
    labels.sort(key=lambda L: (_ci_degree(data, *L), sum(_ci_grade(data, *L)), L))
    C = BasedComplex("complete intersection " + ("resolution of k" if kind == "bar"
                                                  else "bimodule resolution"))
    C.one = data.env.one() if data.env else data.alg.one()
    for I, l in labels:
        C.add_cell(("ci", I, l), _ci_degree(data, I, l), _ci_grade(data, I, l))
    for I, l in labels:
        C.set_boundary(("ci", I, l), {k: v for k, v in _ci_boundary(data, I, l).items()
                                      if k in C})
    C.context = data
    return C


def _ci_boundary(data: _CIData, I, l) -> dict:
    out = {}
    r = len(I)
    rank = data.rank
    for m, i in enumerate(I):
        bigger = sum(1 for k in I if rank[k] > rank[i])
        coef = data.x(i) * (-1 if bigger % 2 else 1)
        _acc(out, ("ci", I[:m] + I[m + 1:], l), coef)
    for j, lj in enumerate(l):
        if not lj:
            continue
        lower = l[:j] + (lj - 1,) + l[j + 1:]
        for p in data.vars:
            if p in I:
                continue
            coef = data.t_coefficient(j, p)
            if not coef:
                continue
            # e_{i_r} ... e_{i_1} e_p brought into decreasing position
            smaller = sum(1 for k in I if rank[k] < rank[p])
            sign = (-1) ** (r + smaller)
            J = tuple(sorted(I + (p,), key=rank.get))
            _acc(out, ("ci", J, lower), coef * sign)
    return out


def ci_label(R: ReductionSystem, cell):
    """Closed-form label of a fully attached tuple of a complete intersection.

    Reads the cell left to right.  An entry v completes a letter t_j when
    x_q v = m_j for the most recent still unpaired variable entry x_q, where
    x_q is the largest variable of m_j; the variable entries left unpaired
    are the e_q.  Returns None when the cell does not parse.
    """
    ring = R.ring
    order = ring.order
    gens = sorted(R.mingen(), key=ring.key)
    l = [0] * len(gens)
    open_vars = []          # indices q of unpaired variable entries, in order
    for w in cell:
        hit = None
        for pos in range(len(open_vars) - 1, -1, -1):
            q = open_vars[pos]
            prod = Exponents.var(q, ring.n).mul(w)
            for j, m in enumerate(gens):
                if prod == m and order.largest_variable(m) == q:
                    hit = (pos, j)
                    break
            if hit:
                break
        if hit:
            del open_vars[hit[0]]
            l[hit[1]] += 1
        elif w.degree == 1:
            open_vars.append(w.index(1))
        else:
            return None
    if len(set(open_vars)) != len(open_vars):
        return None
    return ("ci", tuple(sorted(open_vars, key=order.rank)), tuple(l))


# exterior algebra

def cartan_resolution(R: ReductionSystem, D: int, kind: str = "bar") -> BasedComplex:
    """Divided-power complex on e_1..e_n for the exterior algebra presented by R.

    One-sidedly the differential lowers one exponent with coefficient x_t.
    Two-sidedly the coefficient is (x_t (x) 1) + (-1)^i (1 (x) x_t) for a
    cell of homological degree i, so that the square vanishes.
    """
    n = R.ring.n
    alg = QuotientAlgebra(R)
    env = EnvelopingAlgebra(alg) if kind == "hochschild" else None
    word = not R.ring.commutative
    labels = [l for total in range(D + 1) for l in _compositions(total, n)]
    C = BasedComplex("Cartan complex" if kind == "bar" else "two-sided Cartan complex")
    C.one = env.one() if env else alg.one()
    for l in labels:
        C.add_cell(("cartan", l), sum(l), l)

    def var(t):
        return Word((t,)) if word else Exponents.var(t, n)

    for l in labels:
        out = {}
        i = sum(l)
        for t in range(n):
            if not l[t]:
                continue
            lower = l[:t] + (l[t] - 1,) + l[t + 1:]
            if env is None:
                coef = alg.monomial(var(t))
            else:
                coef = env.pure(left=var(t)) + env.pure(right=var(t)) * (-1 if i % 2 else 1)
            _acc(out, ("cartan", lower), coef)
        C.set_boundary(("cartan", l), out)
    return C


def _compositions(total: int, n: int):
    if n == 1:
        yield (total,)
        return
    for a in range(total, -1, -1):
        for rest in _compositions(total - a, n - 1):
            yield (a,) + rest


def cartan_label(R: ReductionSystem, cell):
    n = R.ring.n
    counts = [0] * n
    for w in cell:
        if len(w) != 1:
            return None
        counts[w[0]] += 1
    return ("cartan", tuple(counts))


# comparison

@dataclass
class SignedMatch:
    ok: bool
    signs: dict
    witness: object = None

    def __bool__(self):
        return self.ok


def compare_up_to_signs(found: BasedComplex, expected: BasedComplex, relabel) -> SignedMatch:
    """Is there a bijection cell -> relabel(cell) and signs s(c) = +-1 with
    s(c) d(relabel c) = relabel(s d c)?  Signs are fixed degree by degree."""
    labels = {}
    for c in found.all_cells():
        L = relabel(c) if c else _zero_label(expected)
        if L is None or L not in expected:
            return SignedMatch(False, {}, ("unlabeled", c, L))
        if L in labels.values():
            return SignedMatch(False, {}, ("label clash", c, L))
        labels[c] = L
    missing = set(expected.all_cells()) - set(labels.values())
    if missing:
        return SignedMatch(False, {}, ("missing", sorted(missing, key=str)[0]))
    signs = {}
    for deg in found.degrees():
        for c in found.cells(deg):
            image = {}
            for t, w in found.diff[c].items():
                _acc(image, labels[t], w * signs[t])
            target = expected.diff[labels[c]]
            if image == target:
                signs[c] = 1
            elif image == {k: -v for k, v in target.items()}:
                signs[c] = -1
            else:
                return SignedMatch(False, signs, ("differential", c, image, target))
    return SignedMatch(True, signs)


def _zero_label(C: BasedComplex):
    return C.cells(0)[0]


__all__ = [
    "NotCompleteIntersection", "SignedMatch", "cartan_label", "cartan_resolution",
    "ci_label", "compare_up_to_signs", "complete_intersection_resolution",
    "is_complete_intersection",
]
