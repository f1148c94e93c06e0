"""Poincaré-Betti series: Betti tables, rational generating functions, the
chain automaton of an Anick resolution and the commutative word-counting bound.

Series live in Q(x_1..x_n, t) as sympy expressions.  Coefficient
extraction never goes through sympy's series machinery: numerator and
denominator are turned into exponent dictionaries and divided exactly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import sympy
from sympy.polys.matrices import DomainMatrix

from .bar import BarContext, _proper_divisors, enumerate_chains, _next_entries
from .complexes import graded_homology_ranks, specialize
from .groebner import ReductionSystem
from .monomials import Exponents, Word
from .oracle import find_grading


class UnsupportedSystem(ValueError):
    """The construction needs a finite, complete rewriting system."""


# Betti tables

@dataclass
class BettiTable:
    """(homological degree, multidegree) -> rank."""

    entries: dict = field(default_factory=dict)

    @classmethod
    def from_counts(cls, counts) -> "BettiTable":
        return cls({k: v for k, v in counts.items() if v})

    def totals(self) -> dict:
        out = Counter()
        for (i, _), k in self.entries.items():
            out[i] += k
        return dict(sorted(out.items()))

    def by_degree(self) -> dict:
        """(i, total internal degree) -> rank."""
        out = Counter()
        for (i, g), k in self.entries.items():
            out[(i, sum(g))] += k
        return dict(sorted(out.items()))

    def restrict(self, D: int | None = None, d: int | None = None) -> "BettiTable":
        return BettiTable({(i, g): k for (i, g), k in self.entries.items()
                           if (D is None or i <= D) and (d is None or sum(g) <= d)})

    def rows(self):
        return [(i, g, k) for (i, g), k in sorted(self.entries.items())]

    def collapse(self, weights) -> "BettiTable":
        """Replace each multidegree by its weighted degree (a 1-tuple).

        Grades that are already 1-tuples are kept, so tables produced under
        a weighted grading can be compared with fine ones.
        """
        if weights is None:
            return self
        n = len(weights)
        out = Counter()
        for (i, g), k in self.entries.items():
            key = (sum(a * b for a, b in zip(weights, g)),) if len(g) == n and n > 1 else g
            out[(i, key)] += k
        return BettiTable.from_counts(out)

    def dominated_by(self, other: "BettiTable") -> bool:
        """Coefficientwise <=."""
        return all(other.entries.get(key, 0) >= k for key, k in self.entries.items())

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def format_text(self) -> str:
        """Rows: internal degree; columns: homological degree."""
        table = self.by_degree()
        if not table:
            return "(empty)"
        hs = sorted({i for i, _ in table})
        ds = sorted({d for _, d in table})
        width = max(3, max(len(str(v)) for v in table.values()) + 1)
        head = "deg\\i" + "".join(f"{i:>{width}}" for i in hs)
        lines = [head]
        for d in ds:
            cells = "".join(f"{table.get((i, d), 0) or '.':>{width}}" for i in hs)
            lines.append(f"{d:>5}" + cells)
        lines.append("total" + "".join(f"{self.totals().get(i, 0):>{width}}" for i in hs))
        return "\n".join(lines)


def cells_table(cells, grade) -> BettiTable:
    """Count cells by (length, grade)."""
    return BettiTable.from_counts(Counter((len(c), tuple(grade(c))) for c in cells))


def resolution_betti(res, D: int | None = None) -> BettiTable:
    """Betti numbers read off a resolution: the cell counts when it is minimal,
    otherwise the graded homology of its specialization.

    Homology is dropped in the top homological degree and, for weighted
    gradings, in weights that could hide monomials beyond the degree bound.
    """
    C = res.complex
    if res.minimal:
        table = BettiTable.from_counts(Counter((C.degree_of[c], C.grade[c]) for c in C.all_cells()))
        return table.restrict(D)
    kind, weights = find_grading(res.context.R)
    ranks = graded_homology_ranks(specialize(C), weights=weights)
    top = max(C.degrees())
    keep = {k: v for k, v in ranks.items() if k[0] < top}
    if weights is not None:
        keep = {k: v for k, v in keep.items() if k[1][0] <= res.d * min(weights)}
    return BettiTable.from_counts(keep).restrict(D)


# rational series

def symbols_for(n: int):
    xs = sympy.symbols(" ".join(f"x{i}" for i in range(1, n + 1)), seq=True)
    return tuple(xs), sympy.Symbol("t")


@dataclass
class RationalSeries:
    """numerator / denominator in x_1..x_n, t with denominator(0) = 1.

    ``valid_to`` records (D, d) when the function is only known to agree with
    the true series for homological degree <= D and internal degree <= d.
    """

    numerator: sympy.Expr
    denominator: sympy.Expr
    n: int
    valid_to: tuple | None = None

    @classmethod
    def from_expr(cls, expr, n: int, valid_to=None) -> "RationalSeries":
        num, den = sympy.fraction(sympy.cancel(sympy.together(expr)))
        xs, t = symbols_for(n)
        c0 = den.subs({s: 0 for s in xs + (t,)})
        if c0 == 0:
            raise ZeroDivisionError("denominator vanishes at the origin")
        return cls(sympy.expand(num / c0), sympy.expand(den / c0), n, valid_to)

    @property
    def expr(self):
        return self.numerator / self.denominator

    def __str__(self):
        return self.format()

    def format(self, names=None) -> str:
        """``numerator / denominator`` with ring variable names substituted for x_i."""
        num, den = self.numerator, self.denominator
        if names is not None:
            xs, t = symbols_for(self.n)
            hom = "t" if "t" not in names else "t_"
            sub = dict(zip(xs, (sympy.Symbol(v) for v in names)))
            sub[t] = sympy.Symbol(hom)
            num, den = num.xreplace(sub), den.xreplace(sub)
        return f"({_fmt(num)}) / ({_fmt(den)})"

    def truncate(self, d: int, D: int | None = None) -> BettiTable:
        return series_truncate(self, d, D)


def _fmt(e) -> str:
    return str(e).replace("**", "^")


def _exponent_dict(expr, n: int) -> dict:
    """{(a_1..a_n, k): coefficient} of a polynomial in x_1..x_n, t."""
    xs, t = symbols_for(n)
    poly = sympy.Poly(sympy.expand(expr), *xs, t)
    out = {}
    for mon, c in poly.terms():
        out[tuple(mon)] = Fraction(int(c.p), int(c.q))
    return out


def series_truncate(S: RationalSeries, d: int, D: int | None = None) -> BettiTable:
    """Taylor coefficients with internal degree <= d (and t-degree <= D).

    Exact division: c_a = N_a - sum_{b != 0} Den_b c_{a - b}, visiting exponents
    by increasing x-degree plus t-degree, which is positive on every
    non-constant denominator term.
    """
    n = S.n
    num = _exponent_dict(S.numerator, n)
    den = _exponent_dict(S.denominator, n)
    zero = (0,) * (n + 1)
    if den.get(zero) != 1:
        raise ZeroDivisionError("denominator must have constant term 1")
    tail = [(b, c) for b, c in den.items() if b != zero]

    def inside(a):
        return sum(a[:n]) <= d and (D is None or a[n] <= D)

    # exponents reachable from numerator terms by adding denominator exponents
    todo = {a for a in num if inside(a)}
    support = set()
    while todo:
        a = todo.pop()
        if a in support:
            continue
        support.add(a)
        for b, _ in tail:
            s = tuple(x + y for x, y in zip(a, b))
            if inside(s) and s not in support:
                todo.add(s)
    coef = {}
    for a in sorted(support, key=lambda e: (sum(e), e)):
        c = num.get(a, Fraction(0))
        for b, w in tail:
            prev = tuple(x - y for x, y in zip(a, b))
            if min(prev) >= 0:
                c -= w * coef.get(prev, 0)
        if c:
            coef[a] = c
    out = {}
    for a, c in coef.items():
        if c.denominator != 1:
            raise ValueError(f"non-integral coefficient {c} at {a}")
        out[(a[n], a[:n])] = int(c)
    return BettiTable(out)


def _transfer_sum(M, start, n: int):
    """(I - M)^{-1} applied to the all-ones vector, paired with ``start``.

    Solved over the fraction field Q(x, t); generic symbolic elimination is
    far slower on these matrices.
    """
    size = M.shape[0]
    if not size:
        return sympy.Integer(0)
    xs, t = symbols_for(n)
    K = sympy.QQ.frac_field(*xs, t)
    A = DomainMatrix.from_Matrix(sympy.eye(size) - M).convert_to(K)
    b = DomainMatrix.from_Matrix(sympy.ones(size, 1)).convert_to(K)
    y = A.lu_solve(b).to_Matrix()
    return sum((start[k] * y[k] for k in range(size)), sympy.Integer(0))


# chain automaton (word case)

@dataclass
class ChainAutomaton:
    """States are chain entries; reading an entry moves to it.

    ``initial`` lists the entries readable from the start state (the
    variables), ``transitions[v]`` the entries that may follow v in a chain.
    Every entry state is accepting; missing transitions go to the error state.
    """

    ring: object
    initial: list
    states: list
    transitions: dict
    complete_to: int | None = None

    def weight(self, v) -> tuple:
        return v.multidegree(self.ring.n)

    def accepts(self, cell) -> bool:
        if not cell or cell[0] not in self.initial:
            return False
        return all(b in self.transitions.get(a, ()) for a, b in zip(cell, cell[1:]))

    def language(self, D: int, d: int) -> list:
        out = []
        stack = [((v,), len(v)) for v in self.initial if len(v) <= d]
        while stack:
            cell, deg = stack.pop()
            out.append(cell)
            if len(cell) == D:
                continue
            for v in self.transitions.get(cell[-1], ()):
                if deg + len(v) <= d:
                    stack.append((cell + (v,), deg + len(v)))
        return out


def build_automaton(R: ReductionSystem, allow_truncated: bool = False) -> ChainAutomaton:
    """Automaton whose accepted words are exactly the Anick chains.

    Entries following a chain entry t are the tails v with t v ending in a
    minimal generator that overlaps t (non-empty overlap) and with every
    shorter extension standard; tails are proper suffixes of generators, so
    the state set is finite for a finite Gröbner basis.
    """
    ring = R.ring
    if ring.commutative:
        raise UnsupportedSystem("the chain automaton is defined for word rings")
    if not R.fully_complete and not allow_truncated:
        raise UnsupportedSystem(
            f"rewriting system is only complete up to degree {R.complete_up_to_degree}; "
            "pass allow_truncated=True to use it below that degree")
    mingen = R.mingen()
    initial = [Word((a,)) for a in range(ring.n)]
    states, transitions = [], {}
    todo = list(initial)
    while todo:
        v = todo.pop(0)
        if v in transitions:
            continue
        states.append(v)
        transitions[v] = _next_entries(R, v, mingen)
        todo.extend(w for w in transitions[v] if w not in transitions)
    return ChainAutomaton(ring, initial, states, transitions,
                          None if R.fully_complete else R.complete_up_to_degree)


def automaton_series(aut: ChainAutomaton) -> RationalSeries:
    """F = 1 + u^T (I - M)^{-1} 1 where M[v][w] is the weight of w when w may follow v."""
    n = aut.ring.n
    xs, t = symbols_for(n)
    index = {v: k for k, v in enumerate(aut.states)}

    def wt(v):
        expr = t
        for x, a in zip(xs, aut.weight(v)):
            expr *= x ** a
        return expr

    size = len(aut.states)
    M = sympy.zeros(size, size)
    for v, nxt in aut.transitions.items():
        for w in nxt:
            M[index[v], index[w]] += wt(w)
    start = [0] * size
    for v in aut.initial:
        start[index[v]] = wt(v)
    total = 1 + _transfer_sum(M, start, n)
    valid = None if aut.complete_to is None else (None, aut.complete_to)
    return RationalSeries.from_expr(total, n, valid)


# commutative word-counting bound

def minimal_fully_attached(R: ReductionSystem, D: int, d: int) -> list:
    """Minimal fully attached tuples of length <= D and internal degree <= d
    that survive as letters of the word decomposition.

    A pair (x_q, m / x_q) with m a minimal generator and x_q its largest
    variable starts each tuple.  An entry w may be appended when x_{w_1} is
    at least the largest variable of w, the last entry times w is reducible
    or splits as u v with u larger than the last entry and the tuple ending
    in u attached, and no proper divisor of w already qualifies.  Tuples
    whose new entry is a variable not smaller than x_{w_1} satisfy the
    definition but are cut when cells are split into letters: they count for
    the conditions above and are neither returned nor extended.
    """
    ring = R.ring
    if not ring.commutative:
        raise UnsupportedSystem("minimal fully attached tuples are defined for commutative rings")
    order = ring.order
    n = ring.n
    rank = order.rank
    key = ring.key

    def big(m):
        return order.largest_variable(m)

    R.require(d)
    std = [m for k in range(1, d + 1) for m in R.standard_monomials(k)]
    level = []
    for m in R.mingen():
        q = big(m)
        x = Exponents.var(q, n)
        if 2 <= m.degree <= d:
            level.append((x, m.quotient(x)))
    attached = set(level)
    letters = list(level)

    def qualifies(prefix, w):
        a = prefix[-1]
        p = a.mul(w)
        if not R.is_standard(p):
            return True
        for u in _proper_divisors(p):
            if key(u) > key(a) and prefix[:-1] + (u,) in attached:
                return True
        return False

    length = 2
    while level and length < D:
        nxt, cut = [], []
        for T in level:
            deg = sum(w.degree for w in T)
            head = rank(big(T[0]))
            for w in std:
                if deg + w.degree > d or rank(big(w)) < head:
                    continue
                if not qualifies(T, w):
                    continue
                if any(qualifies(T, v) for v in _proper_divisors(w)):
                    continue
                if w.degree == 1 and rank(big(w)) == head:
                    cut.append(T + (w,))
                else:
                    nxt.append(T + (w,))
        attached |= set(nxt) | set(cut)
        letters += nxt
        level = nxt
        length += 1
    return sorted(letters, key=lambda T: (len(T), tuple(key(w) for w in T)))


def commutative_upper_bound(R: ReductionSystem, D: int, d: int) -> RationalSeries:
    """prod (1 + x_i t) times the word-counting function of the letters.

    Letters are the minimal fully attached tuples found within the bounds; a
    letter may follow another when its first variable is not smaller.  The
    result agrees with the true bound for homological degree <= D and
    internal degree <= d.
    """
    n = R.ring.n
    xs, t = symbols_for(n)
    rank = R.ring.order.rank
    letters = minimal_fully_attached(R, D, d)

    def wt(T):
        expr = t ** len(T)
        g = [0] * n
        for w in T:
            for i, a in enumerate(w.multidegree(n)):
                g[i] += a
        for x, a in zip(xs, g):
            expr *= x ** a
        return expr

    def first(T):
        return rank(T[0].index(1))

    size = len(letters)
    if size:
        M = sympy.zeros(size, size)
        for a, Ta in enumerate(letters):
            for b, Tb in enumerate(letters):
                if first(Tb) <= first(Ta):
                    M[a, b] = wt(Tb)
        F = 1 + _transfer_sum(M, [wt(T) for T in letters], n)
    else:
        F = sympy.Integer(1)
    koszul = sympy.Integer(1)
    for x in xs:
        koszul *= 1 + x * t
    return RationalSeries.from_expr(koszul * F, n, (D, d))


# closed forms

CLOSED_FORMS = ("complete-intersection", "cartan", "polynomial-hochschild",
                "exterior-hochschild", "hochschild-complete-intersection")


def closed_form_series(kind: str, n: int, monomials=()) -> RationalSeries:
    """The displayed rational functions.

    ``monomials`` are the leading monomials (exponent tuples) for the
    complete-intersection kinds.
    """
    xs, t = symbols_for(n)
    koszul = sympy.Integer(1)
    for x in xs:
        koszul *= 1 + x * t
    if kind in ("complete-intersection", "hochschild-complete-intersection"):
        den = sympy.Integer(1)
        for m in monomials:
            term = sympy.Integer(1)
            for x, a in zip(xs, m):
                term *= x ** a
            den *= 1 - term * t ** 2
        return RationalSeries.from_expr(koszul / den, n)
    if kind == "polynomial-hochschild":
        return RationalSeries.from_expr(koszul, n)
    if kind in ("cartan", "exterior-hochschild"):
        den = sympy.Integer(1)
        for x in xs:
            den *= 1 - x * t
        return RationalSeries.from_expr(1 / den, n)
    raise ValueError(f"unknown closed form {kind!r}; expected one of {', '.join(CLOSED_FORMS)}")


def hilbert_table(R: ReductionSystem, d: int) -> dict:
    """Multidegree -> dim A_alpha for |alpha| <= d."""
    R.require(d)
    out = Counter()
    n = R.ring.n
    out[(0,) * n] += 1
    for k in range(1, d + 1):
        for m in R.standard_monomials(k):
            out[tuple(m.multidegree(n))] += 1
    return dict(out)


def chain_table(R: ReductionSystem, D: int, d: int, flavor: str | None = None) -> BettiTable:
    """Critical cells (including the empty cell) counted by (length, multidegree)."""
    ctx = BarContext(R, flavor)
    cells = [()] + enumerate_chains(R, ctx.flavor, D, d)
    return cells_table(cells, ctx.grade)


__all__ = [
    "BettiTable", "ChainAutomaton", "CLOSED_FORMS", "RationalSeries", "UnsupportedSystem",
    "automaton_series", "build_automaton", "cells_table", "chain_table", "closed_form_series",
    "commutative_upper_bound", "hilbert_table", "minimal_fully_attached", "resolution_betti",
    "series_truncate", "symbols_for",
]
