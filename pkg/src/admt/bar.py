"""Normalized Bar complexes, their Morse matchings and the reduced resolutions.

A cell is a tuple of standard monomials ``(w1, ..., wi)``; the empty tuple is
the generator of degree 0.  The same machinery serves the one-sided Bar
resolution of the residue field (coefficients in A) and the two-sided
Hochschild resolution (coefficients in A (x) A^op); ``kind`` selects which.

The matching is evaluated lazily: ``BarContext.classify`` decides for any
single cell whether it is critical, or matched and with whom, by walking the
coordinate positions left to right.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import EnvelopingAlgebra, QuotientAlgebra
from .complexes import BasedComplex, _acc, check_boundary_squared, specialize
from .groebner import ReductionSystem
from .monomials import Exponents, Word
from .morse import Matching, morse_complex
from .scalars import invert_unit

FLAVORS = ("commutative", "anick")
KINDS = ("bar", "hochschild")


class FlavorError(ValueError):
    """Flavor incompatible with the ring (commutative needs Exponents, anick needs words)."""


def default_flavor(R: ReductionSystem) -> str:
    return "commutative" if R.ring.commutative else "anick"


class BarContext:
    """Shared state for one algebra: products, boundaries and the matching predicate."""

    def __init__(self, R: ReductionSystem, flavor: str | None = None, kind: str = "bar"):
        flavor = flavor or default_flavor(R)
        if flavor not in FLAVORS:
            raise FlavorError(f"unknown flavor {flavor!r}")
        if (flavor == "commutative") != R.ring.commutative:
            raise FlavorError(f"flavor {flavor!r} does not fit the ring {R.ring.describe()}")
        if kind not in KINDS:
            raise ValueError(f"unknown complex kind {kind!r}")
        self.R = R
        self.ring = R.ring
        self.flavor = flavor
        self.kind = kind
        self.alg = QuotientAlgebra(R)
        self.env = EnvelopingAlgebra(self.alg) if kind == "hochschild" else None
        self.key = R.ring.key
        self._surv = {}
        self._lower = {}
        self._class = {}
        self._factors = {}

    # coefficients
    @property
    def one(self):
        return self.env.one() if self.env else self.alg.one()

    def scalar(self, c):
        return self.env.scalar(c) if self.env else self.alg.scalar(c)

    def left_coefficient(self, w):
        return self.env.pure(left=w) if self.env else self.alg.monomial(w)

    def right_coefficient(self, w):
        return self.env.pure(right=w)

    # cell data
    def product(self, u, v) -> dict:
        return self.alg.mul_monomials(u, v)

    def grade(self, cell) -> tuple:
        n = self.ring.n
        out = [0] * n
        for w in cell:
            for i, a in enumerate(w.multidegree(n)):
                out[i] += a
        return tuple(out)

    @staticmethod
    def internal_degree(cell) -> int:
        return sum(w.degree for w in cell)

    def format_cell(self, cell) -> str:
        fmt = self.ring.format_monomial
        return "[" + "|".join(fmt(w) for w in cell) + "]"

    def cell_key(self, cell):
        return (len(cell), self.internal_degree(cell), tuple(self.key(w) for w in cell))

    def boundary_terms(self, cell):
        """(target, coefficient, source, position) for each summand of the differential.

        ``source`` is ``"peel"`` (left factor split off), ``"merge"`` (two
        neighbouring entries multiplied; position j merges entries j, j+1) or
        ``"right"`` (right factor split off, two-sided complex only).
        """
        i = len(cell)
        if i == 0:
            return []
        terms = [(cell[1:], self.left_coefficient(cell[0]), "peel", 0)]
        for j in range(1, i):
            sign = -1 if j % 2 else 1
            for nu, a in self.product(cell[j - 1], cell[j]).items():
                if nu.is_one():
                    continue
                target = cell[:j - 1] + (nu,) + cell[j + 1:]
                terms.append((target, self.scalar(sign * a), "merge", j))
        if self.env is not None:
            sign = -1 if i % 2 else 1
            terms.append((cell[:-1], self.right_coefficient(cell[-1]) * sign, "right", i))
        return terms

    def boundary(self, cell) -> dict:
        out = {}
        for target, c, _, _ in self.boundary_terms(cell):
            _acc(out, target, c)
        return out

    # matching predicate
    def proper_left_factors(self, w) -> list:
        """(u, w/u) with u a proper left factor, largest u first."""
        hit = self._factors.get(w)
        if hit is None:
            if isinstance(w, Word):
                hit = [(Word(w[:k]), Word(w[k:])) for k in range(1, len(w))]
            else:
                hit = []
                for u in _proper_divisors(w):
                    hit.append((u, w.quotient(u)))
            hit.sort(key=lambda uv: self.key(uv[0]), reverse=True)
            self._factors[w] = hit
        return hit

    @staticmethod
    def _strict_factor(v, u) -> bool:
        """v is a proper left factor of u."""
        if v == u:
            return False
        if isinstance(u, Word):
            return len(v) < len(u) and u[:len(v)] == v
        return v.divides(u)

    def surv(self, j: int, head: tuple) -> bool:
        """Does a cell starting with ``head`` survive the matchings M_1..M_j?

        Only the first j+1 entries matter.
        """
        j = min(j, len(head))
        if j == 0:
            return True
        head = head[:j + 1]
        key = (j, head)
        hit = self._surv.get(key)
        if hit is not None:
            return hit
        ok = (self.surv(j - 1, head[:j])
              and self.lower(j, head[:j]) is None
              and not (len(head) > j and self._is_upper(j, head)))
        self._surv[key] = ok
        return ok

    def lower(self, j: int, head: tuple):
        """Left factor u by which entry j is split in M_j, or None."""
        key = (j, head)
        if key in self._lower:
            return self._lower[key]
        prefix, w = head[:j - 1], head[j - 1]
        alive = [u for u, _ in self.proper_left_factors(w) if self.surv(j - 1, prefix + (u,))]
        best = None
        for u in alive:  # largest first
            if not any(self._strict_factor(v, u) for v in alive):
                best = u
                break
        self._lower[key] = best
        return best

    def _is_upper(self, j: int, head: tuple) -> bool:
        a, b = head[j - 1], head[j]
        w = a.mul(b)
        if not self.R.is_standard(w):
            return False
        merged = head[:j - 1] + (w,)
        return self.surv(j - 1, merged) and self.lower(j, merged) == a

    def classify(self, cell):
        """("critical",), ("lower", j, u) or ("upper", j)."""
        hit = self._class.get(cell)
        if hit is None:
            hit = ("critical",)
            for j in range(1, len(cell) + 1):
                u = self.lower(j, cell[:j])
                if u is not None:
                    hit = ("lower", j, u)
                    break
                if j < len(cell) and self._is_upper(j, cell[:j + 1]):
                    hit = ("upper", j)
                    break
            self._class[cell] = hit
        return hit

    def is_critical(self, cell) -> bool:
        return self.classify(cell)[0] == "critical"

    def upper_partner(self, cell, j: int, u):
        w = cell[j - 1]
        rest = Word(w[len(u):]) if isinstance(w, Word) else w.quotient(u)
        return cell[:j - 1] + (u, rest) + cell[j:]

    def partner(self, cell):
        """Matched partner of a cell (either direction), or None."""
        c = self.classify(cell)
        if c[0] == "lower":
            return self.upper_partner(cell, c[1], c[2])
        if c[0] == "upper":
            j = c[1]
            return cell[:j - 1] + (cell[j - 1].mul(cell[j]),) + cell[j + 1:]
        return None


def _proper_divisors(w: Exponents):
    from itertools import product
    for e in product(*(range(a + 1) for a in w)):
        if any(e) and tuple(e) != tuple(w):
            yield Exponents(e)


# materialized complexes

def _standard_by_degree(R, d):
    R.require(d)
    return {k: R.standard_monomials(k) for k in range(1, d + 1)}


def _tuples(std, D, d, allow_one=None):
    """All tuples of length <= D over the given monomials, internal degree <= d."""
    out = [()]
    frontier = [((), 0)]
    for _ in range(D):
        nxt = []
        for cell, deg in frontier:
            if allow_one is not None:
                nxt.append((cell + (allow_one,), deg))
            for k in range(1, d - deg + 1):
                for w in std[k]:
                    nxt.append((cell + (w,), deg + k))
        out.extend(c for c, _ in nxt)
        frontier = nxt
    return out


def normalized_bar(R: ReductionSystem, D: int, d: int, kind: str = "bar",
                   flavor: str | None = None) -> BasedComplex:
    """The normalized Bar (or Hochschild) complex truncated at homological degree D
    and internal degree d."""
    ctx = BarContext(R, flavor, kind)
    return _materialize(ctx, _tuples(_standard_by_degree(R, d), D, d), "normalized " + kind)


def _materialize(ctx: BarContext, cells, name) -> BasedComplex:
    C = BasedComplex(name)
    C.one = ctx.one
    C.context = ctx
    for cell in sorted(cells, key=ctx.cell_key):
        C.add_cell(cell, len(cell), ctx.grade(cell))
    for cell in C.all_cells():
        C.set_boundary(cell, ctx.boundary(cell))
    return C


def bar_matching(C: BasedComplex, ctx: BarContext) -> Matching:
    """The coordinate-wise matching restricted to the cells present in C."""
    M = Matching()
    for cell in C.all_cells():
        c = ctx.classify(cell)
        if c[0] == "lower":
            up = ctx.upper_partner(cell, c[1], c[2])
            if up in C:
                M.add(up, cell)
    return M


def commutative_matching(C: BasedComplex, R: ReductionSystem) -> Matching:
    ctx = getattr(C, "context", None) or BarContext(R, "commutative")
    return bar_matching(C, ctx)


def anick_matching(C: BasedComplex, R: ReductionSystem) -> Matching:
    ctx = getattr(C, "context", None) or BarContext(R, "anick")
    return bar_matching(C, ctx)


# unnormalized complex and the matching onto the normalized one

def unnormalized_bar(R: ReductionSystem, D: int, d: int, kind: str = "bar") -> BasedComplex:
    """Bar (or two-sided Hochschild) complex over the basis {1} union G."""
    ctx = BarContext(R, None, kind)
    one = R.ring.one()
    cells = _tuples(_standard_by_degree(R, d), D, d, allow_one=one)
    C = BasedComplex("bar over 1 and G" if kind == "bar" else "hochschild over 1 and G")
    C.one = ctx.one
    for cell in sorted(cells, key=lambda c: (len(c), ctx.internal_degree(c),
                                             tuple(ctx.key(w) for w in c))):
        C.add_cell(cell, len(cell), ctx.grade(cell))
    for cell in C.all_cells():
        C.set_boundary(cell, _unnormalized_boundary(ctx, cell))
    return C


def _unnormalized_boundary(ctx: BarContext, cell) -> dict:
    i = len(cell)
    out = {}
    if i == 0:
        return out
    w1 = cell[0]
    _acc(out, cell[1:], ctx.left_coefficient(w1) if not w1.is_one() else ctx.one)
    for j in range(1, i):
        sign = -1 if j % 2 else 1
        for nu, a in ctx.product(cell[j - 1], cell[j]).items():
            _acc(out, cell[:j - 1] + (nu,) + cell[j + 1:], ctx.scalar(sign * a))
    last = cell[-1]
    sign = -1 if i % 2 else 1
    if ctx.env is not None:
        _acc(out, cell[:-1], ctx.right_coefficient(last) * sign)
    elif last.is_one():
        # the augmentation of the last entry acting on k
        _acc(out, cell[:-1], ctx.scalar(sign))
    return out


def _first_unit_run(cell):
    """(start, length) of the first maximal run of unit entries, or None."""
    for s, w in enumerate(cell):
        if w.is_one():
            e = s
            while e < len(cell) and cell[e].is_one():
                e += 1
            return s, e - s
    return None


def normalization_matching(C: BasedComplex) -> Matching:
    """Match cells whose first run of unit entries has even length r with the
    cell where that run has length r - 1."""
    M = Matching()
    for cell in C.all_cells():
        run = _first_unit_run(cell)
        if run is None or run[1] % 2:
            continue
        s, _ = run
        lower = cell[:s] + cell[s + 1:]
        if lower in C:
            M.add(cell, lower)
    return M


# chain enumeration

def anick_chains(R: ReductionSystem, D: int, d: int) -> list:
    """Anick chains by overlap extension of the minimal initial generators."""
    ring = R.ring
    if ring.commutative:
        raise FlavorError("Anick chains need a word ring")
    R.require(d)
    mingen = R.mingen()
    out = []
    frontier = [(Word((a,)),) for a in range(ring.n)]
    frontier = [c for c in frontier if 1 <= d]
    length = 1
    while frontier and length <= D:
        out.extend(frontier)
        if length == D:
            break
        nxt = []
        for cell in frontier:
            deg = sum(len(w) for w in cell)
            for v in _next_entries(R, cell[-1], mingen):
                if deg + len(v) <= d:
                    nxt.append(cell + (v,))
        frontier = nxt
        length += 1
    return out


def _next_entries(R, t: Word, mingen) -> list:
    found = set()
    for m in mingen:
        for k in range(1, min(len(t), len(m) - 1) + 1):
            if t[len(t) - k:] != m[:k]:
                continue
            v = Word(m[k:])
            if all(R.is_standard(Word(t + v[:p])) for p in range(1, len(v))):
                found.add(v)
    return sorted(found, key=R.ring.key)


def chain_generators(R: ReductionSystem, cell) -> list:
    """The minimal generators linking consecutive entries of an Anick chain."""
    mingen = R.mingen()
    out = []
    for t, v in zip(cell, cell[1:]):
        word = Word(t + v)
        hits = [m for m in mingen if len(m) <= len(word) and word[len(word) - len(m):] == m
                and len(m) > len(v)]
        out.append(hits[0])
    return out


def critical_cells(ctx: BarContext, D: int, d: int) -> list:
    """Critical cells of the lazy matching, enumerated by depth-first search.

    Prefixes that already fail the predicate are pruned, since a failure at
    position j only depends on the first j + 1 entries.
    """
    std = _standard_by_degree(ctx.R, d)
    out = [()]

    def walk(head, deg):
        h = len(head)
        if h == D:
            return
        for k in range(1, d - deg + 1):
            for w in std[k]:
                cell = head + (w,)
                if not ctx.surv(h, cell):
                    continue
                if ctx.surv(h + 1, cell):
                    out.append(cell)
                walk(cell, deg + k)

    walk((), 0)
    out.sort(key=ctx.cell_key)
    return out


def enumerate_chains(R: ReductionSystem, flavor: str | None = None, D: int = 5, d: int = 10,
                     method: str = "auto") -> list:
    """Fully attached tuples of homological degree 1..D and internal degree <= d.

    ``method`` is ``"overlap"`` (Anick flavor only), ``"matching"`` or
    ``"auto"`` (overlap for Anick, matching otherwise).
    """
    flavor = flavor or default_flavor(R)
    ctx = BarContext(R, flavor)
    if method == "auto":
        method = "overlap" if flavor == "anick" else "matching"
    if method == "overlap":
        if flavor != "anick":
            raise FlavorError("overlap enumeration is only defined for the Anick flavor")
        cells = anick_chains(R, D, d)
    else:
        cells = [c for c in critical_cells(ctx, D, d) if c]
    return sorted(cells, key=ctx.cell_key)


# reduction differential

@dataclass
class ReductionStep:
    kind: str          # "I", "II", "III", "peel", "right-peel", "right-III"
    position: int
    cell: tuple
    factor: object


@dataclass
class ReductionTrace:
    start: tuple
    end: tuple
    steps: list = field(default_factory=list)
    coefficient: object = None


_LANDING = {
    ("merge", "lower"): "I",
    ("merge", "critical"): "II",
    ("peel", "lower"): "III",
    ("peel", "critical"): "peel",
    ("right", "lower"): "right-III",
    ("right", "critical"): "right-peel",
}


class Reducer:
    """Morse differential on critical cells by memoized elimination of matched cells."""

    def __init__(self, ctx: BarContext, scalar_only: bool = False):
        self.ctx = ctx
        self.scalar_only = scalar_only
        self._psi = {}

    def _terms(self, cell):
        terms = self.ctx.boundary_terms(cell)
        if self.scalar_only:
            terms = [t for t in terms if t[2] == "merge"]
        return terms

    def _lift(self, Y):
        """(partner, factor, remaining terms) for a lower cell Y."""
        ctx = self.ctx
        _, j, u = ctx.classify(Y)
        alpha = ctx.upper_partner(Y, j, u)
        full = ctx.boundary(alpha)
        factor = -invert_unit(full[Y])
        rest = {}
        for target, c, _, _ in self._terms(alpha):
            if target != Y:
                _acc(rest, target, c)
        return alpha, factor, rest

    def psi(self, Y) -> dict:
        """Image of a cell of degree l - 1 on the critical cells."""
        memo = self._psi
        if Y in memo:
            return memo[Y]
        stack = [Y]
        pending = {}
        while stack:
            cell = stack[-1]
            if cell in memo:
                stack.pop()
                continue
            kind = self.ctx.classify(cell)[0]
            if kind == "critical":
                memo[cell] = {cell: self.ctx.one}
                stack.pop()
                continue
            if kind == "upper":
                memo[cell] = {}
                stack.pop()
                continue
            if cell not in pending:
                pending[cell] = self._lift(cell)
            _, factor, rest = pending[cell]
            missing = [t for t in rest if t not in memo]
            if missing:
                stack.extend(missing)
                continue
            out = {}
            for t, c in rest.items():
                coef = factor * c
                for f, a in memo[t].items():
                    _acc(out, f, coef * a)
            memo[cell] = out
            del pending[cell]
            stack.pop()
        return memo[Y]

    def differential(self, e) -> dict:
        out = {}
        for target, c, _, _ in self._terms(e):
            for f, a in self.psi(target).items():
                _acc(out, f, c * a)
        return out


def reduction_differential(e, R: ReductionSystem | None = None, flavor: str | None = None,
                           kind: str = "bar", ctx: BarContext | None = None) -> list:
    """[(f, [e:f])] for a fully attached tuple e, in cell order."""
    ctx = ctx or BarContext(R, flavor, kind)
    d = Reducer(ctx).differential(tuple(e))
    return sorted(d.items(), key=lambda fc: ctx.cell_key(fc[0]))


def reduction_traces(ctx: BarContext, e, limit: int = 10000) -> list:
    """All reduction sequences from e, each with its accumulated coefficient.

    Exponential in general; meant for small examples and for checking that
    the memoized differential equals the sum over sequences.
    """
    e = tuple(e)
    out = []

    def walk(alpha, skip, coef, steps):
        for target, c, source, pos in ctx.boundary_terms(alpha):
            if target == skip:
                continue
            cls = ctx.classify(target)
            if cls[0] == "upper":
                continue
            step_kind = _LANDING[(source, cls[0])]
            if cls[0] == "critical":
                out.append(ReductionTrace(e, target, steps + [ReductionStep(step_kind, pos, target, c)],
                                          coef * c))
                if len(out) > limit:
                    raise RuntimeError("too many reduction sequences")
                continue
            beta = ctx.upper_partner(target, cls[1], cls[2])
            factor = -invert_unit(ctx.boundary(beta)[target])
            walk(beta, target, coef * c * factor,
                 steps + [ReductionStep(step_kind, pos, beta, c * factor)])

    walk(e, None, ctx.one, [])
    return out


def sum_traces(traces) -> dict:
    out = {}
    for tr in traces:
        _acc(out, tr.end, tr.coefficient)
    return out


# resolutions

@dataclass
class Resolution:
    complex: BasedComplex
    context: BarContext
    D: int
    d: int
    minimal: bool
    cross_checked: bool = False

    @property
    def flavor(self):
        return self.context.flavor

    def cells(self, degree):
        return self.complex.cells(degree)

    def rank_table(self) -> dict:
        return self.complex.rank_table()

    def differential(self, cell) -> dict:
        return self.complex.boundary(cell)

    def format_cell(self, cell) -> str:
        return self.context.format_cell(cell)


class CrossCheckFailure(AssertionError):
    def __init__(self, cell, expected, found):
        self.cell = cell
        self.expected = expected
        self.found = found
        super().__init__(f"differential of {cell!r} differs from the path-sum differential")


class BoundaryNotClosed(AssertionError):
    def __init__(self, cell, grade):
        self.cell = cell
        self.grade = grade
        super().__init__(f"boundary squared is nonzero on {cell!r} (multidegree {grade})")


def build_resolution(R: ReductionSystem, flavor: str | None = None, D: int = 5, d: int = 10,
                     kind: str = "bar", cross_check: bool = False,
                     check: bool = True) -> Resolution:
    """Free resolution on the fully attached tuples (of k, or of A for ``kind="hochschild"``).

    With ``cross_check`` the differential is compared against the generic
    path-sum Morse differential of the materialized truncated complex.
    """
    ctx = BarContext(R, flavor, kind)
    R.require(d)
    cells = [()] + enumerate_chains(R, ctx.flavor, D, d)
    C = BasedComplex(("resolution of k" if kind == "bar" else "bimodule resolution of A")
                     + f" ({ctx.flavor})")
    C.one = ctx.one
    C.context = ctx
    for cell in cells:
        C.add_cell(cell, len(cell), ctx.grade(cell))
    red = Reducer(ctx)
    for cell in cells:
        if cell:
            C.set_boundary(cell, red.differential(cell))
    if check:
        bc = check_boundary_squared(C)
        if not bc:
            raise BoundaryNotClosed(bc.cell, C.grade.get(bc.cell))
    minimal = all(not v for v in specialize(C).diff.values())
    res = Resolution(C, ctx, D, d, minimal)
    if cross_check:
        path_sum_cross_check(res)
        res.cross_checked = True
    return res


def path_sum_cross_check(res: Resolution):
    """Compare with the generic Morse complex of the materialized truncation."""
    ctx = res.context
    B = _materialize(ctx, _tuples(_standard_by_degree(ctx.R, res.d), res.D + 1, res.d),
                     "normalized " + ctx.kind)
    M = bar_matching(B, ctx)
    data = morse_complex(B, M)
    for i in range(res.D + 1):
        found = set(data.critical.get(i, []))
        expected = set(res.complex.cells(i))
        if found != expected:
            cell = next(iter(found ^ expected))
            raise CrossCheckFailure(cell, expected, found)
        for cell in res.complex.cells(i):
            a, b = res.complex.boundary(cell), data.boundary(cell)
            if a != b:
                raise CrossCheckFailure(cell, b, a)
    return data


# minimality

@dataclass
class TypeIIWitness:
    start: tuple
    end: tuple
    coefficient: object
    trace: ReductionTrace | None = None


def type_ii_possible(R: ReductionSystem, flavor: str | None = None, D: int = 5, d: int = 10,
                     kind: str = "bar"):
    """(found, witness): a sequence of merges ending in a Type II step with a
    nonzero total scalar.

    Only merge steps carry scalar coefficients, so this scans the scalar part
    of the reduction differential without ever multiplying algebra elements.
    """
    ctx = BarContext(R, flavor, kind)
    red = Reducer(ctx, scalar_only=True)
    for e in enumerate_chains(R, ctx.flavor, D, d):
        for f, c in red.differential(e).items():
            s = c.constant_term()
            if s:
                return True, TypeIIWitness(e, f, s, _scalar_trace(ctx, e, f))
    return False, None


def _scalar_trace(ctx, e, f):
    out = []

    def walk(alpha, skip, steps):
        if out:
            return
        for target, c, source, pos in ctx.boundary_terms(alpha):
            if source != "merge" or target == skip:
                continue
            cls = ctx.classify(target)
            if cls[0] == "critical" and target == f:
                out.append(ReductionTrace(e, f, steps + [ReductionStep("II", pos, target, c)]))
                return
            if cls[0] == "lower":
                beta = ctx.upper_partner(target, cls[1], cls[2])
                walk(beta, target, steps + [ReductionStep("I", pos, beta, c)])

    walk(e, None, [])
    return out[0] if out else None


def prop44_witness(R: ReductionSystem, bound: int):
    """Search standard words w1..w4 and minimal generators m1, m2, m3 with
    w1 w2 = u1 m1, w2 w3 = u2 m2, w1 w4 = u1' m3 (u1, u1' proper prefixes of
    w1, u2 a proper prefix of w2) and w4 in the support of nf(w2 w3).

    Returns the first pattern found (w1, w2, w3, w4, m1, m2, m3) or None.
    """
    ring = R.ring
    if ring.commutative:
        raise FlavorError("the overlap pattern is stated for word rings")
    R.require(bound)
    mingen = R.mingen()
    std = [w for k in range(1, bound + 1) for w in R.standard_monomials(k)]

    def ends_in(word, shorter_than):
        """The generator occurring as a suffix of word and reaching past the
        first ``shorter_than`` letters."""
        for m in mingen:
            if len(m) <= len(word) and word[len(word) - len(m):] == m \
                    and len(word) - len(m) < shorter_than:
                return m
        return None

    for w1 in std:
        for w2 in std:
            if len(w1) + len(w2) > bound:
                continue
            m1 = ends_in(Word(w1 + w2), len(w1))
            if m1 is None:
                continue
            for w3 in std:
                if len(w1) + len(w2) + len(w3) > bound:
                    continue
                prod = Word(w2 + w3)
                m2 = ends_in(prod, len(w2))
                if m2 is None:
                    continue
                for w4, a in R.nf_monomial(prod).items():
                    if w4.is_one() or not a:
                        continue
                    m3 = ends_in(Word(w1 + w4), len(w1))
                    if m3 is not None:
                        return (w1, w2, w3, w4, m1, m2, m3)
    return None
