"""Normal forms, Gröbner bases (commutative and word case) and standard monomials."""

from __future__ import annotations

import heapq
from itertools import combinations

from .monomials import ContextMismatch, Exponents, MonomialOrder, Word, find_factor
from .polynomials import Polynomial, PolyRing


class IncompleteBasisError(ValueError):
    """A query exceeds the degree up to which the rewriting system is known to be complete."""

    def __init__(self, degree: int, bound: int):
        self.degree = degree
        self.bound = bound
        super().__init__(
            f"degree {degree} exceeds the completion bound {bound}; "
            f"complete again with degree bound >= {degree}")


class _Desc:
    """Heap entry ordering monomials from largest to smallest."""

    __slots__ = ("key", "mono")

    def __init__(self, key, mono):
        self.key = key
        self.mono = mono

    def __lt__(self, other):
        return self.key > other.key


class ReductionSystem:
    """Rewriting rules lhs -> rhs with every rhs monomial smaller than its lhs.

    ``complete_up_to_degree`` is ``None`` when the rules form a complete
    (confluent) system in all degrees.
    """

    def __init__(self, ring: PolyRing, rules, reduced: bool = True,
                 complete_up_to_degree: int | None = None):
        self.ring = ring
        key = ring.key
        cleaned = []
        for lhs, rhs in rules:
            if not isinstance(rhs, Polynomial):
                rhs = ring.from_terms(rhs.items() if isinstance(rhs, dict) else rhs)
            for m in rhs.terms:
                if key(m) >= key(lhs):
                    raise ValueError(
                        f"rule {ring.format_monomial(lhs)} -> {rhs}: right side not smaller")
            cleaned.append((lhs, rhs))
        cleaned.sort(key=lambda r: key(r[0]))
        self.rules = tuple(cleaned)
        self.reduced = reduced
        self.complete_up_to_degree = complete_up_to_degree
        self._rhs = {lhs: dict(rhs.terms) for lhs, rhs in cleaned}
        self._lhs = [lhs for lhs, _ in cleaned]
        self._std = {}
        self._nf = {}
        self._std_by_degree = {}

    @property
    def commutative(self) -> bool:
        return self.ring.commutative

    @property
    def fully_complete(self) -> bool:
        return self.complete_up_to_degree is None

    @property
    def max_rule_degree(self) -> int:
        return max((lhs.degree for lhs in self._lhs), default=0)

    def require(self, degree: int):
        bound = self.complete_up_to_degree
        if bound is not None and degree > bound:
            raise IncompleteBasisError(degree, bound)

    def generators(self) -> list:
        """The ideal generators lhs - rhs."""
        return [Polynomial(self.ring, {lhs: self.ring.field.one}) - rhs for lhs, rhs in self.rules]

    # standard monomials
    def _find_rule(self, m):
        """(lhs, position) of the first rule applicable to m, or None."""
        if self.ring.commutative:
            for lhs in self._lhs:
                if all(a <= b for a, b in zip(lhs, m)):
                    return lhs, None
            return None
        for lhs in self._lhs:
            pos = find_factor(m, lhs)
            if pos >= 0:
                return lhs, pos
        return None

    def is_standard(self, m) -> bool:
        hit = self._std.get(m)
        if hit is None:
            hit = self._find_rule(m) is None
            self._std[m] = hit
        return hit

    def _rewrite(self, m, lhs, pos) -> dict:
        rhs = self._rhs[lhs]
        if self.ring.commutative:
            q = m.quotient(lhs)
            return {r.mul(q): c for r, c in rhs.items()}
        left, right = m[:pos], m[pos + len(lhs):]
        return {Word(left + r + right): c for r, c in rhs.items()}

    def nf_monomial(self, m) -> dict:
        """Normal form of a monomial as a dict over standard monomials (cached)."""
        hit = self._nf.get(m)
        if hit is not None:
            return hit
        if self.is_standard(m):
            result = {m: self.ring.field.one}
            self._nf[m] = result
            return result
        key = self.ring.key
        work = {m: self.ring.field.one}
        heap = [_Desc(key(m), m)]
        result = {}
        while heap:
            u = heapq.heappop(heap).mono
            c = work.pop(u)
            if not c:
                continue
            known = self._nf.get(u)
            if known is not None:
                for v, d in known.items():
                    result[v] = result.get(v, 0) + c * d
                continue
            found = self._find_rule(u)
            if found is None:
                self._std[u] = True
                result[u] = result.get(u, 0) + c
                continue
            for v, d in self._rewrite(u, *found).items():
                if v in work:
                    work[v] = work[v] + c * d
                else:
                    work[v] = c * d
                    heapq.heappush(heap, _Desc(key(v), v))
        result = {v: c for v, c in result.items() if c}
        self._nf[m] = result
        return result

    def nf_terms(self, terms: dict) -> dict:
        acc = {}
        for m, c in terms.items():
            for v, d in self.nf_monomial(m).items():
                acc[v] = acc.get(v, 0) + c * d
        return {v: c for v, c in acc.items() if c}

    def normal_form(self, p: Polynomial) -> Polynomial:
        if p.ring != self.ring:
            raise ContextMismatch("polynomial is not in the ring of the reduction system")
        self.require(p.degree)
        return Polynomial(self.ring, self.nf_terms(p.terms))

    def standard_monomials(self, degree: int) -> list:
        self.require(degree)
        return list(self._standard(degree))

    def _standard(self, degree: int) -> tuple:
        hit = self._std_by_degree.get(degree)
        if hit is not None:
            return hit
        ring = self.ring
        if degree == 0:
            out = [ring.one()]
        elif ring.commutative:
            from .monomials import monomials_of_degree
            out = [m for m in monomials_of_degree(ring.n, degree, True) if self.is_standard(m)]
        else:
            # every prefix of a standard word is standard
            out = [Word(w + (a,)) for w in self._standard(degree - 1) for a in range(ring.n)]
            out = [w for w in out if self.is_standard(w)]
        out.sort(key=ring.key)
        out = tuple(out)
        self._std_by_degree[degree] = out
        return out

    def standard_up_to(self, degree: int) -> list:
        """Standard monomials of degrees 1..degree."""
        self.require(degree)
        return [m for k in range(1, degree + 1) for m in self._standard(k)]

    def mingen(self) -> list:
        """Minimal generators of the initial ideal, sorted by the order."""
        return min_gen_initial(self)

    def describe(self) -> list[str]:
        ring = self.ring
        return [f"{ring.format_monomial(lhs)} -> {rhs}" for lhs, rhs in self.rules]

    def __repr__(self):
        bound = "all" if self.complete_up_to_degree is None else self.complete_up_to_degree
        return f"ReductionSystem({len(self.rules)} rules, complete to degree {bound})"


def min_gen_initial(R: ReductionSystem) -> list:
    lhs = sorted(R._lhs, key=lambda m: (m.degree, R.ring.key(m)))
    out = []
    for m in lhs:
        if not any(g.divides(m) for g in out):
            out.append(m)
    out.sort(key=R.ring.key)
    return out


def normal_form(p: Polynomial, R: ReductionSystem) -> Polynomial:
    return R.normal_form(p)


def standard_monomials(R: ReductionSystem, degree: int) -> list:
    return R.standard_monomials(degree)


def _with_order(gens, order, ring=None):
    if not gens:
        return [], ring
    ring = ring or gens[0].ring
    if order is not None and order != ring.order:
        ring = PolyRing(ring.names, ring.commutative, ring.field, order)
        gens = [Polynomial(ring, g.terms) for g in gens]
    return [g for g in gens if g], ring


def _lcm(a: Exponents, b: Exponents) -> Exponents:
    return Exponents(max(x, y) for x, y in zip(a, b))


def _system_from(ring, polys, complete=None) -> ReductionSystem:
    rules = []
    one = ring.field.one
    for g in polys:
        g = g.monic()
        lm = g.leading_monomial()
        rules.append((lm, Polynomial(ring, {lm: one}) - g))
    return ReductionSystem(ring, rules, reduced=False, complete_up_to_degree=complete)


def _interreduce(ring, polys) -> list:
    """Reduced Gröbner basis from a Gröbner basis (or any set with antichain leading terms)."""
    polys = [g.monic() for g in polys if g]
    polys.sort(key=lambda g: ring.key(g.leading_monomial()))
    minimal = []
    for g in polys:
        lm = g.leading_monomial()
        if not any(h.leading_monomial().divides(lm) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = _system_from(ring, minimal[:i] + minimal[i + 1:])
        lm = g.leading_monomial()
        tail = Polynomial(ring, others.nf_terms(g.tail().terms))
        out.append(Polynomial(ring, {lm: ring.field.one}) + tail)
    return out


def buchberger(gens, order: MonomialOrder | None = None, ring: PolyRing | None = None) -> ReductionSystem:
    """Reduced Gröbner basis of a commutative ideal (coprime and chain criteria)."""
    gens, ring = _with_order(list(gens), order, ring)
    if ring is None:
        raise ValueError("an empty generator list needs an explicit ring")
    if not ring.commutative:
        raise ContextMismatch("buchberger needs a commutative ring; use noncomm_complete")
    basis = [g.monic() for g in gens]
    if not basis:
        return ReductionSystem(ring, [], reduced=True, complete_up_to_degree=None)
    pairs = set(combinations(range(len(basis)), 2))

    def lm(i):
        return basis[i].leading_monomial()

    def pair_key(p):
        i, j = p
        m = _lcm(lm(i), lm(j))
        return (m.degree, ring.key(m), i, j)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        a, b = lm(i), lm(j)
        m = _lcm(a, b)
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            continue
        if any(k not in (i, j) and lm(k).divides(m)
               and tuple(sorted((i, k))) not in pairs and tuple(sorted((j, k))) not in pairs
               for k in range(len(basis))):
            continue
        one = ring.field.one
        s = (Polynomial(ring, {m.quotient(a): one}) * basis[i]
             - Polynomial(ring, {m.quotient(b): one}) * basis[j])
        r = Polynomial(ring, _system_from(ring, basis).nf_terms(s.terms))
        if r:
            basis.append(r.monic())
            k = len(basis) - 1
            pairs.update((t, k) for t in range(k))
    reduced = _interreduce(ring, basis)
    return _system_from_reduced(ring, reduced, None)


def _system_from_reduced(ring, polys, complete) -> ReductionSystem:
    R = _system_from(ring, polys, complete)
    R.reduced = True
    return R


def _overlaps(l1, l2):
    """Proper overlaps: l1 = u s, l2 = s v with s nonempty; yields (u, v)."""
    for k in range(1, min(len(l1), len(l2))):
        if l1[len(l1) - k:] == l2[:k]:
            yield Word(l1[:len(l1) - k]), Word(l2[k:])


def _overlap_spoly(ring, l1, r1, l2, r2, u, v):
    one = ring.field.one
    return (r1 * Polynomial(ring, {v: one})) - (Polynomial(ring, {u: one}) * r2)


def noncomm_complete(gens, order: MonomialOrder | None = None, degree_bound: int = 6,
                     ring: PolyRing | None = None) -> ReductionSystem:
    """Overlap completion in the free algebra, truncated at ``degree_bound``.

    All overlap ambiguities of degree <= degree_bound resolve in the result.
    If every overlap of every degree resolves, the system is marked complete
    in all degrees.
    """
    gens, ring = _with_order(list(gens), order, ring)
    if ring is None:
        raise ValueError("an empty generator list needs an explicit ring")
    if ring.commutative:
        raise ContextMismatch("noncomm_complete needs a word ring; use buchberger")
    if gens and degree_bound < max(g.degree for g in gens):
        raise ValueError("degree bound is below the generator degrees")
    rules: dict = {}

    def system():
        return _system_from(ring, [Polynomial(ring, {l: ring.field.one}) - r for l, r in rules.items()])

    def add(p, R):
        pending = [p]
        while pending:
            q = Polynomial(ring, R.nf_terms(pending.pop().terms))
            if not q:
                continue
            q = q.monic()
            lm = q.leading_monomial()
            for lhs in [l for l in rules if find_factor(l, lm) >= 0]:
                pending.append(Polynomial(ring, {lhs: ring.field.one}) - rules.pop(lhs))
            rules[lm] = Polynomial(ring, {lm: ring.field.one}) - q
            R = system()
        # keep right-hand sides in normal form
        R = system()
        for lhs in list(rules):
            others = _system_from(ring, [Polynomial(ring, {l: ring.field.one}) - r
                                         for l, r in rules.items() if l != lhs])
            rules[lhs] = Polynomial(ring, others.nf_terms(rules[lhs].terms))
        return system()

    R = system()
    for g in sorted(gens, key=lambda g: ring.key(g.leading_monomial())):
        R = add(g, R)

    checked = set()
    while True:
        R = system()
        items = sorted(rules.items(), key=lambda lr: ring.key(lr[0]))
        todo = []
        for (l1, r1), (l2, r2) in ((a, b) for a in items for b in items):
            for u, v in _overlaps(l1, l2):
                deg = len(u) + len(l2)
                if deg > degree_bound:
                    continue
                tag = (l1, frozenset(r1.terms.items()), l2, frozenset(r2.terms.items()), u)
                if tag in checked:
                    continue
                todo.append((deg, tag, _overlap_spoly(ring, l1, r1, l2, r2, u, v)))
        todo.sort(key=lambda t: t[0])
        changed = False
        for deg, tag, s in todo:
            r = R.nf_terms(s.terms)
            if r:
                R = add(Polynomial(ring, r), R)
                changed = True
                break
            checked.add(tag)
        if not changed:
            break

    R = system()
    complete = True
    for l1, r1 in rules.items():
        for l2, r2 in rules.items():
            for u, v in _overlaps(l1, l2):
                if R.nf_terms(_overlap_spoly(ring, l1, r1, l2, r2, u, v).terms):
                    complete = False
                    break
            if not complete:
                break
        if not complete:
            break
    polys = [Polynomial(ring, {l: ring.field.one}) - r for l, r in rules.items()]
    return _system_from_reduced(ring, polys, None if complete else degree_bound)


def reduction_system_from_rules(ring: PolyRing, rules, degree_bound: int = 8) -> ReductionSystem:
    """Build a system from explicit ``(lhs, rhs)`` pairs given as strings or polynomials.

    The rules are completed (so the result is confluent up to the bound);
    each lhs must be the leading monomial of lhs - rhs for the ring's order.
    """
    polys = []
    for lhs, rhs in rules:
        lp = ring.parse(lhs) if isinstance(lhs, str) else lhs
        rp = ring.parse(rhs) if isinstance(rhs, str) else rhs
        g = lp - rp
        if not g:
            continue
        if g.leading_monomial() != lp.leading_monomial():
            raise ValueError(f"{lhs} -> {rhs} is not oriented by the order {ring.order.describe()}")
        polys.append(g)
    if ring.commutative:
        return buchberger(polys, ring=ring)
    return noncomm_complete(polys, degree_bound=degree_bound, ring=ring)
