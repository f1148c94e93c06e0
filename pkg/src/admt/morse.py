"""Acyclic matchings on based complexes and the associated Morse complex.

A matching is a set of edges (upper, lower) of the complex graph with unit
weights.  Reversing the matched edges (with weight -1/[upper:lower]) must
leave the graph acyclic.  The Morse complex lives on the unmatched
("critical") cells; its differential sums path weights, which is computed
here by eliminating matched cells in topological order.
"""

from __future__ import annotations

import heapq
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import BasedComplex, _acc, add_vectors
from .scalars import NotAUnit, invert_unit, is_unit


class InvalidEdge(ValueError):
    """A matching edge that is not a nonzero differential entry."""


class MatchingViolation(ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"{report.condition}: {report.witness!r}")


class Matching:
    """Edges stored upper -> lower."""

    def __init__(self, edges=()):
        self.edges = list(edges)
        self.up = {}      # upper cell -> lower cell
        self.down = {}    # lower cell -> upper cell
        for a, b in self.edges:
            self.up.setdefault(a, b)
            self.down.setdefault(b, a)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def matched(self, cell) -> bool:
        return cell in self.up or cell in self.down

    def add(self, upper, lower):
        self.edges.append((upper, lower))
        self.up.setdefault(upper, lower)
        self.down.setdefault(lower, upper)


@dataclass
class MatchingReport:
    ok: bool
    condition: str = ""
    witness: object = None

    def __bool__(self):
        return self.ok


def _lower_graph(C: BasedComplex, M: Matching, degree: int) -> dict:
    """b -> successors b' among matched lower cells of ``degree``.

    b' follows b when b' appears in the boundary of b's partner.  Every
    directed cycle of the reversed graph inside degrees (degree+1, degree)
    passes through such lower cells, so cycles here are exactly cycles there.
    """
    graph = {}
    for b in C.cells(degree):
        alpha = M.down.get(b)
        if alpha is None:
            continue
        graph[b] = [t for t in C.diff[alpha] if t != b and t in M.down
                    and C.degree_of.get(t) == degree]
    return graph


def _topological(graph: dict):
    """Kahn ordering; returns (order dict, None) or (None, cycle list)."""
    indeg = {v: 0 for v in graph}
    for v, succ in graph.items():
        for w in succ:
            indeg[w] += 1
    queue = deque(v for v in graph if indeg[v] == 0)
    order = {}
    while queue:
        v = queue.popleft()
        order[v] = len(order)
        for w in graph[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if len(order) == len(graph):
        return order, None
    # extract a cycle among the remaining vertices
    rest = {v for v in graph if v not in order}
    start = next(v for v in graph if v in rest)
    seen = {}
    path = []
    v = start
    while v not in seen:
        seen[v] = len(path)
        path.append(v)
        v = next(w for w in graph[v] if w in rest)
    return None, path[seen[v]:]


def validate_matching(C: BasedComplex, M: Matching) -> MatchingReport:
    """Check the three conditions of an acyclic matching.

    Raises InvalidEdge for edges outside the differential support.
    """
    for a, b in M.edges:
        if a not in C or b not in C.diff[a]:
            raise InvalidEdge(f"({a!r}, {b!r}) is not a differential entry")
    counts = Counter()
    for a, b in M.edges:
        counts[a] += 1
        counts[b] += 1
    shared = [c for c, k in counts.items() if k > 1]
    if shared:
        return MatchingReport(False, "matching", shared[0])
    for a, b in M.edges:
        if not is_unit(C.diff[a][b]):
            return MatchingReport(False, "invertibility", (a, b, C.diff[a][b]))
    for d in C.degrees():
        _, cycle = _topological(_lower_graph(C, M, d))
        if cycle:
            full = []
            for b in cycle:
                full += [b, M.down[b]]
            return MatchingReport(False, "acyclicity", full)
    return MatchingReport(True)


class MorseData:
    """Critical cells, Morse differential and the homotopy maps f, g, chi."""

    def __init__(self, C: BasedComplex, M: Matching, one=None):
        self.C = C
        self.M = M
        self.one = one if one is not None else getattr(C, "one", Fraction(1))
        self.critical = {d: [c for c in C.cells(d) if not M.matched(c)] for d in C.degrees()}
        self.is_critical = {c for cs in self.critical.values() for c in cs}
        self._order = {}
        for d in C.degrees():
            order, cycle = _topological(_lower_graph(C, M, d))
            if cycle:
                raise MatchingViolation(MatchingReport(False, "acyclicity", cycle))
            self._order[d] = order
        self._f = {}
        self._chi = {}
        self._g = {}
        self._dm = {}
        self.complex = self._build()

    def reduce(self, vector: dict, degree: int):
        """Push a vector of degree-``degree`` cells onto critical cells.

        Returns (critical part, lift) where lift collects the coefficients of
        the degree+1 partners crossed on the way.
        """
        C, M = self.C, self.M
        order = self._order.get(degree, {})
        work = dict(vector)
        heap = []
        queued = set()
        for c in work:
            if c in order:
                heapq.heappush(heap, (order[c], c))
                queued.add(c)
        lift = {}
        while heap:
            _, b = heapq.heappop(heap)
            coef = work.pop(b, None)
            if not coef:
                continue
            alpha = M.down[b]
            w = C.diff[alpha][b]
            factor = -(coef * invert_unit(w))
            _acc(lift, alpha, factor)
            for t, wt in C.diff[alpha].items():
                if t == b:
                    continue
                _acc(work, t, factor * wt)
                if t in order and t not in queued:
                    queued.add(t)
                    heapq.heappush(heap, (order[t], t))
        crit = {c: a for c, a in work.items() if a and c in self.is_critical}
        return crit, lift

    def _build(self) -> BasedComplex:
        C = self.C
        out = BasedComplex(C.name + " (Morse)")
        out.one = self.one
        for d in C.degrees():
            for c in self.critical[d]:
                out.add_cell(c, d, C.grade.get(c))
        for d in C.degrees():
            for c in self.critical[d]:
                crit, lift = self.reduce(C.diff[c], d - 1)
                self._dm[c] = crit
                self._g[c] = add_vectors({c: self.one}, lift)
                out.diff[c] = crit
        return out

    def boundary(self, c) -> dict:
        return self._dm[c]

    def f(self, c) -> dict:
        """C -> C^M."""
        hit = self._f.get(c)
        if hit is None:
            hit, self._chi[c] = self.reduce({c: self.one}, self.C.degree_of[c])
            self._f[c] = hit
        return hit

    def chi(self, c) -> dict:
        """C_i -> C_{i+1}."""
        if c not in self._chi:
            self.f(c)
        return self._chi[c]

    def g(self, c) -> dict:
        """C^M -> C."""
        return self._g[c]


def morse_complex(C: BasedComplex, M: Matching, one=None, check: bool = True) -> MorseData:
    if check:
        report = validate_matching(C, M)
        if not report:
            raise MatchingViolation(report)
    return MorseData(C, M, one)


def apply_map(fn, vector: dict) -> dict:
    """Extend a cell map left-linearly to vectors."""
    out = {}
    for c, a in vector.items():
        for t, w in fn(c).items():
            _acc(out, t, a * w)
    return out


def homotopy_maps(D: MorseData):
    """(f, g, chi) as dicts cell -> vector."""
    C = D.C
    f = {c: D.f(c) for c in C.all_cells()}
    chi = {c: D.chi(c) for c in C.all_cells()}
    g = {c: D.g(c) for c in D.complex.all_cells()}
    return f, g, chi


@dataclass
class HomotopyCheck:
    results: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    def __bool__(self):
        return self.ok


def _diff(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, c in v.items():
        _acc(out, k, -c)
    return out


def verify_homotopy(D: MorseData) -> HomotopyCheck:
    """Check dM dM = 0, the chain map identities and the homotopy identities."""
    C, CM = D.C, D.complex
    dC = C.boundary
    dM = D.boundary
    check = HomotopyCheck()

    def record(name, cell, residue):
        if residue and name not in check.witnesses:
            check.witnesses[name] = (cell, residue)
        check.results.setdefault(name, True)
        if residue:
            check.results[name] = False

    for c in CM.all_cells():
        record("P1", c, apply_map(dM, dM(c)))
        record("C2", c, _diff(apply_map(dC, D.g(c)), apply_map(D.g, dM(c))))
        record("H2", c, _diff(apply_map(D.f, D.g(c)), {c: D.one}))
    for c in C.all_cells():
        record("C1", c, _diff(apply_map(dM, D.f(c)), apply_map(D.f, dC(c))))
        lhs = _diff(apply_map(D.g, D.f(c)), {c: D.one})
        rhs = add_vectors(apply_map(dC, D.chi(c)), apply_map(D.chi, dC(c)))
        record("H1", c, _diff(lhs, rhs))
    for name in ("P1", "C1", "C2", "H1", "H2"):
        check.results.setdefault(name, True)
    return check


def reversed_graph(C: BasedComplex, M: Matching):
    """Adjacency of G_M: cell -> list of (successor, weight)."""
    adj = {c: [] for c in C.all_cells()}
    for c in C.all_cells():
        for t, w in C.diff[c].items():
            if M.up.get(c) == t:
                adj[t].append((c, -invert_unit(w)))
            else:
                adj[c].append((t, w))
    return adj


def path_sums_bruteforce(C: BasedComplex, M: Matching, source, one=None) -> dict:
    """Gamma(source, c) for every c, by enumerating all directed paths of G_M."""
    one = one if one is not None else getattr(C, "one", Fraction(1))
    adj = reversed_graph(C, M)
    out = {}
    stack = [(source, one)]
    while stack:
        v, w = stack.pop()
        _acc(out, v, w)
        for t, wt in adj[v]:
            stack.append((t, w * wt))
    return out


def morse_boundary_bruteforce(C: BasedComplex, M: Matching, c, one=None) -> dict:
    gamma = path_sums_bruteforce(C, M, c, one)
    d = C.degree_of[c]
    return {t: w for t, w in gamma.items()
            if C.degree_of[t] == d - 1 and not M.matched(t) and w}


def greedy_matching(C: BasedComplex, priority=None) -> Matching:
    """Accept unit-weight edges greedily while the matching stays acyclic.

    ``priority`` is an optional key on (upper, lower) pairs; by default the
    edges are visited in the complex's own order.
    """
    M = Matching()
    edges = [(a, b) for a, b, w in C.edges() if is_unit(w)]
    if priority is not None:
        edges.sort(key=priority)
    for a, b in edges:
        if M.matched(a) or M.matched(b):
            continue
        if _reaches(C, M, a, b):
            continue
        M.add(a, b)
    return M


def _reaches(C: BasedComplex, M: Matching, a, b) -> bool:
    """Would reversing a -> b close a cycle?  True if b is reachable from a
    through the other edges of a and alternating up/down moves."""
    deg = C.degree_of[b]
    seen = set()
    queue = deque(t for t in C.diff[a] if t != b)
    while queue:
        t = queue.popleft()
        if t == b:
            return True
        if t in seen:
            continue
        seen.add(t)
        alpha = M.down.get(t)
        if alpha is None or C.degree_of[alpha] != deg + 1:
            continue
        queue.extend(s for s in C.diff[alpha] if s != t)
    return False


__all__ = [
    "InvalidEdge", "Matching", "MatchingReport", "MatchingViolation", "MorseData",
    "NotAUnit", "apply_map", "greedy_matching", "homotopy_maps", "morse_complex",
    "morse_boundary_bruteforce", "path_sums_bruteforce", "validate_matching",
    "verify_homotopy",
]
