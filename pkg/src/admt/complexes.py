"""Based chain complexes: free modules with labeled bases and sparse differentials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import Echelon
from .scalars import ModP, format_scalar


class UnsupportedCoefficients(TypeError):
    """Raised when a field operation is requested on module coefficients."""


class BasedComplex:
    """Chain complex with distinguished bases.

    Cells are hashable labels, unique across degrees.  The differential is
    stored by source cell: ``diff[c] = {c': [c:c']}``.  Coefficients act from
    the left, so for a vector sum(a_c c) the boundary is sum(a_c [c:c'] c').
    """

    def __init__(self, name: str = ""):
        self.name = name
        self.bases: dict[int, list] = {}
        self.degree_of: dict = {}
        self.grade: dict = {}
        self.diff: dict = {}

    def add_cell(self, label, degree: int, grade=None):
        if label in self.degree_of:
            raise ValueError(f"duplicate cell {label!r}")
        self.bases.setdefault(degree, []).append(label)
        self.degree_of[label] = degree
        if grade is not None:
            self.grade[label] = tuple(grade)
        self.diff[label] = {}

    def set_boundary(self, label, targets: dict):
        deg = self.degree_of[label]
        clean = {}
        for t, c in targets.items():
            if not c:
                continue
            if self.degree_of.get(t) != deg - 1:
                raise ValueError(f"boundary of {label!r} hits {t!r} outside degree {deg - 1}")
            clean[t] = c
        self.diff[label] = clean

    def boundary(self, label) -> dict:
        return self.diff[label]

    def coefficient(self, src, dst):
        return self.diff[src].get(dst)

    def cells(self, degree: int) -> list:
        return self.bases.get(degree, [])

    def degrees(self) -> list:
        return sorted(self.bases)

    def all_cells(self):
        for d in self.degrees():
            yield from self.bases[d]

    def __len__(self):
        return len(self.degree_of)

    def __contains__(self, label):
        return label in self.degree_of

    def edges(self):
        """(source, target, weight) for every nonzero differential entry."""
        for c in self.all_cells():
            for t, w in self.diff[c].items():
                yield c, t, w

    def apply(self, vector: dict) -> dict:
        """Boundary of a vector given as {cell: coefficient}."""
        out = {}
        for c, a in vector.items():
            for t, w in self.diff[c].items():
                _acc(out, t, a * w)
        return out

    def rank_table(self) -> dict:
        return {d: len(cs) for d, cs in sorted(self.bases.items())}

    def dump(self, fmt_label=str, fmt_coeff=None) -> str:
        """One line per differential entry: ``deg src dst coeff``."""
        fmt_coeff = fmt_coeff or _fmt_coeff
        lines = []
        for d in self.degrees():
            for c in self.bases[d]:
                for t, w in self.diff[c].items():
                    lines.append(f"{d} {fmt_label(c)} {fmt_label(t)} {fmt_coeff(w)}")
        return "\n".join(lines)


def _fmt_coeff(w) -> str:
    if isinstance(w, (Fraction, int)):
        return format_scalar(Fraction(w))
    s = str(w)
    return s.replace(" ", "") if not hasattr(w, "env") else s


def _acc(out: dict, key, value):
    old = out.get(key)
    if old is None:
        if value:
            out[key] = value
        return
    new = old + value
    if new:
        out[key] = new
    else:
        del out[key]


def add_vectors(*vectors) -> dict:
    out = {}
    for v in vectors:
        for k, c in v.items():
            _acc(out, k, c)
    return out


def scale_vector(a, vector: dict, left: bool = True) -> dict:
    out = {}
    for k, c in vector.items():
        _acc(out, k, a * c if left else c * a)
    return out


@dataclass
class BoundaryCheck:
    ok: bool
    cell: object = None
    target: object = None
    value: object = None

    def __bool__(self):
        return self.ok


def check_boundary_squared(C: BasedComplex) -> BoundaryCheck:
    """True iff the composite of consecutive differentials vanishes; else a witness."""
    for c in C.all_cells():
        dd = C.apply(C.diff[c])
        if dd:
            t = next(iter(dd))
            return BoundaryCheck(False, c, t, dd[t])
    return BoundaryCheck(True)


def _is_scalar(c) -> bool:
    return isinstance(c, (int, Fraction, ModP))


def specialize(C: BasedComplex) -> BasedComplex:
    """Kill every variable: replace each coefficient by its constant term."""
    out = BasedComplex(C.name + " (specialized)")
    for d in C.degrees():
        for c in C.bases[d]:
            out.add_cell(c, d, C.grade.get(c))
    for c in C.all_cells():
        targets = {}
        for t, w in C.diff[c].items():
            s = w if _is_scalar(w) else w.constant_term()
            if s:
                targets[t] = s
        out.diff[c] = targets
    return out


def is_zero_differential(C: BasedComplex) -> bool:
    return all(not targets for targets in C.diff.values())


def _rank_of_map(C: BasedComplex, sources) -> int:
    ech = Echelon()
    for c in sources:
        row = {}
        for t, w in C.diff[c].items():
            if not _is_scalar(w):
                raise UnsupportedCoefficients("specialize the complex before computing homology")
            row[t] = Fraction(w) if isinstance(w, int) else w
        ech.add(row)
    return len(ech)


def homology_ranks(C: BasedComplex, degrees=None) -> dict:
    """dim H_i over the field, for each degree i of the complex."""
    degrees = C.degrees() if degrees is None else degrees
    ranks = {d: _rank_of_map(C, C.cells(d)) for d in set(degrees) | {d + 1 for d in degrees}}
    return {d: len(C.cells(d)) - ranks[d] - ranks[d + 1] for d in degrees}


def graded_homology_ranks(C: BasedComplex, total=False, weights=None) -> dict:
    """dim H_i split by cell grade: {(i, grade): rank}, zero entries omitted.

    With ``total`` the grade is collapsed to its total degree, with
    ``weights`` to the weighted degree.  Every differential entry must
    preserve the (collapsed) grade; otherwise ValueError.
    """
    def g(c):
        gr = C.grade.get(c)
        if gr is None:
            raise ValueError(f"cell {c!r} has no grade")
        if weights is not None:
            return (sum(a * b for a, b in zip(weights, gr)),)
        return (sum(gr),) if total else gr

    strata = {}
    for c in C.all_cells():
        strata.setdefault(g(c), []).append(c)
    for c, t, w in C.edges():
        if g(c) != g(t):
            raise ValueError(f"differential entry {c!r} -> {t!r} changes the grade")
    out = {}
    for gr, cells in strata.items():
        by_deg = {}
        for c in cells:
            by_deg.setdefault(C.degree_of[c], []).append(c)
        ranks = {d: _rank_of_map(C, cs) for d, cs in by_deg.items()}
        for d, cs in by_deg.items():
            h = len(cs) - ranks[d] - ranks.get(d + 1, 0)
            if h:
                out[(d, gr)] = h
    return dict(sorted(out.items()))
