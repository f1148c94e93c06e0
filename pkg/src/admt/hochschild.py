"""Two-sided resolutions of A over A (x) A^op and Hilbert series of HH(A, k).

The combinatorics are those of the one-sided resolutions; only the
coefficients change.  Coefficients are BiElem sums of (left, right) pairs of
standard monomials.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .bar import Resolution, build_resolution, normalized_bar
from .closed_forms import (_require_ci, cartan_resolution, complete_intersection_resolution)
from .complexes import BasedComplex
from .groebner import ReductionSystem
from .monomials import monomials_of_degree
from .series import BettiTable, RationalSeries, closed_form_series, resolution_betti


def normalized_hochschild(R: ReductionSystem, D: int, d: int, flavor: str | None = None) -> BasedComplex:
    """Truncated normalized Hochschild complex with the two-sided differential."""
    return normalized_bar(R, D, d, kind="hochschild", flavor=flavor)


def hochschild_resolution(R: ReductionSystem, flavor: str | None = None, D: int = 5, d: int = 10,
                          cross_check: bool = False) -> Resolution:
    """Bimodule resolution of A on the fully attached tuples."""
    return build_resolution(R, flavor, D, d, kind="hochschild", cross_check=cross_check)


def bach_resolution(R: ReductionSystem, D: int = 5, d: int | None = None) -> BasedComplex:
    """Closed-form bimodule resolution for an initial complete intersection:
    cells e_I t^(l), coefficients T(x_i) and the divided differences
    T_p(f)/T(x_p)."""
    return complete_intersection_resolution(R, D, d, kind="hochschild")


def exterior_bimodule_resolution(R: ReductionSystem, D: int = 5) -> BasedComplex:
    """Two-sided Cartan complex of an exterior algebra."""
    return cartan_resolution(R, D, kind="hochschild")


def hh_hilbert(res, D: int | None = None) -> BettiTable:
    """dim HH_i(A, k) by multidegree, read from a resolution.

    Accepts a Resolution from ``hochschild_resolution`` or a closed-form
    BasedComplex (which is minimal, so its cells are counted directly).
    """
    if isinstance(res, Resolution):
        return resolution_betti(res, D)
    counts = Counter((res.degree_of[c], tuple(res.grade[c])) for c in res.all_cells())
    return BettiTable.from_counts(counts).restrict(D)


def hh_series(R: ReductionSystem) -> RationalSeries:
    """Exact Hilbert series of HH(A, k) where a closed form is available:
    the polynomial ring and initial complete intersections."""
    _require_ci(R)
    gens = [tuple(m) for m in R.mingen()]
    n = R.ring.n
    if not gens:
        return closed_form_series("polynomial-hochschild", n)
    return closed_form_series("hochschild-complete-intersection", n, gens)


@dataclass
class DualityReport:
    ok: bool
    hh: dict            # multidegree -> sum_i dim HH_i(E, k)_alpha
    polynomial: dict    # multidegree -> dim S_alpha
    first_difference: object = None

    def __bool__(self):
        return self.ok


def exterior_duality(R: ReductionSystem, d: int) -> DualityReport:
    """Compare Hilb HH(E, k) with Hilb S = 1/prod(1 - x_i) up to total degree d,
    with HH computed from the fully attached tuples of the exterior algebra R."""
    n = R.ring.n
    res = hochschild_resolution(R, D=d, d=d)
    table = hh_hilbert(res)
    hh = Counter()
    for (i, g), k in table.entries.items():
        if sum(g) <= d and i <= d:
            hh[g] += k
    poly = {tuple(m): 1 for k in range(d + 1) for m in monomials_of_degree(n, k, True)}
    keys = sorted(set(hh) | set(poly))
    for g in keys:
        if hh.get(g, 0) != poly.get(g, 0):
            return DualityReport(False, dict(hh), poly, (g, hh.get(g, 0), poly.get(g, 0)))
    return DualityReport(True, dict(hh), poly)


__all__ = [
    "DualityReport", "bach_resolution", "exterior_bimodule_resolution", "exterior_duality",
    "hh_hilbert", "hh_series", "hochschild_resolution", "normalized_hochschild",
]
