"""Random based complexes with known homology.

A complex is assembled from elementary blocks (isolated cells and pairs
u -> c*l with c a nonzero scalar) and then written in a scrambled basis:
each degree gets a random invertible change of basis built from elementary
row operations, so the differential stays exact while the matrices fill in.
"""

from __future__ import annotations

from fractions import Fraction

from admt.complexes import BasedComplex

COEFFS = (1, -1, 2, -2, 3)


def _matmul(a, b):
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(a))]


def _random_invertible(rng, n, ops, one):
    """(Q, Q^{-1}) as lists of rows, from ``ops`` elementary operations."""
    q = [[one if i == j else 0 * one for j in range(n)] for i in range(n)]
    qinv = [row[:] for row in q]
    for _ in range(ops if n > 1 else 0):
        a, b = rng.sample(range(n), 2)
        if rng.random() < 0.2:
            q[a], q[b] = q[b], q[a]
            for row in qinv:
                row[a], row[b] = row[b], row[a]
            continue
        lam = rng.choice((1, -1, 2, -2)) * one
        # Q <- E Q with E = I + lam e_ab;  Q^{-1} <- Q^{-1} E^{-1}
        q[a] = [x + lam * y for x, y in zip(q[a], q[b])]
        for row in qinv:
            row[b] = row[b] - lam * row[a]
    return q, qinv


def random_complex(rng, max_cells: int = 30, top: int | None = None, field=None,
                   scramble: int | None = None):
    """(complex, expected homology {degree: rank})."""
    one = field.one if field is not None else Fraction(1)
    top = rng.randint(1, 4) if top is None else top
    budget = rng.randint(2, max_cells)
    blocks = []
    used = 0
    while used < budget:
        if rng.random() < 0.3 or used + 2 > budget:
            blocks.append(("single", rng.randint(0, top)))
            used += 1
        else:
            blocks.append(("pair", rng.randint(1, top), rng.choice(COEFFS) * one))
            used += 2
    cells = {i: [] for i in range(top + 1)}
    diff = {}
    homology = {i: 0 for i in range(top + 1)}
    for b in blocks:
        if b[0] == "single":
            cells[b[1]].append(len(diff))
            diff[len(diff)] = {}
            homology[b[1]] += 1
        else:
            _, i, c = b
            lo, up = len(diff), len(diff) + 1
            diff[lo] = {}
            diff[up] = {lo: c}
            cells[i - 1].append(lo)
            cells[i].append(up)
    for i in cells:
        rng.shuffle(cells[i])
    index = {i: {c: k for k, c in enumerate(cs)} for i, cs in cells.items()}
    changes = {i: _random_invertible(rng, len(cs), scramble if scramble is not None
                                     else 2 * len(cs), one) for i, cs in cells.items()}
    C = BasedComplex("random")
    for i in range(top + 1):
        for k in range(len(cells[i])):
            C.add_cell(("c", i, k), i)
    for i in range(1, top + 1):
        n_up, n_lo = len(cells[i]), len(cells[i - 1])
        if not n_up or not n_lo:
            continue
        Dm = [[0 * one] * n_lo for _ in range(n_up)]
        for c in cells[i]:
            for t, w in diff[c].items():
                Dm[index[i][c]][index[i - 1][t]] = w
        q, _ = changes[i]
        _, rinv = changes[i - 1]
        M = _matmul(_matmul(q, Dm), rinv)
        for a in range(n_up):
            C.set_boundary(("c", i, a), {("c", i - 1, b): M[a][b] for b in range(n_lo) if M[a][b]})
    return C, homology
