"""Exact sparse Gaussian elimination over Q or F_p.

Rows are dicts mapping arbitrary hashable column keys to field elements.
"""

from __future__ import annotations

from fractions import Fraction


def _inv(x):
    return Fraction(1, x) if isinstance(x, int) else 1 / x


class Echelon:
    """Incremental echelon form.

    Each stored row has a pivot column with coefficient 1 and no pivot of an
    earlier row, so reducing a row terminates whatever column is picked.
    """

    def __init__(self):
        self.pivots = {}     # column -> (creation index, row)

    def __len__(self):
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = {k: v for k, v in row.items() if v}
        pivots = self.pivots
        while True:
            best = None
            for k in row:
                hit = pivots.get(k)
                if hit is not None and (best is None or hit[0] < best[0]):
                    best = (hit[0], k, hit[1])
            if best is None:
                return row
            _, col, prow = best
            c = row[col]
            for k, v in prow.items():
                nv = row.get(k, 0) - c * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)

    def add(self, row: dict, pivot=None):
        """Store the reduced row if nonzero; returns the reduced row (or {})."""
        row = self.reduce(row)
        if not row:
            return row
        col = next(iter(row)) if pivot is None else pivot(row)
        inv = _inv(row[col])
        self.pivots[col] = (len(self.pivots), {k: v * inv for k, v in row.items()})
        return row

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)


def rank(rows) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(dict(r))
    return len(ech)


def kernel(images: dict, sources: list) -> list:
    """Basis of {x : sum_i x_i images[i] = 0}, as dicts source -> scalar."""
    ech = Echelon()
    out = []
    for idx in sources:
        row = {(0, k): v for k, v in images.get(idx, {}).items()}
        row[(1, idx)] = 1
        reduced = ech.reduce(row)
        image_cols = [k for k in reduced if k[0] == 0]
        if image_cols:
            col = image_cols[0]
            inv = _inv(reduced[col])
            ech.pivots[col] = (len(ech.pivots), {k: v * inv for k, v in reduced.items()})
        else:
            out.append({k[1]: v for k, v in reduced.items()})
    return out
