"""Figures for Betti tables."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def betti_grid(table):
    """Matrix rows = internal degree, columns = homological degree."""
    by = table.by_degree()
    hs = sorted({i for i, _ in by}) or [0]
    ds = sorted({d for _, d in by}) or [0]
    grid = [[by.get((i, d), 0) for i in hs] for d in ds]
    return hs, ds, grid


def plot_betti_table(table, path: str, title: str = "", compare=None):
    """Heat map of a Betti table with the counts printed in each cell.

    With ``compare`` (another BettiTable) a second panel shows the totals of
    both tables per homological degree.
    """
    hs, ds, grid = betti_grid(table)
    panels = 2 if compare is not None else 1
    fig, axes = plt.subplots(1, panels, figsize=(4 + 0.5 * len(hs) * panels, 1.5 + 0.4 * len(ds)),
                             squeeze=False)
    ax = axes[0][0]
    ax.imshow(grid, cmap="Blues", aspect="auto", origin="lower")
    for r, row in enumerate(grid):
        for c, v in enumerate(row):
            if v:
                ax.text(c, r, str(v), ha="center", va="center", fontsize=8)
    ax.set_xticks(range(len(hs)), labels=[str(i) for i in hs])
    ax.set_yticks(range(len(ds)), labels=[str(d) for d in ds])
    ax.set_xlabel("homological degree i")
    ax.set_ylabel("internal degree")
    if title:
        ax.set_title(title, fontsize=10)
    if compare is not None:
        ax2 = axes[0][1]
        a, b = table.totals(), compare.totals()
        keys = sorted(set(a) | set(b))
        ax2.plot(keys, [a.get(k, 0) for k in keys], "o-", label="table")
        ax2.plot(keys, [b.get(k, 0) for k in keys], "s--", label="reference")
        ax2.set_xlabel("homological degree i")
        ax2.set_ylabel("total rank")
        ax2.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
