"""Figure rendering for bound sweeps.

Renders the same rows that go into the CSV export, so a figure and its
CSV always describe identical data.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def render_bound_figure(rows: Sequence[dict], sweep_key: str, out_path: str,
                        title: str = "", log2_rate: bool = True) -> None:
    """Plot lower/upper bound curves over a swept parameter and save to file.

    Each row is a dict holding the sweep parameter plus any of: lower,
    upper, log2_rate_lower, log2_rate_upper.  Missing values leave gaps.
    """
    if not rows:
        raise ValueError("no rows to plot")
    xs = [row[sweep_key] for row in rows]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    keys = (
        ("log2_rate_lower", "lower bound"), ("log2_rate_upper", "upper bound")
    ) if log2_rate else (("lower", "lower bound"), ("upper", "upper bound"))
    plotted = False
    for key, label in keys:
        ys = [row.get(key) for row in rows]
        pairs = [(x, y) for x, y in zip(xs, ys) if y is not None]
        if not pairs:
            continue
        ax.plot([p[0] for p in pairs], [float(p[1]) for p in pairs],
                marker="o", markersize=3, label=label)
        plotted = True
    if not plotted:
        raise ValueError("rows contain no plottable values")
    ax.set_xlabel(sweep_key)
    ax.set_ylabel("log2 rate" if log2_rate else "code size bound")
    if title:
        ax.set_title(title)
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
