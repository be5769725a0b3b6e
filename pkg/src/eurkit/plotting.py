"""Figure rendering for the report path.

Every function writes one file and returns its path. Rendering is
headless (Agg) and layout is fixed so repeated runs produce the same
picture; the delimited outputs, not the figures, are the contract for
byte-identical comparisons.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .measure import BinnedDistribution
from .states import DensityGrid

__all__ = [
    "distribution_figure",
    "margins_figure",
    "stress_figure",
    "probe_figure",
]

_FIGSIZE = (6.4, 4.0)
_DPI = 130


def _new_axes(title: str):
    fig, ax = plt.subplots(figsize=_FIGSIZE, dpi=_DPI)
    if title:
        ax.set_title(title)
    ax.grid(True, alpha=0.3)
    return fig, ax


def _finish(fig, path: str) -> str:
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def distribution_figure(dist, path: str, title: str = "") -> str:
    """Bars for a binned distribution, a line for a density."""
    fig, ax = _new_axes(title)
    if isinstance(dist, BinnedDistribution):
        if dist.bin_width is None:
            ax.bar(dist.indices, dist.probabilities, width=0.8,
                   color="#3465a4", edgecolor="none")
            ax.set_xlabel("outcome")
        else:
            ax.bar(dist.positions, dist.probabilities,
                   width=0.9 * dist.bin_width, color="#3465a4",
                   edgecolor="none")
            ax.set_xlabel("cell center")
        ax.set_ylabel("probability")
    elif isinstance(dist, DensityGrid):
        ax.plot(dist.grid.points, dist.values, color="#3465a4", lw=1.0)
        ax.set_xlabel("x")
        ax.set_ylabel("density")
    else:
        xs, ys = zip(*dist)
        ax.plot(xs, ys, color="#3465a4", lw=1.0)
        ax.set_xlabel("parameter")
        ax.set_ylabel("value")
    return _finish(fig, path)


def margins_figure(labels, margins, path: str, title: str = "") -> str:
    """Horizontal margin bars with the zero line marked; negative bars
    are the violations."""
    fig, ax = _new_axes(title)
    y = np.arange(len(labels))
    colors = ["#cc0000" if m < 0 else "#4e9a06" for m in margins]
    ax.barh(y, margins, color=colors, edgecolor="none")
    ax.set_yticks(y)
    ax.set_yticklabels(labels, fontsize=8)
    ax.invert_yaxis()
    ax.axvline(0.0, color="black", lw=0.8)
    ax.set_xlabel("margin")
    return _finish(fig, path)


def stress_figure(margins, tol: float, path: str, title: str = "") -> str:
    """Histogram of per-trial margins with the -tol threshold marked."""
    fig, ax = _new_axes(title)
    values = np.asarray([m for _, m in margins], dtype=np.float64)
    if values.size:
        ax.hist(values, bins=min(60, max(10, values.size // 10)),
                color="#3465a4", edgecolor="none")
    ax.axvline(-tol, color="#cc0000", lw=1.0, label=f"-tol = {-tol:g}")
    ax.axvline(0.0, color="black", lw=0.8)
    ax.set_xlabel("margin")
    ax.set_ylabel("trials")
    ax.legend(loc="upper right", fontsize=8)
    return _finish(fig, path)


def probe_figure(best_lhs: float, rhs: float, path: str,
                 title: str = "") -> str:
    """Best objective found next to the catalog bound."""
    fig, ax = _new_axes(title)
    ax.bar([0, 1], [best_lhs, rhs], width=0.6,
           color=["#3465a4", "#f57900"], edgecolor="none")
    ax.set_xticks([0, 1])
    ax.set_xticklabels(["best lhs", "bound"])
    gap = best_lhs - rhs
    ax.annotate(f"gap = {gap:.6g}", xy=(0.5, max(best_lhs, rhs)),
                ha="center", va="bottom")
    return _finish(fig, path)
