"""Figure rendering for the report paths.

Classification reports get a per-order class-count chart; spectra get the
eigenvalue positions on the real line against the [-2, 2] band. Figures
are written straight to files (Agg backend), never shown interactively.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .classify import ClassificationReport

__all__ = ["save_classification_figure", "save_spectrum_figure"]


def save_classification_figure(report: ClassificationReport, path: str) -> None:
    by_order = report.by_order()
    orders = sorted(by_order)
    maximal = [sum(e.maximal for e in by_order[o]) for o in orders]
    rest = [len(by_order[o]) - m for o, m in zip(orders, maximal)]
    fig, ax = plt.subplots(figsize=(6, 3.6))
    ax.bar(orders, rest, label="non-maximal", color="#9ecae1")
    ax.bar(orders, maximal, bottom=rest, label="maximal", color="#3182bd")
    ax.set_xlabel("order")
    ax.set_ylabel("equivalence classes")
    c = report.constraints
    ax.set_title(
        "classes per order ({} interval{}{})".format(
            "open" if c.open_interval else "closed",
            ", nonnegative" if c.require_nonnegative else "",
            ", nonsymmetric" if c.require_nonsymmetric else "",
        ),
        fontsize=10,
    )
    ax.set_xticks(orders)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_spectrum_figure(eigenvalues: list[float], path: str) -> None:
    fig, ax = plt.subplots(figsize=(6, 1.8))
    ax.axvspan(-2, 2, color="#deebf7", zorder=0)
    for x in (-2, 2):
        ax.axvline(x, color="#3182bd", lw=1, zorder=1)
    ax.scatter(eigenvalues, [0] * len(eigenvalues), marker="x", color="#de2d26", zorder=2)
    ax.set_yticks([])
    lo = min(-2.5, min(eigenvalues) - 0.5) if eigenvalues else -2.5
    hi = max(2.5, max(eigenvalues) + 0.5) if eigenvalues else 2.5
    ax.set_xlim(lo, hi)
    ax.set_xlabel("eigenvalues")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
