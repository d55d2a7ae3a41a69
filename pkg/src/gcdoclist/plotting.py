"""Figures for the ``bench`` and ``report`` commands.

Everything renders off-screen with the Agg backend and writes straight to a
file; the format follows the file extension.
"""
from __future__ import annotations

from collections import defaultdict
from pathlib import Path
from typing import Iterable, Mapping

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

MODE_COLORS = {"gcda": "#1f77b4", "brute-c": "#ff7f0e", "brute-d": "#2ca02c"}


def _axes(width: float = 6.0, height: float = 4.0):
    fig, ax = plt.subplots(figsize=(width, height))
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    ax.grid(True, which="major", linestyle=":", linewidth=0.6, alpha=0.7)
    return fig, ax


def _finish(fig, path: str | Path) -> Path:
    path = Path(path)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_bench(rows: Iterable[Mapping], path: str | Path) -> Path:
    """Per-query time against occurrence count, one series per listing mode."""
    series = defaultdict(lambda: ([], []))
    for row in rows:
        xs, ys = series[row["mode"]]
        xs.append(max(int(row["occ"]), 1))
        ys.append(max(float(row["microseconds"]), 1e-3))
    fig, ax = _axes()
    for mode, (xs, ys) in sorted(series.items()):
        ax.scatter(xs, ys, s=10, alpha=0.6, label=mode, color=MODE_COLORS.get(mode))
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("occurrences (ep - sp + 1)")
    ax.set_ylabel("time per query (µs)")
    ax.legend(frameon=False)
    return _finish(fig, path)


def plot_trend(rows: Iterable[Mapping], path: str | Path) -> Path:
    """Stacked index components against mutation rate."""
    rows = sorted(rows, key=lambda r: float(r["rate"]))
    labels = [f"{float(r['rate']):g}" for r in rows]
    grammar = [int(r["grammar_bytes"]) / 1024 for r in rows]
    lists = [int(r["lists_bytes"]) / 1024 for r in rows]
    fig, ax = _axes()
    ax.bar(labels, grammar, label="DA grammar", color="#4c72b0")
    ax.bar(labels, lists, bottom=grammar, label="document lists", color="#dd8452")
    ax.set_xlabel("mutation rate")
    ax.set_ylabel("size (KiB)")
    ax.legend(frameon=False)
    return _finish(fig, path)
