"""Figure renderers for campaign reports.

Writes PNGs next to the delimited report when the CLI is given a figures
directory.  Headless backend; nothing here touches the verification math.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.colors import ListedColormap

PASS_COLOR = "#2e7d32"
FAIL_COLOR = "#c62828"
_OUTCOME_CMAP = ListedColormap([FAIL_COLOR, PASS_COLOR])
_GOLDEN = (math.sqrt(5) - 1) / 2


def _fig_size(cols: int, rows: int) -> tuple[float, float]:
    width = min(16.0, max(5.0, 0.45 * cols + 2.5))
    height = min(12.0, max(width * _GOLDEN, 0.3 * rows + 1.5))
    return width, height


def save_outcome_grid(path: Path, rows: list[str], cols: list[str], ok, title: str) -> None:
    """Green/red pass-fail matrix with labeled axes."""
    data = [[1 if cell else 0 for cell in row] for row in ok]
    fig, ax = plt.subplots(figsize=_fig_size(len(cols), len(rows)))
    ax.imshow(data, cmap=_OUTCOME_CMAP, vmin=0, vmax=1, aspect="auto", interpolation="nearest")
    ax.set_xticks(range(len(cols)))
    ax.set_xticklabels(cols, rotation=90, fontsize=7)
    ax.set_yticks(range(len(rows)))
    ax.set_yticklabels(rows, fontsize=7)
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_suite_bars(path: Path, bars: list[dict], title: str) -> None:
    """One horizontal bar per suite, sized by case count, colored by outcome."""
    names = [b["name"] for b in bars]
    cases = [b["cases"] for b in bars]
    colors = [FAIL_COLOR if b["failures"] else PASS_COLOR for b in bars]
    fig, ax = plt.subplots(figsize=_fig_size(10, len(bars) + 2))
    ax.barh(range(len(bars)), cases, color=colors)
    ax.set_yticks(range(len(bars)))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("cases checked")
    ax.set_title(title)
    for k, b in enumerate(bars):
        if b["failures"]:
            ax.text(b["cases"], k, f"  {b['failures']} failed", va="center", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_grids(outdir: Path, grids: list[dict]) -> list[Path]:
    """Render every campaign grid into ``outdir``; returns the written paths."""
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for grid in grids:
        path = outdir / f"{grid['name']}.png"
        if "bars" in grid:
            save_suite_bars(path, grid["bars"], grid["title"])
        else:
            save_outcome_grid(path, grid["rows"], grid["cols"], grid["ok"], grid["title"])
        written.append(path)
    return written
