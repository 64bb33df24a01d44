"""PNG renderings for the verification report.

Uses the headless Agg backend so report generation works without a display;
each function writes one file and returns its path.
"""

from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .bitmatrix import BitMatrix
from .extension import BetaVerdict


def _as_array(matrix: BitMatrix) -> np.ndarray:
    dim = matrix.dim
    return np.array([[matrix.entry(i, j) for j in range(dim)] for i in range(dim)], dtype=np.uint8)


def save_matrix_figure(matrices: Mapping[str, BitMatrix], path: str | Path) -> Path:
    """Bitmap views of the generator matrices, one panel per matrix."""
    path = Path(path)
    names = sorted(matrices)
    columns = 2
    rows = (len(names) + columns - 1) // columns
    fig, axes = plt.subplots(rows, columns, figsize=(3 * columns, 3 * rows))
    for ax, name in zip(np.ravel(axes), names):
        ax.imshow(_as_array(matrices[name]), cmap="binary", interpolation="nearest")
        ax.set_title(name, fontsize=9)
        ax.set_xticks([])
        ax.set_yticks([])
    for ax in np.ravel(axes)[len(names) :]:
        ax.axis("off")
    fig.suptitle("Generator matrices over GF(2)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_closure_growth_figure(generation_sizes: Sequence[int], path: str | Path) -> Path:
    """Frontier size and cumulative element count per closure generation."""
    path = Path(path)
    sizes = list(generation_sizes)
    cumulative = np.cumsum(sizes) if sizes else np.array([])
    fig, ax = plt.subplots(figsize=(6, 4))
    if sizes:
        generations = range(len(sizes))
        ax.semilogy(generations, sizes, marker="o", label="frontier size")
        ax.semilogy(generations, cumulative, marker=".", label="cumulative")
        ax.legend()
    ax.set_xlabel("generation")
    ax.set_ylabel("matrices")
    ax.set_title("Breadth-first closure growth")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_beta_search_figure(verdicts: Sequence[BetaVerdict], path: str | Path) -> Path:
    """Per-exponent extension verdicts, shaded by doubling orbit."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(7, 3))
    exponents = [v.beta_exp for v in verdicts]
    heights = [1 if v.success else -1 for v in verdicts]
    colors = ["tab:green" if v.success else "tab:red" for v in verdicts]
    hatches = ["//" if v.orbit_min == min(exponents, default=1) else "" for v in verdicts]
    bars = ax.bar(exponents, heights, color=colors)
    for bar, hatch in zip(bars, hatches):
        bar.set_hatch(hatch)
    ax.axhline(0, color="black", linewidth=0.8)
    ax.set_xticks(exponents)
    ax.set_yticks([-1, 1])
    ax.set_yticklabels(["fails", "extends"])
    ax.set_xlabel("beta exponent")
    ax.set_title("Extension verdict per choice of beta (hatching marks one doubling orbit)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
