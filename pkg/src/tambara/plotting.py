"""Figures for CLI reports: the specialization poset and the verify summary."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

# fixed metadata keeps repeated renders byte-identical
_METADATA = {
    ".png": {"Software": None},
    ".svg": {"Date": None, "Creator": None},
    ".pdf": {"CreationDate": None, "Creator": None, "Producer": None},
}


def _save(fig, path) -> Path:
    path = Path(path)
    meta = _METADATA.get(path.suffix.lower())
    fig.savefig(path, metadata=meta, dpi=120)
    plt.close(fig)
    return path


def _heights(n: int, edges) -> list[int]:
    below = {j: [i for i, jj in edges if jj == j] for j in range(n)}
    memo: dict = {}

    def h(j):
        if j not in memo:
            memo[j] = 1 + max((h(i) for i in below[j]), default=-1)
        return memo[j]

    return [h(j) for j in range(n)]


def plot_spectrum(points: list[str], edges: list[tuple[int, int]], path, title: str = "Spec") -> Path:
    """Hasse diagram, smaller primes lower; ``points`` are node labels."""
    n = len(points)
    fig, ax = plt.subplots(figsize=(max(4, 1.6 * n), 3.5))
    heights = _heights(n, edges)
    rows: dict = {}
    for i, h in enumerate(heights):
        rows.setdefault(h, []).append(i)
    pos = {}
    for h, members in rows.items():
        for k, i in enumerate(members):
            pos[i] = (k - (len(members) - 1) / 2, h)
    for i, j in edges:
        (x0, y0), (x1, y1) = pos[i], pos[j]
        ax.plot([x0, x1], [y0, y1], color="0.4", lw=1, zorder=1)
    for i, label in enumerate(points):
        x, y = pos[i]
        ax.scatter([x], [y], s=300, color="#4c72b0", zorder=2)
        ax.annotate(label, (x, y), textcoords="offset points", xytext=(0, 12), ha="center", fontsize=8)
    if not points:
        ax.text(0.5, 0.5, "empty spectrum", ha="center", va="center", transform=ax.transAxes)
    ax.set_title(title)
    ax.set_axis_off()
    ax.margins(0.3)
    return _save(fig, path)


def plot_verify_summary(outcomes, path) -> Path:
    """Functor by invariant grid: green pass, red fail, grey not applicable."""
    functors = sorted({o.functor for o in outcomes})
    invariants = list(dict.fromkeys(o.invariant for o in outcomes))
    colour = {True: (0.33, 0.66, 0.41), False: (0.77, 0.31, 0.32), None: (0.85, 0.85, 0.85)}
    grid = [[colour[None]] * len(invariants) for _ in functors]
    for o in outcomes:
        grid[functors.index(o.functor)][invariants.index(o.invariant)] = colour[o.passed]
    fig, ax = plt.subplots(figsize=(1 + 0.8 * max(len(invariants), 1), 1 + 0.35 * max(len(functors), 1)))
    if functors:
        ax.imshow(grid, aspect="auto")
        ax.set_xticks(range(len(invariants)))
        ax.set_xticklabels(invariants, rotation=45, ha="right", fontsize=7)
        ax.set_yticks(range(len(functors)))
        ax.set_yticklabels(functors, fontsize=7)
    else:
        ax.text(0.5, 0.5, "empty corpus", ha="center", va="center", transform=ax.transAxes)
        ax.set_axis_off()
    ax.set_title("verify")
    fig.tight_layout()
    return _save(fig, path)
