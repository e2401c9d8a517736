"""Matplotlib figures for the compare and bench reports.

These are presentation extras next to the delimited output; import of
matplotlib is deferred so the rest of the package works without a
rendering stack loaded.
"""

from __future__ import annotations

from .curve import Polyline


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def comparison_figure(curve: Polyline, results: list[tuple[str, list]], eps: float, path: str) -> None:
    """One panel per algorithm: the input curve with the simplification overlaid."""
    plt = _pyplot()
    n = len(results)
    fig, axes = plt.subplots(1, n, figsize=(4.2 * n, 4.2), squeeze=False)
    cx = [p.x for p in curve.vertices]
    cy = [p.y for p in curve.vertices]
    for ax, (name, chain) in zip(axes[0], results):
        ax.plot(cx, cy, color="#b0b6bb", linewidth=1.4, zorder=1)
        pts = [curve.embed(cp) for cp in chain]
        ax.plot([p.x for p in pts], [p.y for p in pts], "o--", color="#c0392b",
                linewidth=1.6, markersize=4, zorder=2)
        ax.set_title(f"{name} ({len(chain) - 1} links)")
        ax.set_aspect("equal")
    fig.suptitle(f"eps = {eps:g}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def bench_figure(rows: list[tuple[int, str, float]], slopes: dict[str, float], path: str) -> None:
    """Log-log runtime per algorithm with the fitted slope in the legend."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(5.5, 4.2))
    algos = sorted({r[1] for r in rows})
    for name in algos:
        ns = [r[0] for r in rows if r[1] == name]
        ts = [r[2] for r in rows if r[1] == name]
        label = name if name not in slopes else f"{name} (slope {slopes[name]:.2f})"
        ax.loglog(ns, ts, "o-", label=label)
    ax.set_xlabel("n (vertices)")
    ax.set_ylabel("seconds")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
