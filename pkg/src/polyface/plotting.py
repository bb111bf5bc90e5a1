"""Figures for verification sweeps, written to image files."""

from __future__ import annotations

from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .verify import VerificationReport  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
}


def plot_triangle_counts(report: VerificationReport, path: Path) -> Path:
    """Triangle count of O(P) against C(P), one marker per poset."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.2, 4.0))
        for x_free, marker, label in ((True, "o", "X-free"), (False, "^", "contains X")):
            pts = [(r.fO[2], r.fC[2]) for r in report.rows if r.x_free == x_free]
            if pts:
                xs, ys = zip(*pts)
                ax.scatter(xs, ys, s=14, marker=marker, alpha=0.7, label=f"{label} ({len(pts)})")
        top = max([max(r.fO[2], r.fC[2]) for r in report.rows] + [1])
        ax.plot([0, top], [0, top], color="0.5", lw=0.8, ls="--")
        ax.set_xlabel("triangles of O(P)")
        ax.set_ylabel("triangles of C(P)")
        ax.legend(frameon=False)
        fig.tight_layout()
        fig.savefig(path, dpi=150)
        plt.close(fig)
    return path


def plot_sweep_summary(report: VerificationReport, path: Path) -> Path:
    """Posets per size, split by whether the triangle inequality is strict."""
    strict = Counter(r.poset.n for r in report.rows if r.fO[2] < r.fC[2])
    sizes = sorted(report.per_n)
    equal = [report.per_n[n] - strict[n] for n in sizes]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.2, 3.2))
        ax.bar(sizes, equal, label="equal triangle counts")
        ax.bar(sizes, [strict[n] for n in sizes], bottom=equal, label="strictly fewer in O(P)")
        ax.set_yscale("log")
        ax.set_xticks(sizes)
        ax.set_xlabel("|P|")
        ax.set_ylabel("posets up to isomorphism")
        ax.legend(frameon=False)
        fig.tight_layout()
        fig.savefig(path, dpi=150)
        plt.close(fig)
    return path


def write_figures(report: VerificationReport, outdir: str | Path) -> list[str]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = [
        plot_triangle_counts(report, outdir / "triangle_counts.png"),
        plot_sweep_summary(report, outdir / "sweep_summary.png"),
    ]
    return [str(p) for p in paths]
