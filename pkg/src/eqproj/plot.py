"""Scatter figures of per-plane bases in the (alpha^G, |alpha|) picture.

Reproduces the 2-unit-cell diagrams: each basis generator is a dot at
(fixed degree, total degree) with its monomial as a label, one figure per
plane, written as image files next to the delimited CLI output.
"""

from __future__ import annotations

from pathlib import Path

from .expr import monomial_latex
from .ring import RingParams, basis_slice


def render_basis_planes(
    params: RingParams, planes: list[int], outdir: str | Path, dpi: int = 130
) -> list[Path]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for n in planes:
        basis = basis_slice(params, n)
        xs = [g.fixed_degree for g, _ in basis]
        ys = [g.total_degree for g, _ in basis]
        fig, ax = plt.subplots(figsize=(5.2, 5.2))
        lo = 2 * ((min(xs + ys) - 2) // 2)
        hi = 2 * ((max(xs + ys) + 3) // 2)
        ticks = range(lo, hi + 1, 2)
        ax.set_xticks(list(ticks))
        ax.set_yticks(list(ticks))
        ax.grid(True, which="both", color="0.85", linewidth=0.6)
        ax.axhline(0, color="0.2", linewidth=1.0)
        ax.axvline(0, color="0.2", linewidth=1.0)
        ax.scatter(xs, ys, s=28, color="black", zorder=3)
        for (g, el), x, y in zip(basis, xs, ys):
            (mono, _scalar), = el.items()
            ax.annotate(
                f"${monomial_latex(mono)}$",
                (x, y),
                textcoords="offset points",
                xytext=(7, 3),
                fontsize=9,
            )
        ax.set_xlabel(r"$\alpha^G$")
        ax.set_ylabel(r"$|\alpha|$")
        ax.set_title(rf"plane $n = {n}$,  $p = {params.p}$, $q = {params.q}$")
        ax.set_xlim(lo, hi)
        ax.set_ylim(lo, hi)
        ax.set_aspect("equal")
        path = outdir / f"basis_p{params.p}_q{params.q}_n{n}.png"
        fig.savefig(path, dpi=dpi, bbox_inches="tight")
        plt.close(fig)
        written.append(path)
    return written
