"""SVG figures: quasistar heatmap panels and the four-panel bounds chart.

Output is byte-stable for fixed inputs: the SVG id salt is pinned and the
date metadata dropped.
"""

from __future__ import annotations

import io
import math
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from ddlandscape.bounds import PANELS, BoundsRow, plot_series  # noqa: E402
from ddlandscape.landscape import AXES, QuasistarGrid, StarLandscape  # noqa: E402

SVG_SALT = "ddlandscape"


def _svg_bytes(fig) -> bytes:
    buf = io.BytesIO()
    with matplotlib.rc_context({"svg.hashsalt": SVG_SALT, "svg.fonttype": "none"}):
        fig.savefig(buf, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buf.getvalue()


def _as_float(masked: np.ma.MaskedArray) -> np.ma.MaskedArray:
    return np.ma.MaskedArray(np.asarray(masked.filled(0), dtype=float), mask=np.ma.getmaskarray(masked))


def heatmap_svg(grid: QuasistarGrid, axis: str = "q", values: Sequence[int] = None) -> bytes:
    """One panel per slice along ``axis``, all on the grid's global colour range.

    Holes (and cells removed by the planar filter) stay blank.
    """
    values = list(range(1, grid.n + 1)) if values is None else list(values)
    vmin, vmax = float(grid.min_value), float(grid.max_value)
    rows_ax, cols_ax = grid.slice_axes(axis)
    ncols = min(4, len(values))
    nrows = math.ceil(len(values) / ncols)
    fig, axes = plt.subplots(nrows, ncols, figsize=(2.6 * ncols, 2.4 * nrows + 0.6), squeeze=False)
    cmap = plt.get_cmap("viridis").copy()
    cmap.set_bad("white")
    im = None
    for k, ax in enumerate(axes.flat):
        if k >= len(values):
            ax.axis("off")
            continue
        v = values[k]
        data = _as_float(grid.slice(axis, v))
        ext = (0.5, grid.n + 0.5, grid.n + 0.5, 0.5)
        im = ax.imshow(data, cmap=cmap, vmin=vmin, vmax=vmax, extent=ext, interpolation="nearest")
        ax.set_title(f"{axis} = {v}", fontsize=9)
        ax.set_xlabel(cols_ax, fontsize=8)
        ax.set_ylabel(rows_ax, fontsize=8)
        ax.tick_params(labelsize=6)
    title = f"quasistar n={grid.n}, g={grid.g.spec}" + (" (planar)" if grid.planar_only else "")
    fig.suptitle(title, fontsize=10)
    if im is not None:
        fig.colorbar(im, ax=axes.ravel().tolist(), shrink=0.8, label="total cost")
    return _svg_bytes(fig)


def star_svg(land: StarLandscape) -> bytes:
    fig, ax = plt.subplots(figsize=(4, 3))
    ls = np.arange(1, land.n + 1)
    ax.plot(ls, [float(v) for v in land.values], "o-")
    for l in sorted(land.optimal_positions):
        ax.axvline(l, color="grey", lw=0.8, ls=":")
    ax.set_xlabel("hub position l")
    ax.set_ylabel("total cost")
    ax.set_title(f"star n={land.n}, g={land.g.spec}", fontsize=10)
    fig.tight_layout()
    return _svg_bytes(fig)


def bounds_svg(rows: Sequence[BoundsRow]) -> bytes:
    """Four panels (min, max, star-like band, path band), each with the dashed random baseline."""
    series = plot_series(rows)
    fig, axes = plt.subplots(2, 2, figsize=(8, 6))
    for ax, (panel, title) in zip(axes.flat, PANELS.items()):
        names = list(dict.fromkeys(s for p, s, _, _ in series if p == panel))
        for name in names:
            pts = [(n, float(v)) for p, s, n, v in series if p == panel and s == name]
            xs, ys = zip(*pts)
            style = dict(ls="--", color="black", lw=1) if name == "random" else dict(marker="o", ms=3)
            ax.plot(xs, ys, label=name, **style)
        ax.set_title(title, fontsize=9)
        ax.set_xlabel("n", fontsize=8)
        ax.tick_params(labelsize=7)
        ax.legend(fontsize=6)
    fig.tight_layout()
    return _svg_bytes(fig)


__all__ = ["heatmap_svg", "star_svg", "bounds_svg", "AXES"]
