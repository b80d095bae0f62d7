"""ASCII and SVG pictures of tromino tilings."""

from __future__ import annotations

import io
import string

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from .faults import fault_lines  # noqa: E402
from .grid import Tiling  # noqa: E402

_BASE = string.ascii_uppercase + string.ascii_lowercase + string.digits


def piece_symbol(k: int) -> str:
    """A distinct printable character for piece number k."""
    if k < len(_BASE):
        return _BASE[k]
    return chr(0x0100 + k - len(_BASE))  # Latin Extended letters


def ascii_art(t: Tiling) -> str:
    owner = t.cell_owner()
    lines = []
    for r in range(1, t.rows + 1):
        lines.append("".join(piece_symbol(owner[(r, c)]) for c in range(1, t.cols + 1)))
    return "\n".join(lines) + "\n"


def draw_tiling(ax, t: Tiling, show_faults: bool = True, cmap: str = "tab20") -> None:
    """Unit squares filled per piece, thick outlines along piece boundaries."""
    owner = t.cell_owner()
    colours = plt.get_cmap(cmap)
    m, n = t.rows, t.cols
    for (r, c), k in owner.items():
        ax.add_patch(Rectangle((c - 1, m - r), 1, 1, facecolor=colours(k % colours.N), edgecolor="none"))
    segs = []
    for r in range(1, m + 1):
        for c in range(1, n + 1):
            here = owner[(r, c)]
            if c == n or owner[(r, c + 1)] != here:
                segs.append(((c, c), (m - r, m - r + 1)))
            if r == m or owner[(r + 1, c)] != here:
                segs.append(((c - 1, c), (m - r, m - r)))
    segs += [((0, 0), (0, m)), ((0, n), (m, m))]
    for xs, ys in segs:
        ax.plot(xs, ys, color="black", linewidth=2.0, solid_capstyle="round")
    for x in range(1, n):
        ax.plot((x, x), (0, m), color="0.6", linewidth=0.4, zorder=0.5)
    for y in range(1, m):
        ax.plot((0, n), (y, y), color="0.6", linewidth=0.4, zorder=0.5)
    if show_faults:
        for axis, line in fault_lines(t):
            if axis == "h":
                y = m - (line - 1)
                ax.plot((0, n), (y, y), color="red", linestyle="--", linewidth=1.5)
            else:
                ax.plot((line - 1, line - 1), (0, m), color="red", linestyle="--", linewidth=1.5)
    ax.set_xlim(-0.1, n + 0.1)
    ax.set_ylim(-0.1, m + 0.1)
    ax.set_aspect("equal")
    ax.axis("off")


def _figure(t: Tiling, cell_inches: float = 0.4):
    fig, ax = plt.subplots(figsize=(max(1.0, t.cols * cell_inches), max(1.0, t.rows * cell_inches)))
    draw_tiling(ax, t)
    fig.subplots_adjust(0, 0, 1, 1)
    return fig


def render_svg(t: Tiling) -> str:
    """Byte-stable SVG: fixed id salt and no timestamp."""
    with matplotlib.rc_context({"svg.hashsalt": "polyfault", "svg.fonttype": "none"}):
        fig = _figure(t)
        buf = io.StringIO()
        fig.savefig(buf, format="svg", metadata={"Date": None})
        plt.close(fig)
    return buf.getvalue()


def save_figure(t: Tiling, path: str) -> None:
    """Write a picture of ``t``; format follows the file suffix (svg, png, pdf)."""
    if str(path).endswith(".svg"):
        with open(path, "w") as fh:
            fh.write(render_svg(t))
        return
    fig = _figure(t)
    fig.savefig(path, metadata={"Software": None} if str(path).endswith(".png") else None)
    plt.close(fig)
