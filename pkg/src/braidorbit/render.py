"""Draw braid diagrams (optionally with their up-down colouring) to image files."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Circle  # noqa: E402

from .braid_core import BraidWord, Kind  # noqa: E402
from .updown import act  # noqa: E402

GAP = 0.18  # fraction of a crossing segment left blank around an under-pass


def _levels(x: Sequence[int], w: BraidWord) -> list[tuple[int, ...]]:
    """Labels on every edge crossing each horizontal level, top to bottom."""
    out = [tuple(x)]
    for letter in w.letters:
        out.append(act(out[-1], BraidWord(w.degree, (letter,))))
    return out


def draw_braid(w: BraidWord, x: Sequence[int] | None = None, ax=None, title: str | None = None):
    """Draw ``w`` top to bottom on ``ax``; returns the figure."""
    n, m = w.degree, len(w)
    if ax is None:
        fig, ax = plt.subplots(figsize=(1.0 + 0.8 * n, 1.0 + 0.55 * max(m, 1)))
    else:
        fig = ax.figure
    line = dict(color="black", lw=2, solid_capstyle="round")

    for k, (kind, i) in enumerate(w.letters):
        top, bot = -k, -(k + 1)
        for c in range(1, n + 1):
            if c not in (i, i + 1):
                ax.plot([c, c], [top, bot], **line)
        # strand moving right (column i -> i+1) and strand moving left
        right = ([i, i + 1], [top, bot])
        left = ([i + 1, i], [top, bot])
        under = {Kind.POSITIVE: right, Kind.NEGATIVE: left}.get(kind)
        over = left if under is right else right
        if under is None:
            ax.plot(*right, **line)
            ax.plot(*left, **line)
            ax.add_patch(Circle((i + 0.5, top - 0.5), 0.16, fill=False, lw=1.2, color="tab:blue"))
            continue
        ax.plot(*over, **line)
        (x0, x1), (y0, y1) = under
        for a, b in ((0.0, 0.5 - GAP), (0.5 + GAP, 1.0)):
            ax.plot([x0 + a * (x1 - x0), x0 + b * (x1 - x0)],
                    [y0 + a * (y1 - y0), y0 + b * (y1 - y0)], **line)
    if m == 0:
        for c in range(1, n + 1):
            ax.plot([c, c], [0, -1], **line)

    if x is not None:
        for k, labels in enumerate(_levels(x, w)):
            for c, val in enumerate(labels, start=1):
                ax.text(c + 0.08, -k, str(val), fontsize=8, color="tab:red",
                        va="center", ha="left",
                        bbox=dict(boxstyle="round,pad=0.1", fc="white", ec="none", alpha=0.8))

    ax.plot([0.6, n + 0.4], [0, 0], color="gray", lw=3)
    bottom = -max(m, 1)
    ax.plot([0.6, n + 0.4], [bottom, bottom], color="gray", lw=3)
    ax.set_xlim(0.4, n + 0.8)
    ax.set_ylim(bottom - 0.4, 0.4)
    ax.set_xticks(range(1, n + 1))
    ax.set_yticks([])
    for side in ("left", "right", "top"):
        ax.spines[side].set_visible(False)
    ax.set_title(title if title is not None else (str(w) or "identity"), fontsize=9)
    return fig


def render_to_file(w: BraidWord, path: str | Path, x: Sequence[int] | None = None,
                   title: str | None = None) -> Path:
    """Write the diagram to ``path``; the format follows the extension (svg, pdf, png)."""
    path = Path(path)
    fig = draw_braid(w, x, title=title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
