"""Figures of small elements and maximals (p = 2 or 3), rendered off-screen."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

from .core import GoodIdeal  # noqa: E402
from .maximals import classify_maximals  # noqa: E402

_STYLE = {
    "small": dict(c="0.6", s=18, marker="o", label="small elements"),
    "absolute": dict(c="tab:blue", s=60, marker="s", facecolors="none", label="absolute maximals"),
    "relative": dict(c="tab:red", s=90, marker="D", facecolors="none", label="relative maximals"),
    "maximal": dict(c="k", s=30, marker="x", label="maximals"),
}


def plot_ideal(E: GoodIdeal, path: str, title: str = "", extra=None) -> str:
    """Write a scatter of E's small elements and maximals to ``path``.

    ``extra`` maps a legend label to a point set drawn on top.
    """
    if E.p not in (2, 3):
        raise ValueError(f"figures need p = 2 or 3, got {E.p}")
    rep = classify_maximals(E)
    layers = [("small", E.small), ("maximal", rep.maximals),
              ("absolute", rep.absolute), ("relative", rep.relative)]
    fig = plt.figure(figsize=(5, 5))
    ax = fig.add_subplot(projection="3d" if E.p == 3 else None)
    for key, pts in layers:
        if not pts:
            continue
        style = dict(_STYLE[key])
        if "facecolors" in style:
            style["edgecolors"] = style.pop("c")
        ax.scatter(*zip(*sorted(pts)), **style)
    for label, pts in (extra or {}).items():
        if pts:
            ax.scatter(*zip(*sorted(pts)), marker="+", s=80, label=label)
    if E.p == 2:
        g = E.gammaE
        ax.axvline(g[0], color="0.8", lw=0.8, ls="--")
        ax.axhline(g[1], color="0.8", lw=0.8, ls="--")
        ax.set_aspect("equal")
        ax.grid(True, lw=0.3)
    axes = [ax.xaxis, ax.yaxis] + ([ax.zaxis] if E.p == 3 else [])
    for axis in axes:
        axis.set_major_locator(MaxNLocator(integer=True))
    ax.set_xlabel("v1")
    ax.set_ylabel("v2")
    if E.p == 3:
        ax.set_zlabel("v3")
    ax.set_title(title or f"min {E.mu}, conductor {E.gammaE}")
    ax.legend(loc="best", fontsize="small")
    fig.savefig(path, dpi=120, bbox_inches="tight", metadata={"Software": None} if path.endswith(".png") else None)
    plt.close(fig)
    return path
