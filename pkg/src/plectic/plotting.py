"""Render entropy/disorder curves to an image file.

The CSV stream stays the canonical output of the curve command; this module
adds the optional figure next to it.
"""

from __future__ import annotations


def save_curve_figure(samples, path: str) -> None:
    """Plot (x, entropy, disorder) samples as two panels and save to ``path``."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    xs = [s[0] for s in samples]
    entropies = [s[1] for s in samples]
    disorders = [s[2] for s in samples]

    fig, (ax_e, ax_d) = plt.subplots(1, 2, figsize=(9, 3.5))
    ax_e.plot(xs, entropies, marker="o", markersize=3)
    ax_e.set_xlabel("x")
    ax_e.set_ylabel("entropy (nats)")
    ax_e.set_title("entropy of the iterated stacking")
    ax_d.plot(xs, disorders, marker="o", markersize=3, color="tab:orange")
    ax_d.set_xlabel("x")
    ax_d.set_ylabel("disorder")
    ax_d.set_title("entropy / maximal entropy")
    for ax in (ax_e, ax_d):
        ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
