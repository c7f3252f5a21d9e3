"""Growth figures written next to the tabular output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

from .automaton import GrowthReport  # noqa: E402


def plot_growth(report: GrowthReport, path: str | Path, title: str = "") -> Path:
    """Per-length and cumulative normal-word counts, linear axes, saved to ``path``."""
    path = Path(path)
    lengths = list(range(len(report.counts)))
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
    ax1.plot(lengths, report.counts, "o-", color="tab:blue")
    ax1.set_xlabel("word length")
    ax1.set_ylabel("normal words")
    ax2.plot(lengths, report.cumulative, "s-", color="tab:red")
    ax2.set_xlabel("length bound")
    ax2.set_ylabel("normal words (cumulative)")
    for ax in (ax1, ax2):
        ax.grid(alpha=0.3)
        ax.xaxis.set_major_locator(MaxNLocator(integer=True))
    fig.suptitle(f"{title}  [{report.label}]".strip())
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
