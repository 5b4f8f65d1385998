"""Figures for benchmark reports (rendered off-screen to a file)."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bench import BenchReport  # noqa: E402


def plot_bench(reports: Sequence[BenchReport], path: str | Path,
               thresholds: dict[str, float] | None = None) -> Path:
    """Per-run throughput for each report, with its mean as a horizontal line."""
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    for k, rep in enumerate(reports):
        color = f"C{k}"
        rates = [n / t if t > 0 else 0.0 for t, n in rep.runs]
        runs = range(1, len(rates) + 1)
        ax.plot(runs, rates, "o-", color=color, ms=4, lw=1, label=f"{rep.stage}")
        ax.axhline(rep.tokens_per_sec, color=color, lw=0.8, alpha=0.6)
        if thresholds and rep.stage in thresholds:
            ax.axhline(thresholds[rep.stage], color=color, lw=0.8, ls="--")
    ax.set_xlabel("measured run")
    ax.set_ylabel("tokens / second")
    ax.set_ylim(bottom=0)
    ax.legend(frameon=False, fontsize="small")
    if reports:
        ax.set_title(f"{reports[0].tokens:,} tokens, {reports[0].warmup} warmup run(s) excluded",
                     fontsize="small")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
