"""Benchmark figures."""
from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import NullFormatter, ScalarFormatter  # noqa: E402

from .bench import BenchRow  # noqa: E402


def plot_bench(rows: Sequence[BenchRow], path: str | Path) -> Path:
    """Mean ops and mean wall time against order, log-log, one line per method.

    A dashed n^3 guide passes through the costliest method's largest order.
    """
    path = Path(path)
    fig, (ax_ops, ax_time) = plt.subplots(1, 2, figsize=(10, 4))
    methods = list(dict.fromkeys(r.method for r in rows))
    anchor = None
    for method in methods:
        mine = sorted((r for r in rows if r.method is method), key=lambda r: r.n)
        ns = [r.n for r in mine]
        ax_time.plot(ns, [r.mean_wall_time for r in mine], "o-", label=method.value)
        with_ops = [r for r in mine if r.mean_ops]
        if with_ops:
            ax_ops.plot([r.n for r in with_ops], [r.mean_ops for r in with_ops], "o-",
                        label=method.value)
            last = with_ops[-1]
            if anchor is None or (last.n, last.mean_ops) > anchor:
                anchor = (last.n, last.mean_ops)
    if anchor is not None:
        ns = sorted({r.n for r in rows if r.n > 0})
        n0, y0 = anchor
        ax_ops.plot(ns, [y0 * (n / n0) ** 3 for n in ns], "k--", lw=0.8, label="~n^3")
    orders = sorted({r.n for r in rows})
    for ax, label in ((ax_ops, "mean ring operations"), (ax_time, "mean wall time [s]")):
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_xticks(orders)
        ax.xaxis.set_major_formatter(ScalarFormatter())
        ax.xaxis.set_minor_formatter(NullFormatter())
        ax.set_xlabel("order n")
        ax.set_ylabel(label)
        ax.grid(True, which="both", alpha=0.3)
        if ax.get_legend_handles_labels()[0]:
            ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
