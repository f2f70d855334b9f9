"""Matplotlib summary figure written next to a search report."""
from __future__ import annotations

from collections import Counter

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def summary_figure(report, path) -> None:
    """Count histograms and hypothesis-firing bars for a :class:`SearchReport`."""
    fig, (ax_counts, ax_claims) = plt.subplots(1, 2, figsize=(12, 4.5))

    series = {"s-": [c[1] for c in report.counts],
              "s+": [c[2] for c in report.counts],
              "l- (= l+)": [c[3] for c in report.counts]}
    width = 0.27
    for k, (label, values) in enumerate(series.items()):
        hist = Counter(values)
        xs = sorted(hist)
        ax_counts.bar([x + (k - 1) * width for x in xs], [hist[x] for x in xs],
                      width=width, label=label)
    ax_counts.set_xlabel("count per polygon")
    ax_counts.set_ylabel("polygons")
    ax_counts.set_title(f"extremal vertex counts ({len(report.counts)} polygons)")
    ax_counts.legend(frameon=False)

    names = sorted(report.claims)
    fired = [report.claims[c].fired for c in names]
    bad = [report.claims[c].violations for c in names]
    ys = range(len(names))
    ax_claims.barh(ys, fired, color="#7f8c8d", label="hypotheses held")
    ax_claims.barh(ys, bad, color="#c0392b", label="violations")
    ax_claims.set_yticks(list(ys))
    ax_claims.set_yticklabels(names, fontsize=8)
    ax_claims.set_xscale("symlog")
    ax_claims.set_xlabel("records")
    ax_claims.legend(frameon=False, fontsize=8)

    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
