"""Figure rendering for benchmark reports (headless, file output only)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bench import BenchReport

_AXIS_LABELS = {
    "workers": "workers",
    "pattern_length": "pattern length (bytes)",
    "file_size": "corpus size (bytes)",
    "block_dim": "threads per block",
}

# These axes sweep values spanning orders of magnitude.
_LOG_AXES = {"file_size", "block_dim", "pattern_length"}


def render_report_figure(report: BenchReport, path) -> None:
    """Two-panel PNG: timing curves on the left, speedup on the right."""
    xs = [row.axis_value for row in report.rows]
    label = _AXIS_LABELS.get(report.axis, report.axis)

    fig, (ax_time, ax_speed) = plt.subplots(1, 2, figsize=(9.0, 3.4))

    ax_time.plot(xs, [r.t_seq_ms for r in report.rows], marker="o", label="sequential")
    ax_time.plot(xs, [r.t_par_ms for r in report.rows], marker="s", label="parallel")
    ax_time.set_xlabel(label)
    ax_time.set_ylabel("median time (ms)")
    ax_time.legend(frameon=False)

    ax_speed.plot(xs, [r.speedup for r in report.rows], marker="d", color="tab:green")
    ax_speed.axhline(1.0, color="grey", lw=0.8, ls="--")
    ax_speed.set_xlabel(label)
    ax_speed.set_ylabel("speedup (seq / par)")

    if report.axis in _LOG_AXES and len(xs) > 1 and min(xs) > 0:
        ax_time.set_xscale("log", base=2)
        ax_speed.set_xscale("log", base=2)

    for ax in (ax_time, ax_speed):
        ax.spines["right"].set_visible(False)
        ax.spines["top"].set_visible(False)

    fig.suptitle(f"sequential vs parallel scan, swept over {label}", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
