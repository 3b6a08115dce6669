"""
Trace plots as SVG using matplotlib.
"""
from pathlib import Path

import matplotlib
matplotlib.use('Agg')  # Use non-GUI backend
import matplotlib.pyplot as plt

from ..solver import EnergyTrace

PLOTTED_COLUMNS = ("l2", "A", "B")


def generate_trace_chart(trace: EnergyTrace, path: Path, config_digest: str, title: str = "Energy trace") -> str:
    """
    Line plot of t -> l2, A, B on a log scale when every value is positive.

    The SVG is reproducible: fixed hash salt and no date in the metadata.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    t = trace.column("t")

    with plt.rc_context({"svg.hashsalt": config_digest, "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(8, 4))
        positive = True
        for name in PLOTTED_COLUMNS:
            values = trace.column(name)
            positive = positive and bool(values.size) and bool((values > 0).all())
            ax.plot(t, values, label=name, linewidth=1.2)
        if positive:
            ax.set_yscale('log')

        ax.set_title(title, fontsize=12, fontweight='bold', pad=10)
        ax.set_xlabel('t', fontsize=10)
        ax.grid(alpha=0.3, linestyle='--')
        ax.legend(loc='best', fontsize=9)
        plt.tight_layout()

        plt.savefig(path, format='svg', metadata={"Date": None, "Title": f"config_digest={config_digest}"})
        plt.close(fig)
    return str(path)


class TraceChartReporter:
    def generate_report(self, data: EnergyTrace, path: Path, config_digest: str) -> str:
        return generate_trace_chart(data, path, config_digest)
