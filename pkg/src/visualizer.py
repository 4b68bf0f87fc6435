"""
Visualization module for Gotzmann thresholds.
Heatmaps of closed-form or oracle thresholds and f(t)/h(t) profiles.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import matplotlib.ticker as ticker
import numpy as np
import pandas as pd
import seaborn as sns

from gotzmann import f_of_t, h_of_t, threshold_n4


class ThresholdVisualizer:
    """Plots threshold tables and the f/h auxiliaries."""

    def __init__(self):
        self.setup_plotting_style()

    def setup_plotting_style(self) -> None:
        """Set up consistent plotting style."""
        plt.style.use('seaborn-v0_8')
        sns.set_palette("husl")

    def plot_threshold_heatmap(self, rows: List[Dict[str, Optional[int]]],
                               save_path: Optional[str] = None, title: str = "Gotzmann thresholds") -> None:
        """
        Heatmap of threshold over (b, c).

        Args:
            rows: Table rows with keys "b", "threshold" and optionally "c"
            save_path: Optional path to save the plot
            title: Plot title
        """
        if not rows:
            logging.warning("No threshold rows to plot.")
            return
        df = pd.DataFrame(rows)
        if "b" not in df:
            df["b"] = 0
        if "c" not in df:
            df["c"] = 0
        grid = df.pivot(index="b", columns="c", values="threshold").astype(float)

        plt.figure(figsize=(1.2 * grid.shape[1] + 4, 0.8 * grid.shape[0] + 3), dpi=150)
        sns.heatmap(grid, annot=True, fmt="g", cmap="viridis", linewidths=0.5,
                    cbar_kws={"label": "threshold t"})
        plt.xlabel("c (exponent of x3)", fontsize=12)
        plt.ylabel("b (exponent of x2)", fontsize=12)
        plt.title(title, fontsize=14, weight='bold')
        plt.tight_layout()

        if save_path:
            plt.savefig(save_path, dpi=300, bbox_inches='tight')
            logging.info(f"Threshold heatmap saved to {save_path}")
        plt.close()

    def plot_f_h_profile(self, pairs: Sequence[Tuple[int, int]], t_max: Optional[int] = None,
                         save_path: Optional[str] = None) -> None:
        """
        Plot f(t) (solid) and h(t) (dashed) for each (b, c) pair in four variables.

        The threshold of each pair is marked on its f curve.
        """
        if not pairs:
            logging.warning("No (b, c) pairs to plot.")
            return
        if t_max is None:
            t_max = max(threshold_n4(b, c).threshold for b, c in pairs) + 2
        ts = np.arange(t_max + 1)
        colors = sns.color_palette("husl", len(pairs))

        plt.figure(figsize=(12, 6), dpi=150)
        for (b, c), color in zip(pairs, colors):
            f_values = [f_of_t(b, c, int(t)) for t in ts]
            h_values = [h_of_t(b, c, int(t)) for t in ts]
            plt.plot(ts, f_values, color=color, linewidth=2.0, label=f"f, b={b}, c={c}")
            plt.plot(ts, h_values, color=color, linewidth=1.5, linestyle="--", label=f"h, b={b}, c={c}")
            threshold = threshold_n4(b, c).threshold
            if threshold <= t_max:
                plt.scatter([threshold], [f_of_t(b, c, threshold)], color=color, marker="o", zorder=3)

        ax = plt.gca()
        ax.xaxis.set_major_locator(ticker.MaxNLocator(integer=True))
        plt.xlabel("t (exponent of x4)", fontsize=12)
        plt.ylabel("exponent of x4", fontsize=12)
        plt.title("f(t) and h(t)", fontsize=14, weight='bold')
        plt.grid(True, linestyle="--", linewidth=0.5, alpha=0.7)
        plt.legend(fontsize=8, loc="upper left", ncol=2)
        plt.tight_layout()

        if save_path:
            plt.savefig(save_path, dpi=300, bbox_inches='tight')
            logging.info(f"f/h profile saved to {save_path}")
        plt.close()
