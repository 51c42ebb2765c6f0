"""Single place for figure styling so renders are reproducible."""

import matplotlib

matplotlib.use("Agg")

RC = {
    "figure.figsize": (6.0, 4.0),
    "figure.dpi": 110,
    "savefig.dpi": 110,
    "font.size": 10,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "lines.linewidth": 1.4,
    "svg.hashsalt": "plotkit",
}

# fixed cycle so curve colors do not depend on matplotlib defaults
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")

# strip metadata that would otherwise make output bytes vary between runs
PNG_METADATA = {"Software": "plotkit"}


def color(i: int) -> str:
    return COLORS[i % len(COLORS)]


def save(fig, path: str):
    """Write the figure deterministically and close it."""
    kwargs = {}
    if path.lower().endswith(".png"):
        kwargs["metadata"] = PNG_METADATA
    fig.savefig(path, **kwargs)
    import matplotlib.pyplot as plt

    plt.close(fig)
