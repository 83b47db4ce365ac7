"""Figure rendering for grids and experiment summaries.

All figures are written straight to files with the non-interactive Agg
backend; nothing here ever opens a window.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def render_grid_heatmap(grid, path, annotate_upto=18):
    """Heatmap of a Sprague-Grundy grid; small boards get cell labels."""
    fig, ax = plt.subplots(figsize=(7, 6))
    image = ax.imshow(grid.values, origin="lower", cmap="viridis", interpolation="nearest")
    fig.colorbar(image, ax=ax, label="Sprague-Grundy value")
    ax.set_xlabel("second pile")
    ax.set_ylabel("first pile")
    ax.set_title(f"{grid.rules.family} (a={grid.rules.a}), board {grid.size}x{grid.size}")
    if grid.size <= annotate_upto:
        for m in range(grid.size):
            for n in range(grid.size):
                ax.text(n, m, str(grid.values[m][n]), ha="center", va="center",
                        color="white", fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_alphabet_growth(records, path):
    """Step-alphabet size against the number of solved positions."""
    fig, ax = plt.subplots(figsize=(6, 4))
    by_a = {}
    for rec in records:
        by_a.setdefault(rec.a, []).append((rec.n, len(rec.step_alphabet)))
    for a, points in sorted(by_a.items()):
        points.sort()
        ax.plot([n for n, _ in points], [s for _, s in points],
                marker="o", label=f"a={a}")
    ax.set_xlabel("positions solved")
    ax.set_ylabel("distinct steps")
    ax.set_title("step alphabet growth")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
