#!/usr/bin/env python3
"""Plot the partner-pair tables emitted by `ptsusy weierstrass`.

Usage:
    ptsusy weierstrass --preset fig1 --out fig1.csv
    ptsusy weierstrass --preset fig2 --out fig2.csv
    python scripts/plot_figures.py fig1.csv fig2.csv
"""

import csv
import sys

import matplotlib.pyplot as plt


def load(path):
    with open(path, newline="") as f:
        reader = csv.reader(f)
        header = next(reader)
        cols = {name: [] for name in header}
        for row in reader:
            for name, cell in zip(header, row):
                cols[name].append(float(cell))
    return cols


def main(paths):
    fig, axes = plt.subplots(len(paths), 2, figsize=(9, 3.2 * len(paths)), squeeze=False)
    for row, path in enumerate(paths):
        cols = load(path)
        z = cols["z"]
        axes[row][0].plot(z, cols["V+R"])
        axes[row][0].set_ylim(0, 30)
        axes[row][0].set_xlabel("z")
        axes[row][0].set_ylabel("V+_R")
        axes[row][0].set_title(path)
        axes[row][1].plot(z, cols["V-I"], color="tab:red")
        axes[row][1].set_xlabel("z")
        axes[row][1].set_ylabel("V-_I")
    fig.tight_layout()
    out = "partner_pair_plots.png"
    fig.savefig(out, dpi=150)
    print(f"wrote {out}")


if __name__ == "__main__":
    if len(sys.argv) < 2:
        sys.exit(__doc__)
    main(sys.argv[1:])
