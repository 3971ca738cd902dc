#!/usr/bin/env python3
"""Render the four figure datasets emitted by `purify curve`.

Usage:
    purify curve --figure fig1 --lambda 0.5 --out out/fig1.csv
    purify curve --figure fig2 --out out/fig2.csv
    purify curve --figure fig3 --out out/fig3.csv
    purify curve --figure fig4 --lambda 0.5 --out out/fig4.csv
    python3 docs/plot_figures.py --dir out

Missing files are skipped; PNGs land next to the CSVs.
"""

import argparse
import csv
import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def read_rows(path):
    with open(path, newline="") as f:
        reader = csv.DictReader(f)
        return reader.fieldnames, list(reader)


def plot_fig1(path, out):
    _, rows = read_rows(path)
    n = [int(r["n"]) for r in rows]
    plt.figure(figsize=(5, 4))
    plt.plot(n, [float(r["f_zero"]) for r in rows], label="no output demand")
    plt.plot(n, [float(r["f_one"]) for r in rows], label="one output")
    plt.plot(n, [float(r["f_inf"]) for r in rows], label="infinite outputs")
    plt.xlabel("N")
    plt.ylabel("one-qubit fidelity")
    plt.legend()
    plt.tight_layout()
    plt.savefig(out)
    plt.close()


def plot_fig2(path, out):
    fields, rows = read_rows(path)
    mu = [float(r["mu"]) for r in rows]
    plt.figure(figsize=(5, 4))
    for field in fields:
        if field.startswith("phi_lambda_"):
            plt.plot(mu, [float(r[field]) for r in rows], lw=0.8)
    natural = [(float(r["mu"]), float(r["natural_phi"]))
               for r in rows if r["natural_phi"]]
    plt.plot(*zip(*natural), "k:", label="natural purifier")
    plt.xlabel("rate mu = M/N")
    plt.ylabel("Phi(mu)")
    plt.legend()
    plt.tight_layout()
    plt.savefig(out)
    plt.close()


def plot_fig3(path, out):
    _, rows = read_rows(path)
    by_n = {}
    for r in rows:
        by_n.setdefault(int(r["n"]), []).append((float(r["x"]), float(r["density"])))
    plt.figure(figsize=(5, 4))
    for n, points in sorted(by_n.items()):
        plt.plot(*zip(*points), marker=".", ms=3, lw=0.8, label=f"N = {n}")
    plt.xlabel("x = 2s/N")
    plt.ylabel("rescaled density")
    plt.legend()
    plt.tight_layout()
    plt.savefig(out)
    plt.close()


def plot_fig4(path, out):
    _, rows = read_rows(path)
    mu = [float(r["mu"]) for r in rows]
    plt.figure(figsize=(5, 4))
    plt.plot(mu, [float(r["exact"]) for r in rows], label="exact")
    plt.plot(mu, [float(r["refined"]) for r in rows], "--", label="refined bound")
    plt.plot(mu, [float(r["crude"]) for r in rows], ":", label="crude bound")
    plt.ylim(0.0, 1.05)
    plt.xlabel("rate mu = M/N")
    plt.ylabel("Phi(mu)")
    plt.legend()
    plt.tight_layout()
    plt.savefig(out)
    plt.close()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dir", default=".", help="directory with fig*.csv")
    args = parser.parse_args()
    directory = pathlib.Path(args.dir)
    plotters = {
        "fig1": plot_fig1,
        "fig2": plot_fig2,
        "fig3": plot_fig3,
        "fig4": plot_fig4,
    }
    for name, plotter in plotters.items():
        csv_path = directory / f"{name}.csv"
        if not csv_path.exists():
            print(f"skip {csv_path} (not found)")
            continue
        png_path = directory / f"{name}.png"
        plotter(csv_path, png_path)
        print(f"wrote {png_path}")


if __name__ == "__main__":
    main()
