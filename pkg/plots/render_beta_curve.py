#!/usr/bin/env python3
"""Render the exact swap-probability curve over beta, with optional estimates.

Usage: render_beta_curve.py IN.csv OUT.png [--estimates EST.csv]

IN.csv comes from ``pivotlab sweep`` (columns beta,p_exact).  EST.csv, if
given, comes from ``pivotlab estimate``/``pivotlab table1`` and overlays
points with 95% confidence bars; its rows must carry a beta value.  A sidecar
OUT.json records every plotted series.
"""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from plotcommon import parse_float, read_rows, write_sidecar

SWEEP_COLUMNS = ["beta", "p_exact"]
ESTIMATE_COLUMNS = ["label", "beta", "rule", "trials", "p_hat",
                    "std_err", "ci_lo", "ci_hi", "seed"]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("input")
    parser.add_argument("output")
    parser.add_argument("--estimates", default=None)
    args = parser.parse_args()

    rows = read_rows(args.input, SWEEP_COLUMNS)
    betas = [parse_float(r, "beta", args.input) for r in rows]
    probs = [parse_float(r, "p_exact", args.input) for r in rows]

    fig, ax = plt.subplots(figsize=(6.4, 4.2), dpi=120)
    ax.plot(betas, probs, color="tab:blue", lw=1.8, label="exact")

    payload = {"kind": "beta_curve", "exact": {"beta": betas, "p_exact": probs}}

    if args.estimates is not None:
        est_rows = read_rows(args.estimates, ESTIMATE_COLUMNS)
        if any(r["beta"] == "" for r in est_rows):
            from plotcommon import fail

            fail(f"{args.estimates}: estimate rows need a beta value "
                 "to place on the curve")
        xs = [parse_float(r, "beta", args.estimates) for r in est_rows]
        ys = [parse_float(r, "p_hat", args.estimates) for r in est_rows]
        lo = [parse_float(r, "ci_lo", args.estimates) for r in est_rows]
        hi = [parse_float(r, "ci_hi", args.estimates) for r in est_rows]
        yerr = [[y - a for y, a in zip(ys, lo)], [b - y for y, b in zip(ys, hi)]]
        ax.errorbar(xs, ys, yerr=yerr, fmt="o", ms=4, color="tab:red",
                    capsize=3, lw=1, label="Monte Carlo (95% CI)")
        payload["estimates"] = {"beta": xs, "p_hat": ys, "ci_lo": lo, "ci_hi": hi}

    ax.set_xlabel(r"$\beta$")
    ax.set_ylabel("swap probability")
    ax.set_title("2x2 swap probability for the tridiagonal ensemble")
    ax.set_ylim(0.0, 1.0)
    ax.grid(alpha=0.3)
    ax.legend(loc="lower right")
    fig.tight_layout()
    fig.savefig(args.output)
    plt.close(fig)

    write_sidecar(args.output, payload)


if __name__ == "__main__":
    main()
