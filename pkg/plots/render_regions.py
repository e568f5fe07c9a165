#!/usr/bin/env python3
"""Render the two pivot-comparison regions on the unit sphere.

Usage: render_regions.py IN.csv OUT.png

IN.csv comes from ``pivotlab regions`` (columns
x,y,z,in_l1_region,in_modulus_region).  Two side-by-side 3-D scatter panels
are drawn, colored by region membership, with each panel title annotated by
the in-region fraction over ALL input rows.  At most MAX_POINTS points per
panel are drawn (every k-th row, deterministic); the sidecar OUT.json records
the drawn points and both fractions.
"""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from plotcommon import fail, parse_float, read_rows, write_sidecar

REGION_COLUMNS = ["x", "y", "z", "in_l1_region", "in_modulus_region"]

MAX_POINTS = 20_000


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("input")
    parser.add_argument("output")
    args = parser.parse_args()

    rows = read_rows(args.input, REGION_COLUMNS)
    for r in rows:
        if r["in_l1_region"] not in ("0", "1") or r["in_modulus_region"] not in ("0", "1"):
            fail(f"{args.input}: region flags must be 0 or 1")

    n = len(rows)
    frac_l1 = sum(r["in_l1_region"] == "1" for r in rows) / n
    frac_mod = sum(r["in_modulus_region"] == "1" for r in rows) / n

    stride = max(1, -(-n // MAX_POINTS))  # ceil division keeps <= MAX_POINTS
    drawn = rows[::stride]
    xs = [parse_float(r, "x", args.input) for r in drawn]
    ys = [parse_float(r, "y", args.input) for r in drawn]
    zs = [parse_float(r, "z", args.input) for r in drawn]

    fig = plt.figure(figsize=(9.6, 4.8), dpi=120)
    panels = [
        ("in_l1_region", frac_l1, "L1 pivot region"),
        ("in_modulus_region", frac_mod, "modulus pivot region"),
    ]
    for idx, (column, frac, name) in enumerate(panels, start=1):
        ax = fig.add_subplot(1, 2, idx, projection="3d")
        inside = [r[column] == "1" for r in drawn]
        colors = ["tab:red" if flag else "tab:gray" for flag in inside]
        ax.scatter(xs, ys, zs, c=colors, s=2, depthshade=False)
        ax.set_title(f"{name} (fraction {frac:.3f})")
        ax.set_xlabel("x")
        ax.set_ylabel("y")
        ax.set_zlabel("z")
        ax.set_box_aspect((1, 1, 1))
    fig.tight_layout()
    fig.savefig(args.output)
    plt.close(fig)

    write_sidecar(args.output, {
        "kind": "sphere_regions",
        "rows_total": n,
        "rows_drawn": len(drawn),
        "fraction_l1": frac_l1,
        "fraction_modulus": frac_mod,
        "points": {
            "x": xs,
            "y": ys,
            "z": zs,
            "in_l1_region": [int(r["in_l1_region"]) for r in drawn],
            "in_modulus_region": [int(r["in_modulus_region"]) for r in drawn],
        },
    })


if __name__ == "__main__":
    main()
