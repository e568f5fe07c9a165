#!/usr/bin/env python3
"""Format a split-absolute-normal estimate sweep as a Markdown table.

Usage: render_table1.py IN.csv OUT.md

IN.csv comes from ``pivotlab table1`` (the standard estimate schema).  Cell
text is copied verbatim from the CSV, so the table shows exactly what the
estimator printed; the sidecar OUT.json records the parsed numbers.
"""

import argparse
from pathlib import Path

from plotcommon import parse_float, read_rows, write_sidecar

ESTIMATE_COLUMNS = ["label", "beta", "rule", "trials", "p_hat",
                    "std_err", "ci_lo", "ci_hi", "seed"]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("input")
    parser.add_argument("output")
    args = parser.parse_args()

    rows = read_rows(args.input, ESTIMATE_COLUMNS)

    lines = [
        "| beta | p_hat | std_err | 95% CI |",
        "| --- | --- | --- | --- |",
    ]
    for r in rows:
        lines.append(
            f"| {r['beta']} | {r['p_hat']} | {r['std_err']} "
            f"| [{r['ci_lo']}, {r['ci_hi']}] |"
        )
    Path(args.output).write_text("\n".join(lines) + "\n", encoding="utf-8")

    write_sidecar(args.output, {
        "kind": "table",
        "rows": [
            {
                "label": r["label"],
                "beta": parse_float(r, "beta", args.input),
                "trials": int(r["trials"]),
                "p_hat": parse_float(r, "p_hat", args.input),
                "std_err": parse_float(r, "std_err", args.input),
                "ci_lo": parse_float(r, "ci_lo", args.input),
                "ci_hi": parse_float(r, "ci_hi", args.input),
            }
            for r in rows
        ],
    })


if __name__ == "__main__":
    main()
