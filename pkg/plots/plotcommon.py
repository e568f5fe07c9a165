"""Shared CSV intake and sidecar helpers for the render scripts.

These scripts are a pure view layer over the pivotlab CLI's CSV outputs: they
parse, they draw, and they echo the plotted series into a sidecar JSON file.
No numbers are recomputed here beyond the fraction annotations the figures
display.
"""

from __future__ import annotations

import csv
import json
import sys
from pathlib import Path


def fail(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)
    sys.exit(1)


def read_rows(path: str, expected_columns: list[str]) -> list[dict[str, str]]:
    """Read a CSV whose header must match ``expected_columns`` exactly.

    A mismatch reports the column diff and exits nonzero; so does an empty
    file or a file with no data rows.
    """
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                fail(f"{path}: empty file")
            rows = [dict(zip(header, line)) for line in reader if line]
    except OSError as exc:
        fail(f"cannot read {path}: {exc}")
    if header != expected_columns:
        missing = [c for c in expected_columns if c not in header]
        unexpected = [c for c in header if c not in expected_columns]
        fail(
            f"{path}: column mismatch; "
            f"missing {missing or 'none'}, unexpected {unexpected or 'none'}, "
            f"expected exactly {expected_columns}"
        )
    if not rows:
        fail(f"{path}: no data rows")
    return rows


def parse_float(row: dict[str, str], column: str, path: str) -> float:
    cell = row[column]
    try:
        return float(cell)
    except ValueError:
        fail(f"{path}: column {column!r} has non-numeric cell {cell!r}")


def sidecar_path(output: str) -> Path:
    return Path(output).with_suffix(".json")


def write_sidecar(output: str, payload: dict) -> None:
    sidecar_path(output).write_text(json.dumps(payload, indent=2) + "\n",
                                    encoding="utf-8")
