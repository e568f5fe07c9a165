"""End-to-end tests for the render scripts.

Each test drives a script the way a user would: generate a CSV with the
pivotlab CLI, run the script as a subprocess, inspect the files it wrote.
"""

import csv
import json
import subprocess
import sys
from pathlib import Path

import pytest

PLOTS_DIR = Path(__file__).resolve().parents[1]

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def run_cli(*args: str, cwd: Path) -> None:
    cmd = [sys.executable, "-m", "pivotlab.cli", *args]
    proc = subprocess.run(cmd, cwd=cwd, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr


def run_render(script: str, *args: str) -> subprocess.CompletedProcess:
    cmd = [sys.executable, str(PLOTS_DIR / script), *args]
    return subprocess.run(cmd, capture_output=True, text=True)


def read_csv(path: Path) -> tuple[list[str], list[dict[str, str]]]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        return list(reader.fieldnames), list(reader)


@pytest.fixture(scope="module")
def data_dir(tmp_path_factory) -> Path:
    root = tmp_path_factory.mktemp("render_inputs")
    run_cli("sweep", "--beta-range", "0.5:8:0.25",
            "--output", str(root / "sweep.csv"), cwd=root)
    run_cli("table1", "--trials", "5000", "--seed", "3",
            "--output", str(root / "table1.csv"), cwd=root)
    run_cli("regions", "--trials", "4000", "--seed", "5",
            "--output", str(root / "regions.csv"), cwd=root)
    # rows from a plain 2x2 estimate carry no beta, which the curve overlay
    # must reject
    run_cli("estimate", "--ensemble", "gue", "--trials", "2000", "--seed", "4",
            "--output", str(root / "est_gue.csv"), cwd=root)
    return root


def test_beta_curve_writes_png_and_sidecar(data_dir, tmp_path):
    out = tmp_path / "curve.png"
    proc = run_render("render_beta_curve.py", str(data_dir / "sweep.csv"), str(out))
    assert proc.returncode == 0, proc.stderr
    assert out.read_bytes().startswith(PNG_MAGIC)

    _, rows = read_csv(data_dir / "sweep.csv")
    sidecar = json.loads((tmp_path / "curve.json").read_text())
    assert sidecar["kind"] == "beta_curve"
    assert sidecar["exact"]["beta"] == [float(r["beta"]) for r in rows]
    assert sidecar["exact"]["p_exact"] == [float(r["p_exact"]) for r in rows]
    assert "estimates" not in sidecar


def test_beta_curve_estimate_overlay(data_dir, tmp_path):
    out = tmp_path / "overlay.png"
    proc = run_render("render_beta_curve.py", str(data_dir / "sweep.csv"),
                      str(out), "--estimates", str(data_dir / "table1.csv"))
    assert proc.returncode == 0, proc.stderr
    assert out.read_bytes().startswith(PNG_MAGIC)

    _, rows = read_csv(data_dir / "table1.csv")
    est = json.loads((tmp_path / "overlay.json").read_text())["estimates"]
    assert est["beta"] == [float(r["beta"]) for r in rows]
    assert est["p_hat"] == [float(r["p_hat"]) for r in rows]
    assert est["ci_lo"] == [float(r["ci_lo"]) for r in rows]
    assert est["ci_hi"] == [float(r["ci_hi"]) for r in rows]


def test_beta_curve_rejects_estimates_without_beta(data_dir, tmp_path):
    proc = run_render("render_beta_curve.py", str(data_dir / "sweep.csv"),
                      str(tmp_path / "x.png"),
                      "--estimates", str(data_dir / "est_gue.csv"))
    assert proc.returncode != 0
    assert "beta" in proc.stderr


def test_rendering_is_deterministic(data_dir, tmp_path):
    first = tmp_path / "a.png"
    second = tmp_path / "b.png"
    for out in (first, second):
        proc = run_render("render_beta_curve.py",
                          str(data_dir / "sweep.csv"), str(out))
        assert proc.returncode == 0, proc.stderr
    assert first.read_bytes() == second.read_bytes()
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_regions_fractions_and_points(data_dir, tmp_path):
    out = tmp_path / "regions.png"
    proc = run_render("render_regions.py", str(data_dir / "regions.csv"), str(out))
    assert proc.returncode == 0, proc.stderr
    assert out.read_bytes().startswith(PNG_MAGIC)

    _, rows = read_csv(data_dir / "regions.csv")
    sidecar = json.loads((tmp_path / "regions.json").read_text())
    assert sidecar["kind"] == "sphere_regions"
    assert sidecar["rows_total"] == len(rows) == 4000
    assert sidecar["rows_drawn"] == len(rows)  # below the subsample cap
    assert sidecar["fraction_l1"] == sum(r["in_l1_region"] == "1" for r in rows) / len(rows)
    assert sidecar["fraction_modulus"] == sum(r["in_modulus_region"] == "1" for r in rows) / len(rows)
    pts = sidecar["points"]
    assert pts["x"] == [float(r["x"]) for r in rows]
    assert pts["y"] == [float(r["y"]) for r in rows]
    assert pts["z"] == [float(r["z"]) for r in rows]
    assert pts["in_l1_region"] == [int(r["in_l1_region"]) for r in rows]
    assert pts["in_modulus_region"] == [int(r["in_modulus_region"]) for r in rows]


def test_regions_rendering_is_deterministic(data_dir, tmp_path):
    first = tmp_path / "r1.png"
    second = tmp_path / "r2.png"
    for out in (first, second):
        proc = run_render("render_regions.py",
                          str(data_dir / "regions.csv"), str(out))
        assert proc.returncode == 0, proc.stderr
    assert first.read_bytes() == second.read_bytes()
    assert (tmp_path / "r1.json").read_bytes() == (tmp_path / "r2.json").read_bytes()


def test_table1_markdown_uses_verbatim_cells(data_dir, tmp_path):
    out = tmp_path / "table.md"
    proc = run_render("render_table1.py", str(data_dir / "table1.csv"), str(out))
    assert proc.returncode == 0, proc.stderr

    _, rows = read_csv(data_dir / "table1.csv")
    lines = out.read_text().splitlines()
    assert lines[0] == "| beta | p_hat | std_err | 95% CI |"
    assert set(lines[1].replace("|", "").split()) == {"---"}
    assert len(lines) == 2 + len(rows) == 12
    for line, r in zip(lines[2:], rows):
        cells = [c.strip() for c in line.strip("|").split("|")]
        assert cells == [r["beta"], r["p_hat"], r["std_err"],
                         f"[{r['ci_lo']}, {r['ci_hi']}]"]

    sidecar = json.loads((tmp_path / "table.json").read_text())
    assert sidecar["kind"] == "table"
    assert [row["p_hat"] for row in sidecar["rows"]] == [float(r["p_hat"]) for r in rows]
    assert [row["beta"] for row in sidecar["rows"]] == [float(r["beta"]) for r in rows]
    assert [row["trials"] for row in sidecar["rows"]] == [5000] * 10


def test_region_fraction_annotations(tmp_path):
    """A large sample annotates the panels with the known fractions.

    2/3 and 1/sqrt(3) round to 0.667 and 0.577 at three decimals; seed 2 at
    2e5 points lands close enough that the rendered annotations show exactly
    those strings.  Also exercises the draw-cap subsampling, which must not
    affect the annotated fractions.
    """
    csv_path = tmp_path / "regions_big.csv"
    run_cli("regions", "--trials", "200000", "--seed", "2",
            "--output", str(csv_path), cwd=tmp_path)
    out = tmp_path / "regions_big.png"
    proc = run_render("render_regions.py", str(csv_path), str(out))
    assert proc.returncode == 0, proc.stderr

    sidecar = json.loads((tmp_path / "regions_big.json").read_text())
    # panel titles display f"{fraction:.3f}" of these same numbers
    assert f"{sidecar['fraction_l1']:.3f}" == "0.667"
    assert f"{sidecar['fraction_modulus']:.3f}" == "0.577"
    assert sidecar["rows_total"] == 200000
    assert sidecar["rows_drawn"] == 20000


def test_schema_mismatch_reports_column_diff(data_dir, tmp_path):
    proc = run_render("render_regions.py", str(data_dir / "sweep.csv"),
                      str(tmp_path / "bad.png"))
    assert proc.returncode != 0
    assert "column mismatch" in proc.stderr
    assert "'in_l1_region'" in proc.stderr  # named as missing
    assert "'p_exact'" in proc.stderr  # named as unexpected
    assert not (tmp_path / "bad.png").exists()


def test_table_rejects_sweep_schema(data_dir, tmp_path):
    proc = run_render("render_table1.py", str(data_dir / "sweep.csv"),
                      str(tmp_path / "bad.md"))
    assert proc.returncode != 0
    assert "column mismatch" in proc.stderr
    assert "'p_hat'" in proc.stderr


def test_empty_csv_errors(tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    proc = run_render("render_beta_curve.py", str(empty), str(tmp_path / "x.png"))
    assert proc.returncode != 0
    assert "empty file" in proc.stderr


def test_header_only_csv_errors(tmp_path):
    header_only = tmp_path / "header.csv"
    header_only.write_text("beta,p_exact\n")
    proc = run_render("render_beta_curve.py", str(header_only),
                      str(tmp_path / "x.png"))
    assert proc.returncode != 0
    assert "no data rows" in proc.stderr
