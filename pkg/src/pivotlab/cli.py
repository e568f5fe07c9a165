"""Command-line interface.

Subcommands
-----------
exact      closed-form swap probabilities and quadrature cross-checks
estimate   Monte Carlo swap-probability estimate for one ensemble/rule
table1     split-absolute-normal estimates for beta = 1..10
sweep      exact tridiagonal-ensemble swap probability over a beta grid
regions    labeled uniform samples of the unit sphere (pivot-region membership)
factorize  sample one matrix, eliminate it, report the factorization as JSON
census     empirical distribution of elimination-induced permutations

Numbers are serialized with 10 significant digits in CSV and at full binary64
round-trip precision in JSON; both formats encode the same values.  Every
subcommand is deterministic given its flags: identical invocations produce
byte-identical output.  ``--seed`` falls back to the ``PIVOTLAB_SEED``
environment variable, then to 0.

Exit codes: 0 success, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .ensembles import EnsembleSpec, Family, matrix_to_json_dict, sample
from .exact import (
    SphereRegion,
    gue_l1_pivot_prob,
    in_l1_cone,
    in_modulus_cone,
    pivot_prob_hbeta,
    spherical_area_quadrature,
)
from .gepp import (
    PivotRule,
    cycle_count,
    factorize,
    max_entry_modulus,
    reconstruction_residual,
)
from .montecarlo import (
    CI_METHOD,
    HISTOGRAM_MAX_N,
    EstimateResult,
    estimate_p1,
    estimate_pivot_prob,
    permutation_census,
    table1_sweep,
)
from .rng import RandomStream

__all__ = ["main", "build_parser"]

_SEED_ENV = "PIVOTLAB_SEED"

_ESTIMATE_COLUMNS = "label,beta,rule,trials,p_hat,std_err,ci_lo,ci_hi,seed"


def _fmt(value: float) -> str:
    """Render a float with 10 significant digits (CSV convention)."""
    return "%.10g" % value


def _resolve_seed(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    seed = args.seed
    if seed is None:
        raw = os.environ.get(_SEED_ENV)
        if raw is None:
            return 0
        try:
            seed = int(raw)
        except ValueError:
            parser.error(f"{_SEED_ENV} must be an integer, got {raw!r}")
    if not 0 <= seed < 2**64:
        parser.error(f"seed must be in [0, 2^64), got {seed}")
    return seed


def _positive_int(label: str, value: int, parser: argparse.ArgumentParser) -> int:
    if value < 1:
        parser.error(f"{label} must be >= 1, got {value}")
    return value


def _resolve_spec(args: argparse.Namespace,
                  parser: argparse.ArgumentParser) -> EnsembleSpec:
    family = Family(args.ensemble)
    n = _positive_int("--n", args.n, parser)
    beta = getattr(args, "beta", None)
    if family is Family.H_BETA:
        if beta is None:
            parser.error("--ensemble hbeta requires --beta")
        if not (math.isfinite(beta) and beta > 0):
            parser.error(f"--beta must be a positive real, got {beta}")
    elif beta is not None:
        parser.error(f"--beta only applies to --ensemble hbeta, not {args.ensemble}")
    return EnsembleSpec(family=family, n=n, beta=beta)


def _estimate_rows(results: list[EstimateResult],
                   betas: list[float | None],
                   rules: list[str | None]) -> list[dict]:
    rows = []
    for res, beta, rule in zip(results, betas, rules):
        rows.append({
            "label": res.label,
            "beta": beta,
            "rule": rule,
            "trials": res.trials,
            "p_hat": res.p_hat,
            "std_err": res.std_err,
            "ci_lo": res.ci95[0],
            "ci_hi": res.ci95[1],
            "seed": res.seed,
        })
    return rows


def _estimate_report(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"ci_method": CI_METHOD, "rows": rows}, indent=2) + "\n"
    lines = [_ESTIMATE_COLUMNS]
    for row in rows:
        lines.append(",".join([
            row["label"],
            "" if row["beta"] is None else _fmt(row["beta"]),
            row["rule"] or "",
            str(row["trials"]),
            _fmt(row["p_hat"]),
            _fmt(row["std_err"]),
            _fmt(row["ci_lo"]),
            _fmt(row["ci_hi"]),
            str(row["seed"]),
        ]))
    return "\n".join(lines) + "\n"


def _write_report(text: str, path: str | None) -> int:
    if path in (None, "-"):
        sys.stdout.write(text)
        return 0
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        return 3
    return 0


def cmd_exact(args: argparse.Namespace, parser: argparse.ArgumentParser) -> str:
    rows = []
    if args.beta is not None:
        if not (math.isfinite(args.beta) and args.beta > 0):
            parser.error(f"--beta must be a positive real, got {args.beta}")
        rows.append({
            "quantity": f"pivot_prob_hbeta(beta={_fmt(args.beta)})",
            "value": pivot_prob_hbeta(args.beta),
            "method": "closed_form",
        })
    if args.gue_l1:
        rows.append({
            "quantity": "gue_l1_pivot_prob",
            "value": gue_l1_pivot_prob(),
            "method": "closed_form",
        })
    for name in args.quadrature or ():
        region = SphereRegion(name)
        rows.append({
            "quantity": f"spherical_area_ratio({name})",
            "value": spherical_area_quadrature(region),
            "method": "adaptive_quadrature",
        })
    if not rows:
        parser.error("nothing to compute: pass --beta, --gue-l1, and/or --quadrature")
    if args.format == "json":
        return json.dumps(rows, indent=2) + "\n"
    lines = ["quantity,value,method"]
    lines += [f"{r['quantity']},{_fmt(r['value'])},{r['method']}" for r in rows]
    return "\n".join(lines) + "\n"


def cmd_estimate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> str:
    spec = _resolve_spec(args, parser)
    rule = PivotRule(args.rule)
    trials = _positive_int("--trials", args.trials, parser)
    workers = _positive_int("--workers", args.workers, parser)
    stream = RandomStream(_resolve_seed(args, parser))
    result = estimate_pivot_prob(spec, rule, trials, stream, workers)
    rows = _estimate_rows([result], [spec.beta], [rule.value])
    return _estimate_report(rows, args.format)


def cmd_table1(args: argparse.Namespace, parser: argparse.ArgumentParser) -> str:
    trials = _positive_int("--trials", args.trials, parser)
    workers = _positive_int("--workers", args.workers, parser)
    stream = RandomStream(_resolve_seed(args, parser))
    results = table1_sweep(trials, stream, workers)
    betas = [float(b) for b in range(1, 11)]
    return _estimate_report(_estimate_rows(results, betas, [None] * 10), args.format)


def _parse_beta_range(text: str, parser: argparse.ArgumentParser) -> list[float]:
    parts = text.split(":")
    if len(parts) != 3:
        parser.error(f"--beta-range must be LO:HI:STEP, got {text!r}")
    try:
        lo, hi, step = (float(p) for p in parts)
    except ValueError:
        parser.error(f"--beta-range must be numeric LO:HI:STEP, got {text!r}")
    if not (math.isfinite(lo) and math.isfinite(hi) and math.isfinite(step)):
        parser.error("--beta-range bounds must be finite")
    if lo <= 0:
        parser.error(f"--beta-range lower bound must be > 0, got {_fmt(lo)}")
    if hi < lo:
        parser.error("--beta-range needs LO <= HI")
    if step <= 0:
        parser.error(f"--beta-range step must be > 0, got {_fmt(step)}")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [lo + i * step for i in range(count)]


def cmd_sweep(args: argparse.Namespace, parser: argparse.ArgumentParser) -> str:
    if (args.beta is None) == (args.beta_range is None):
        parser.error("pass exactly one of --beta or --beta-range")
    if args.beta is not None:
        if not (math.isfinite(args.beta) and args.beta > 0):
            parser.error(f"--beta must be a positive real, got {args.beta}")
        betas = [args.beta]
    else:
        betas = _parse_beta_range(args.beta_range, parser)
    rows = [{"beta": b, "p_exact": pivot_prob_hbeta(b)} for b in betas]
    if args.format == "json":
        return json.dumps({"rows": rows}, indent=2) + "\n"
    lines = ["beta,p_exact"]
    lines += [f"{_fmt(r['beta'])},{_fmt(r['p_exact'])}" for r in rows]
    return "\n".join(lines) + "\n"


def cmd_regions(args: argparse.Namespace, parser: argparse.ArgumentParser) -> str:
    trials = _positive_int("--trials", args.trials, parser)
    stream = RandomStream(_resolve_seed(args, parser))
    pts = stream.uniform_sphere(trials)
    x, y, z = pts[:, 0], pts[:, 1], pts[:, 2]
    l1_flags = in_l1_cone(x, y, z).astype(int)
    mod_flags = in_modulus_cone(x, y, z).astype(int)
    if args.format == "json":
        rows = [
            {"x": float(xi), "y": float(yi), "z": float(zi),
             "in_l1_region": int(a), "in_modulus_region": int(b)}
            for xi, yi, zi, a, b in zip(x, y, z, l1_flags, mod_flags)
        ]
        return json.dumps({"rows": rows}, indent=2) + "\n"
    lines = ["x,y,z,in_l1_region,in_modulus_region"]
    lines += [
        f"{_fmt(xi)},{_fmt(yi)},{_fmt(zi)},{a},{b}"
        for xi, yi, zi, a, b in zip(x, y, z, l1_flags, mod_flags)
    ]
    return "\n".join(lines) + "\n"


def cmd_factorize(args: argparse.Namespace, parser: argparse.ArgumentParser) -> str:
    spec = _resolve_spec(args, parser)
    rule = PivotRule(args.rule)
    seed = _resolve_seed(args, parser)
    matrix = sample(spec, RandomStream(seed))
    fact = factorize(matrix, rule)
    payload = {
        "ensemble": spec.family.value,
        "n": spec.n,
        "beta": spec.beta,
        "rule": rule.value,
        "seed": seed,
        "matrix": matrix_to_json_dict(matrix),
        "perm": list(fact.perm),
        "swaps": fact.swaps,
        "cycle_count": cycle_count(fact.perm),
        "singular": fact.singular,
        "max_entry_modulus": max_entry_modulus(matrix),
        "residual": reconstruction_residual(matrix, fact),
    }
    return json.dumps(payload, indent=2) + "\n"


def _swaps_for_perm(perm: tuple[int, ...]) -> int:
    """Number of interchanges pivoted elimination used to realize ``perm``.

    Elimination swaps position k with the current position of the row that
    ends up at position k; replaying that selection recovers the count.
    """
    arr = list(range(len(perm)))
    swaps = 0
    for k, target in enumerate(perm):
        j = arr.index(target, k)
        if j != k:
            arr[k], arr[j] = arr[j], arr[k]
            swaps += 1
    return swaps


def cmd_census(args: argparse.Namespace, parser: argparse.ArgumentParser) -> str:
    spec = _resolve_spec(args, parser)
    rule = PivotRule(args.rule)
    trials = _positive_int("--trials", args.trials, parser)
    workers = _positive_int("--workers", args.workers, parser)
    if args.format == "csv" and spec.n > HISTOGRAM_MAX_N:
        parser.error(
            f"--format csv needs the full histogram (n <= {HISTOGRAM_MAX_N}); "
            "use --format json for larger n"
        )
    stream = RandomStream(_resolve_seed(args, parser))
    census = permutation_census(spec, rule, trials, stream, workers)
    if args.format == "csv":
        items = sorted(census.histogram.items(), key=lambda kv: (-kv[1], kv[0]))
        lines = ["perm,count,swaps,cycles"]
        for perm, count in items:
            tag = "-".join(str(i) for i in perm)
            lines.append(f"{tag},{count},{_swaps_for_perm(perm)},{cycle_count(perm)}")
        return "\n".join(lines) + "\n"
    histogram = None
    if census.histogram is not None:
        items = sorted(census.histogram.items(), key=lambda kv: (-kv[1], kv[0]))
        histogram = {"-".join(str(i) for i in perm): count for perm, count in items}
    payload = {
        "ensemble": spec.family.value,
        "n": spec.n,
        "beta": spec.beta,
        "rule": rule.value,
        "trials": trials,
        "seed": census.seed,
        "swap_frequency": census.swap_frequency(),
        "histogram": histogram,
        "swap_counts": {str(k): v for k, v in census.swap_counts.items()},
        "cycle_counts": {str(k): v for k, v in census.cycle_counts.items()},
    }
    return json.dumps(payload, indent=2) + "\n"


def _add_output_flags(sub: argparse.ArgumentParser, formats: bool = True) -> None:
    if formats:
        sub.add_argument("--format", choices=("csv", "json"), default="csv",
                         help="output encoding (default csv)")
    sub.add_argument("--output", default="-", metavar="PATH",
                     help="output file, '-' for stdout (default)")


def _add_seed_flag(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--seed", type=int, default=None,
                     help=f"RNG seed (default: ${_SEED_ENV} or 0)")


def _add_trials_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--trials", type=int, default=10**6,
                     help="Monte Carlo sample count (default 1000000)")
    sub.add_argument("--workers", type=int, default=1,
                     help="parallel chunk workers; never changes results")


def _add_ensemble_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--ensemble", required=True,
                     choices=[f.value for f in Family])
    sub.add_argument("--rule", choices=[r.value for r in PivotRule], default="l1",
                     help="pivot comparison rule (default l1)")
    sub.add_argument("--n", type=int, default=2, help="matrix dimension (default 2)")
    sub.add_argument("--beta", type=float, default=None,
                     help="Dyson parameter, required for --ensemble hbeta")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pivotlab",
        description="Pivot-movement probabilities for Gaussian elimination "
                    "with partial pivoting on random matrices.",
    )
    subs = parser.add_subparsers(dest="subcommand", required=True)

    p = subs.add_parser("exact", help="closed-form values and quadrature checks")
    p.add_argument("--beta", type=float, default=None,
                   help="tridiagonal-ensemble swap probability at this beta")
    p.add_argument("--gue-l1", action="store_true",
                   help="complex-Gaussian L1-rule swap probability (= 2/3)")
    p.add_argument("--quadrature", action="append",
                   choices=[r.value for r in SphereRegion], default=None,
                   help="spherical area ratio of a pivot region (repeatable)")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_exact)

    p = subs.add_parser("estimate", help="Monte Carlo swap-probability estimate")
    _add_ensemble_flags(p)
    _add_trials_flags(p)
    _add_seed_flag(p)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_estimate)

    p = subs.add_parser("table1", help="split-absolute-normal sweep, beta = 1..10")
    _add_trials_flags(p)
    _add_seed_flag(p)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_table1)

    p = subs.add_parser("sweep", help="exact swap probability over a beta grid")
    p.add_argument("--beta", type=float, default=None, help="single grid point")
    p.add_argument("--beta-range", default=None, metavar="LO:HI:STEP",
                   help="inclusive grid, e.g. 0.5:8:0.25")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_sweep)

    p = subs.add_parser("regions", help="labeled uniform unit-sphere samples")
    p.add_argument("--trials", type=int, default=10**6,
                   help="number of sampled points (default 1000000)")
    _add_seed_flag(p)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_regions)

    p = subs.add_parser("factorize", help="eliminate one sampled matrix (JSON)")
    _add_ensemble_flags(p)
    _add_seed_flag(p)
    _add_output_flags(p, formats=False)
    p.set_defaults(handler=cmd_factorize)

    p = subs.add_parser("census", help="permutation histogram over many trials")
    _add_ensemble_flags(p)
    _add_trials_flags(p)
    _add_seed_flag(p)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_census)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    text = args.handler(args, parser)
    return _write_report(text, args.output)


if __name__ == "__main__":
    sys.exit(main())
