"""Seeded Monte Carlo estimators for swap probabilities and permutation stats.

Every estimator splits its trials into fixed-size chunks (``CHUNK_SIZE``,
2^16) and runs chunk ``i`` on the child stream ``stream.child(i)``.  Chunk
successes are integers and integer addition is associative, so the final
count -- and hence ``p_hat`` -- is bitwise identical no matter how many
workers execute the chunks or in what order they finish.

Confidence intervals use the plain normal approximation
``p_hat +/- 1.96 * std_err`` clipped to ``[0, 1]`` (recorded as
:data:`CI_METHOD`); every supported workflow runs at least 10^4 trials, where
this is entirely adequate.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .ensembles import EnsembleSpec, Family, sample_batch, sample_first_columns
from .gepp import PivotRule, batch_permutations, cycle_count
from .rng import RandomStream

__all__ = [
    "CHUNK_SIZE",
    "CI_METHOD",
    "EstimateResult",
    "CensusResult",
    "estimate_pivot_prob",
    "estimate_p1",
    "table1_sweep",
    "permutation_census",
    "HISTOGRAM_MAX_N",
]

CHUNK_SIZE = 1 << 16

CI_METHOD = "normal approximation, p_hat +/- 1.96 std_err, clipped to [0, 1]"

# full n!-bucket permutation histograms are only kept up to this dimension
HISTOGRAM_MAX_N = 7

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class EstimateResult:
    """A Bernoulli Monte Carlo estimate with its uncertainty.

    ``std_err`` is exactly ``sqrt(p_hat * (1 - p_hat) / trials)`` and ``ci95``
    the clipped normal-approximation interval.
    """

    label: str
    p_hat: float
    trials: int
    std_err: float
    ci95: tuple[float, float]
    seed: int


def _make_estimate(label: str, successes: int, trials: int, seed: int) -> EstimateResult:
    p_hat = successes / trials
    std_err = math.sqrt(p_hat * (1.0 - p_hat) / trials)
    lo = max(0.0, p_hat - 1.96 * std_err)
    hi = min(1.0, p_hat + 1.96 * std_err)
    return EstimateResult(label, p_hat, trials, std_err, (lo, hi), seed)


def _chunk_sizes(trials: int) -> list[int]:
    n_chunks = (trials + CHUNK_SIZE - 1) // CHUNK_SIZE
    sizes = [CHUNK_SIZE] * n_chunks
    sizes[-1] = trials - CHUNK_SIZE * (n_chunks - 1)
    return sizes


def _map_chunks(stream: RandomStream, trials: int, workers: int, chunk_fn):
    """Evaluate ``chunk_fn(child_stream, size)`` over all chunks, in index order."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    sizes = _chunk_sizes(trials)

    def run(i: int):
        return chunk_fn(stream.child(i), sizes[i])

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run, range(len(sizes))))
    return [run(i) for i in range(len(sizes))]


def estimate_pivot_prob(spec: EnsembleSpec, rule: PivotRule, trials: int,
                        stream: RandomStream, workers: int = 1) -> EstimateResult:
    """Estimate the probability that elimination's first step swaps rows.

    For ``spec.n == 2`` this is the full 0-or-1 row-swap probability.  Larger
    ``n`` is permitted and estimates the first-step swap probability only;
    only the leading column is ever sampled, which makes a million trials
    cheap.
    """
    label = f"pivot:{spec.family.value}:{rule.value}"
    if spec.family is Family.H_BETA:
        label += f":beta={spec.beta:g}"
    if spec.n != 2:
        label += f":n={spec.n}"

    def chunk(s: RandomStream, size: int) -> int:
        if spec.n == 1:
            return 0
        cols = sample_first_columns(spec, s, size)
        mags = rule.magnitudes(cols)
        # first-max-index convention: a swap happens iff some lower row
        # strictly beats the current pivot row
        return int(np.count_nonzero(mags[:, 1:].max(axis=1) > mags[:, 0]))

    successes = sum(_map_chunks(stream, trials, workers, chunk))
    return _make_estimate(label, successes, trials, stream.seed)


def estimate_p1(beta: int, trials: int, stream: RandomStream,
                workers: int = 1) -> EstimateResult:
    """Estimate ``P(|Z_1| + ... + |Z_beta| > sqrt(2) |Z_{beta+1}|)`` directly.

    Pure iid-normal simulation, no matrices.  By the triangle inequality this
    probability dominates the exact tridiagonal-ensemble swap probability at
    the same ``beta``, and at ``beta = 1, 2`` it coincides with the GOE
    (modulus) and GUE (L1) swap probabilities.
    """
    if not isinstance(beta, (int, np.integer)) or beta < 1:
        raise ValueError(f"beta must be a positive integer, got {beta!r}")
    beta = int(beta)

    def chunk(s: RandomStream, size: int) -> int:
        z = s.normal(1.0, size=(size, beta + 1))
        lhs = np.abs(z[:, :beta]).sum(axis=1)
        rhs = _SQRT2 * np.abs(z[:, beta])
        return int(np.count_nonzero(lhs > rhs))

    successes = sum(_map_chunks(stream, trials, workers, chunk))
    return _make_estimate(f"p1:beta={beta}", successes, trials, stream.seed)


def table1_sweep(trials: int, stream: RandomStream,
                 workers: int = 1) -> list[EstimateResult]:
    """Ten split-absolute-normal estimates for ``beta = 1..10``.

    Row ``beta`` runs on the independent substream ``stream.child(beta)``.
    """
    return [
        estimate_p1(beta, trials, stream.child(beta), workers)
        for beta in range(1, 11)
    ]


@dataclass(frozen=True)
class CensusResult:
    """Empirical distribution of elimination-induced permutations.

    ``histogram`` maps permutation tuples (0-based) to counts, and is None
    when ``n > HISTOGRAM_MAX_N``.  ``swap_counts`` and ``cycle_counts`` map a
    statistic value to the number of trials attaining it; both always cover
    all trials.
    """

    spec: EnsembleSpec
    rule: PivotRule
    trials: int
    seed: int
    histogram: dict[tuple[int, ...], int] | None
    swap_counts: dict[int, int]
    cycle_counts: dict[int, int]

    def swap_frequency(self) -> float:
        """Fraction of trials with at least one row interchange."""
        still = self.swap_counts.get(0, 0)
        return (self.trials - still) / self.trials


def permutation_census(spec: EnsembleSpec, rule: PivotRule, trials: int,
                       stream: RandomStream, workers: int = 1) -> CensusResult:
    """Tally the permutations that pivoted elimination induces on ``spec``.

    Runs the vectorized elimination on batches of sampled matrices; the
    per-matrix reference implementation in :mod:`pivotlab.gepp` is the slow
    twin of this path and the two are tested to agree trial for trial.
    """
    n = spec.n
    keep_histogram = n <= HISTOGRAM_MAX_N

    def chunk(s: RandomStream, size: int):
        comps = sample_batch(spec, s, size)
        bf = batch_permutations(comps, rule)
        swap_hist = np.bincount(bf.swaps, minlength=n)
        uniq, counts = np.unique(bf.perms, axis=0, return_counts=True)
        cyc = Counter()
        for perm, cnt in zip(uniq, counts):
            cyc[cycle_count(perm)] += int(cnt)
        perm_hist = None
        if keep_histogram:
            perm_hist = Counter(
                {tuple(int(v) for v in perm): int(cnt)
                 for perm, cnt in zip(uniq, counts)}
            )
        return swap_hist, cyc, perm_hist

    swap_total = np.zeros(n, dtype=np.int64)
    cycle_total: Counter = Counter()
    perm_total: Counter | None = Counter() if keep_histogram else None
    for swap_hist, cyc, perm_hist in _map_chunks(stream, trials, workers, chunk):
        swap_total += swap_hist
        cycle_total += cyc
        if perm_total is not None:
            perm_total += perm_hist

    swap_counts = {int(k): int(v) for k, v in enumerate(swap_total) if v}
    return CensusResult(
        spec=spec,
        rule=rule,
        trials=trials,
        seed=stream.seed,
        histogram=dict(perm_total) if perm_total is not None else None,
        swap_counts=swap_counts,
        cycle_counts={int(k): int(v) for k, v in sorted(cycle_total.items())},
    )
