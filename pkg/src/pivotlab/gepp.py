"""Gaussian elimination with partial pivoting over any scalar kind.

The pivot-comparison magnitude is an explicit :class:`PivotRule` rather than a
hard-wired modulus, because the two candidates disagree for complex (and
quaternion) entries: LAPACK's GETRF-family routines compare candidates by the
square-root-free L1 magnitude ``|re| + |im|``, not the Euclidean modulus, and
the choice changes which rows swap.

Conventions, fixed to match the unblocked LAPACK logic:

* At step ``k`` the pivot row is the *first* index in ``k..n-1`` attaining the
  maximal rule magnitude in column ``k`` (IxAMAX tie convention); a swap is
  recorded only when that index differs from ``k``.
* If the whole remaining column is zero the step records no swap, sets the
  ``singular`` flag, and elimination continues with the next column (GETRF
  records singularity, it does not abort).
* The elimination multiplier for row ``i`` is ``m = A_ik * inv(A_kk)`` with
  the inverse on the right, and ``m * (pivot row)`` is subtracted.  For real
  and complex entries the order is immaterial; for quaternions it is the
  convention under which ``P A = L U`` holds.

Row indices (and the permutation) are 0-based: row ``i`` of ``P A`` is row
``perm[i]`` of ``A``.

:func:`factorize` is the entrywise reference implementation on
:class:`~pivotlab.ensembles.Matrix` values; :func:`batch_permutations` runs
the same algorithm vectorized over a stack of matrices in component form and
returns only permutations and swap counts, which is what the Monte Carlo
census needs.  The two paths perform identical IEEE operations step for step
(tested per-trial against each other).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .ensembles import Matrix
from .scalars import (
    Scalar,
    ScalarKind,
    hamilton_product,
    invert,
    invert_components,
    l1_components,
    l1_magnitude,
    modulus,
    modulus_components,
    multiply,
)

__all__ = [
    "PivotRule",
    "Factorization",
    "PivotStep",
    "BatchFactorization",
    "factorize",
    "batch_permutations",
    "swap_count",
    "cycle_count",
    "reconstruction_residual",
    "max_entry_modulus",
]


class PivotRule(enum.Enum):
    """Magnitude used to compare pivot candidates.

    On real scalars the two rules coincide (both are ``|x|``), so real
    factorizations are rule-independent.
    """

    L1 = "l1"
    MODULUS = "modulus"

    def magnitude(self, s: Scalar) -> float:
        return l1_magnitude(s) if self is PivotRule.L1 else modulus(s)

    def magnitudes(self, comps: np.ndarray) -> np.ndarray:
        """Vectorized magnitude of a ``(..., 4)`` component array."""
        if self is PivotRule.L1:
            return l1_components(comps)
        return modulus_components(comps)


@dataclass(frozen=True)
class PivotStep:
    """Instrumentation record for one elimination step (see ``trace``)."""

    step: int
    pivot_magnitude: float
    candidate_magnitudes: tuple[float, ...]


@dataclass(frozen=True)
class Factorization:
    """Result of ``P A = L U``: permutation, factors, swap count, singularity.

    ``perm`` is 0-based; ``swaps`` counts the elimination steps whose selected
    pivot row differed from the current row (for 2x2 inputs this is the 0/1
    row-swap indicator).

    ``steps`` holds per-step pivot instrumentation when the factorization was
    run with a trace, else an empty tuple.
    """

    perm: tuple[int, ...]
    L: Matrix
    U: Matrix
    swaps: int
    singular: bool
    steps: tuple[PivotStep, ...] = field(default=(), repr=False)


def factorize(A: Matrix, rule: PivotRule, *, trace: bool = False) -> Factorization:
    """Eliminate ``A`` with partial pivoting under ``rule``; ``A`` is not mutated."""
    n = A.n
    kind = A.kind
    zero = Scalar.zero(kind)
    work = [list(row) for row in A.entries]
    lower = [[zero] * n for _ in range(n)]
    perm = list(range(n))
    swaps = 0
    singular = False
    steps: list[PivotStep] = []

    for k in range(n):
        mags = [rule.magnitude(work[i][k]) for i in range(k, n)]
        best = max(mags)
        p = k + mags.index(best)  # first maximal index
        if trace:
            steps.append(PivotStep(k, best, tuple(mags)))
        if best == 0.0:
            singular = True
            continue
        if p != k:
            work[k], work[p] = work[p], work[k]
            lower[k], lower[p] = lower[p], lower[k]  # carry computed multipliers
            perm[k], perm[p] = perm[p], perm[k]
            swaps += 1
        inv_pivot = invert(work[k][k])
        pivot_row = work[k]
        for i in range(k + 1, n):
            if work[i][k].is_zero():
                work[i][k] = zero
                continue
            m = multiply(work[i][k], inv_pivot)
            lower[i][k] = m
            work[i][k] = zero
            for j in range(k + 1, n):
                work[i][j] = work[i][j] - multiply(m, pivot_row[j])

    one = Scalar.one(kind)
    for i in range(n):
        lower[i][i] = one
    L = Matrix(n, tuple(tuple(row) for row in lower))
    U = Matrix(n, tuple(tuple(row) for row in work))
    return Factorization(tuple(perm), L, U, swaps, singular, tuple(steps))


@dataclass(frozen=True)
class BatchFactorization:
    """Permutations and swap counts for a stack of factorizations.

    ``perms`` has shape ``(trials, n)`` with the same 0-based convention as
    :class:`Factorization`; ``swaps`` and ``singular`` have shape ``(trials,)``.
    """

    perms: np.ndarray
    swaps: np.ndarray
    singular: np.ndarray


def batch_permutations(comps: np.ndarray, rule: PivotRule) -> BatchFactorization:
    """Run partial-pivoted elimination on a ``(trials, n, n, 4)`` component stack.

    Only the pivoting byproducts are kept.  The input array is not modified.
    """
    if comps.ndim != 4 or comps.shape[1] != comps.shape[2] or comps.shape[3] != 4:
        raise ValueError(f"expected shape (trials, n, n, 4), got {comps.shape}")
    work = np.array(comps, dtype=np.float64, copy=True)
    trials, n = work.shape[0], work.shape[1]
    perms = np.tile(np.arange(n, dtype=np.int64), (trials, 1))
    swaps = np.zeros(trials, dtype=np.int64)
    singular = np.zeros(trials, dtype=bool)
    rows = np.arange(trials)

    for k in range(n):
        mags = rule.magnitudes(work[:, k:, k, :])  # (trials, n-k)
        p = mags.argmax(axis=1) + k  # first maximal index
        singular |= mags.max(axis=1) == 0.0  # zero column: argmax stays at k
        do_swap = p != k
        swaps += do_swap

        row_k = work[rows, k].copy()
        work[rows, k] = work[rows, p]
        work[rows, p] = row_k
        perm_k = perms[rows, k].copy()
        perms[rows, k] = perms[rows, p]
        perms[rows, p] = perm_k

        if k == n - 1:
            break
        inv_pivot = invert_components(work[:, k, k, :])  # zero pivot -> zero
        m = hamilton_product(work[:, k + 1:, k, :], inv_pivot[:, None, :])
        pivot_row = work[:, k, k + 1:, :]
        work[:, k + 1:, k + 1:, :] -= hamilton_product(
            m[:, :, None, :], pivot_row[:, None, :, :]
        )
        work[:, k + 1:, k, :] = 0.0

    return BatchFactorization(perms, swaps, singular)


def swap_count(f: Factorization) -> int:
    """Number of executed row interchanges (the 0/1 Bernoulli variable at n=2)."""
    return f.swaps


def cycle_count(perm) -> int:
    """Number of disjoint cycles of a permutation (fixed points are 1-cycles)."""
    perm = tuple(int(i) for i in perm)
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {perm}")
    seen = [False] * n
    cycles = 0
    for start in range(n):
        if seen[start]:
            continue
        cycles += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
    return cycles


def max_entry_modulus(M: Matrix) -> float:
    return float(modulus_components(M.to_components()).max())


def reconstruction_residual(A: Matrix, f: Factorization) -> float:
    """Max entrywise modulus of ``P A - L U`` (component matmul, order-exact)."""
    a = A.to_components()
    pa = a[np.asarray(f.perm)]
    l = f.L.to_components()
    u = f.U.to_components()
    # lu[i, j] = sum_k L[i, k] * U[k, j] with the Hamilton product
    lu = hamilton_product(l[:, :, None, :], u[None, :, :, :]).sum(axis=1)
    return float(modulus_components(pa - lu).max())
