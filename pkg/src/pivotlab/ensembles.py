"""Random matrix samplers: iid Gaussian, GOE/GUE/GSE, and tridiagonal H(beta).

The three Gaussian ensembles are sampled the standard way: fill ``G`` with iid
standard normal entries of the matching scalar kind (real, complex with
component variance 1/2, quaternion with component variance 1/4) and
symmetrize as ``A = (G + G*) / sqrt(2)``, where ``*`` is the conjugate
transpose.  That construction makes the Hermitian symmetry exact in floating
point, and yields the textbook marginals: GOE has ``A11 ~ N(0,2)`` and
``A21 ~ N(0,1)``; GUE has ``A11 ~ N(0,1)`` and standard-complex ``A21``.

The tridiagonal beta ensemble is real symmetric with ``N(0,1)`` diagonal and
chi-distributed off-diagonals: the entry at ``(k-1, k)`` (0-based, counting
k = 1..n-1) is ``chi_{beta*(n-k)} / sqrt(2)``, so the degrees of freedom
descend from ``beta*(n-1)`` at the top to ``beta`` at the bottom.  Any real
``beta > 0`` is accepted.

Matrices carry their generating :class:`EnsembleSpec` as provenance and are
stored dense regardless of structure; samplers are pure functions of the
supplied :class:`~pivotlab.rng.RandomStream`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .rng import RandomStream
from .scalars import Scalar, ScalarKind

__all__ = [
    "Family",
    "EnsembleSpec",
    "Matrix",
    "sample",
    "sample_batch",
    "sample_first_columns",
    "matrix_to_json_dict",
    "matrix_from_json_dict",
]

_SQRT2 = math.sqrt(2.0)


class Family(enum.Enum):
    IID_GAUSSIAN = "iid"
    GOE = "goe"
    GUE = "gue"
    GSE = "gse"
    H_BETA = "hbeta"


_FAMILY_KIND = {
    Family.IID_GAUSSIAN: ScalarKind.REAL,
    Family.GOE: ScalarKind.REAL,
    Family.GUE: ScalarKind.COMPLEX,
    Family.GSE: ScalarKind.QUATERNION,
    Family.H_BETA: ScalarKind.REAL,
}


@dataclass(frozen=True)
class EnsembleSpec:
    """Which ensemble to draw from: family, size ``n``, and (H_BETA only) beta."""

    family: Family
    n: int
    beta: float | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"matrix dimension must be >= 1, got n={self.n}")
        if self.family is Family.H_BETA:
            if self.beta is None or not (self.beta > 0) or not math.isfinite(self.beta):
                raise ValueError(f"H_BETA requires beta > 0, got beta={self.beta}")
        elif self.beta is not None:
            raise ValueError(f"beta is only meaningful for H_BETA, got {self.family}")

    @property
    def kind(self) -> ScalarKind:
        return _FAMILY_KIND[self.family]


@dataclass(frozen=True)
class Matrix:
    """Dense square matrix of :class:`Scalar` entries with sampling provenance.

    ``spec`` is None for matrices not drawn from an ensemble (e.g. L and U
    factors, or hand-built test matrices).
    """

    n: int
    entries: tuple[tuple[Scalar, ...], ...]
    spec: EnsembleSpec | None = None

    def __post_init__(self) -> None:
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValueError("entries must form an n x n grid")

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i][j]

    @property
    def kind(self) -> ScalarKind:
        return ScalarKind(max(s.kind for row in self.entries for s in row))

    def to_components(self) -> np.ndarray:
        """``(n, n, 4)`` float64 component view of the entries."""
        out = np.empty((self.n, self.n, 4))
        for i, row in enumerate(self.entries):
            for j, s in enumerate(row):
                out[i, j] = s.components
        return out

    @staticmethod
    def from_components(comps: np.ndarray, kind: ScalarKind,
                        spec: EnsembleSpec | None = None) -> "Matrix":
        n = comps.shape[0]
        rows = tuple(
            tuple(Scalar.from_components(kind, comps[i, j]) for j in range(n))
            for i in range(n)
        )
        return Matrix(n, rows, spec)


def sample(spec: EnsembleSpec, stream: RandomStream) -> Matrix:
    """Draw one matrix from the ensemble as a :class:`Matrix` of scalars."""
    comps = sample_batch(spec, stream, 1)[0]
    return Matrix.from_components(comps, spec.kind, spec)


def sample_batch(spec: EnsembleSpec, stream: RandomStream, count: int) -> np.ndarray:
    """Draw ``count`` matrices at once as a ``(count, n, n, 4)`` component array.

    This is the engine behind :func:`sample` and the vectorized Monte Carlo
    paths; the single-matrix sampler is literally a batch of one, so the two
    can never drift apart.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    n = spec.n
    comps = np.zeros((count, n, n, 4))

    if spec.family is Family.IID_GAUSSIAN:
        comps[..., 0] = stream.normal(1.0, size=(count, n, n))
    elif spec.family is Family.GOE:
        g = stream.normal(1.0, size=(count, n, n))
        comps[..., 0] = (g + g.swapaxes(1, 2)) / _SQRT2
    elif spec.family is Family.GUE:
        g = stream.normal(0.5, size=(count, n, n, 2))
        gt = g.swapaxes(1, 2)
        comps[..., 0] = (g[..., 0] + gt[..., 0]) / _SQRT2
        comps[..., 1] = (g[..., 1] - gt[..., 1]) / _SQRT2
    elif spec.family is Family.GSE:
        g = stream.normal(0.25, size=(count, n, n, 4))
        gt = g.swapaxes(1, 2)
        comps[..., 0] = (g[..., 0] + gt[..., 0]) / _SQRT2
        for c in (1, 2, 3):
            comps[..., c] = (g[..., c] - gt[..., c]) / _SQRT2
    elif spec.family is Family.H_BETA:
        idx = np.arange(n)
        comps[:, idx, idx, 0] = stream.normal(1.0, size=(count, n))
        for k in range(1, n):
            dof = spec.beta * (n - k)
            off = stream.chi(dof, size=count) / _SQRT2
            comps[:, k - 1, k, 0] = off
            comps[:, k, k - 1, 0] = off
    else:  # pragma: no cover
        raise ValueError(f"unknown family {spec.family}")
    return comps


def sample_first_columns(spec: EnsembleSpec, stream: RandomStream,
                         count: int) -> np.ndarray:
    """Draw only the leading column of ``count`` matrices: ``(count, n, 4)``.

    The leading column's entries are mutually independent for every family
    (each involves a disjoint set of the underlying Gaussian draws), so the
    marginals sampled here match :func:`sample_batch` in distribution.  This
    is all a first-elimination-step swap probe needs, and it skips the other
    n*(n-1) entries.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    n = spec.n
    cols = np.zeros((count, n, 4))

    if spec.family is Family.IID_GAUSSIAN:
        cols[..., 0] = stream.normal(1.0, size=(count, n))
    elif spec.family is Family.GOE:
        cols[:, 0, 0] = stream.normal(2.0, size=count)
        if n > 1:
            cols[:, 1:, 0] = stream.normal(1.0, size=(count, n - 1))
    elif spec.family is Family.GUE:
        cols[:, 0, 0] = stream.normal(1.0, size=count)
        if n > 1:
            cols[:, 1:, :2] = stream.normal(0.5, size=(count, n - 1, 2))
    elif spec.family is Family.GSE:
        cols[:, 0, 0] = stream.normal(0.5, size=count)
        if n > 1:
            cols[:, 1:, :] = stream.normal(0.25, size=(count, n - 1, 4))
    elif spec.family is Family.H_BETA:
        cols[:, 0, 0] = stream.normal(1.0, size=count)
        if n > 1:
            cols[:, 1, 0] = stream.chi(spec.beta * (n - 1), size=count) / _SQRT2
        # rows 2..n-1 of a tridiagonal first column are exactly zero
    else:  # pragma: no cover
        raise ValueError(f"unknown family {spec.family}")
    return cols


# -- JSON debug format --------------------------------------------------------

_KIND_COMPONENTS = {
    ScalarKind.REAL: ("x",),
    ScalarKind.COMPLEX: ("x", "y"),
    ScalarKind.QUATERNION: ("x", "y", "u", "v"),
}


def matrix_to_json_dict(m: Matrix) -> dict:
    """Serializable debug form: dimension, provenance, flattened components."""
    comps = m.to_components()
    kind = m.spec.kind if m.spec is not None else m.kind
    names = _KIND_COMPONENTS[kind]
    out: dict = {
        "n": m.n,
        "family": m.spec.family.value if m.spec is not None else None,
        "kind": kind.name.lower(),
        "components": {
            name: comps[:, :, c].ravel().tolist() for c, name in enumerate(names)
        },
    }
    if m.spec is not None and m.spec.beta is not None:
        out["beta"] = m.spec.beta
    return out


def matrix_from_json_dict(d: dict) -> Matrix:
    n = int(d["n"])
    kind = ScalarKind[d["kind"].upper()]
    comps = np.zeros((n, n, 4))
    for c, name in enumerate(_KIND_COMPONENTS[kind]):
        comps[:, :, c] = np.asarray(d["components"][name]).reshape(n, n)
    spec = None
    if d.get("family"):
        spec = EnsembleSpec(Family(d["family"]), n, d.get("beta"))
    return Matrix.from_components(comps, kind, spec)
