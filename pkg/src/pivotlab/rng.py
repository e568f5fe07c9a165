"""Deterministic, splittable random streams for all samplers.

A :class:`RandomStream` wraps a counter-based Philox generator keyed by
``(seed, stream_id)`` through :class:`numpy.random.SeedSequence`, which gives
documented cross-platform reproducibility and cheap derivation of
statistically independent child streams for parallel Monte Carlo work.

Distribution conventions (these pin down every variance in the package):

* ``normal`` draws are parameterized by *variance*, not standard deviation.
* A standard complex normal has iid real and imaginary parts ``N(0, 1/2)``,
  so its squared modulus has mean 1 (and is Exp(1) distributed).
* A standard quaternion normal has four iid components ``N(0, 1/4)``, again
  normalized so the squared modulus has mean 1.
* ``chi`` draws with ``dof = k`` are ``sqrt(2 * Gamma(k/2, scale=1))``; the
  gamma sampler accepts any real shape, so non-integer degrees of freedom
  work (required for the continuous-beta tridiagonal ensemble).

A stream is single-owner: share work across workers by deriving children with
:meth:`RandomStream.child`, never by handing one stream to two consumers.
"""

from __future__ import annotations

import math

import numpy as np

from .scalars import Scalar

__all__ = ["RandomStream"]


class RandomStream:
    """Seedable random source with deterministic substreams.

    Two streams constructed with the same ``(seed, stream_id)`` (and the same
    chain of ``child`` derivations) produce bitwise-identical draws.
    """

    __slots__ = ("seed", "stream_id", "_key", "_gen")

    def __init__(self, seed: int = 0, stream_id: int = 0, *,
                 _key: tuple[int, ...] | None = None):
        seed = int(seed)
        stream_id = int(stream_id)
        if seed < 0:
            raise ValueError(f"seed must be nonnegative, got {seed}")
        if stream_id < 0:
            raise ValueError(f"stream_id must be nonnegative, got {stream_id}")
        self.seed = seed
        self.stream_id = stream_id
        self._key = _key if _key is not None else (stream_id,)
        ss = np.random.SeedSequence(entropy=seed, spawn_key=self._key)
        self._gen = np.random.Generator(np.random.Philox(ss))

    def child(self, child_id: int) -> "RandomStream":
        """Derive the ``child_id``-th independent substream (deterministic)."""
        child_id = int(child_id)
        if child_id < 0:
            raise ValueError(f"child_id must be nonnegative, got {child_id}")
        return RandomStream(self.seed, self.stream_id,
                            _key=self._key + (child_id,))

    def __repr__(self) -> str:
        return f"RandomStream(seed={self.seed}, key={self._key})"

    # -- scalar draws --------------------------------------------------------

    def next_normal(self, variance: float) -> float:
        """One draw from ``N(0, variance)``."""
        return float(self.normal(variance))

    def next_chi(self, dof: float) -> float:
        """One draw from the chi distribution with ``dof`` degrees of freedom."""
        return float(self.chi(dof))

    def next_complex_normal(self) -> Scalar:
        """One standard complex normal (components ``N(0, 1/2)``)."""
        parts = self._gen.normal(0.0, _SQRT_HALF, size=2)
        return Scalar.complex(parts[0], parts[1])

    def next_quaternion_normal(self) -> Scalar:
        """One standard quaternion normal (components ``N(0, 1/4)``)."""
        parts = self._gen.normal(0.0, 0.5, size=4)
        return Scalar.quaternion(parts[0], parts[1], parts[2], parts[3])

    # -- array draws (same distributions, vectorized) -------------------------

    def normal(self, variance: float, size=None) -> np.ndarray:
        if not (variance > 0.0) or not math.isfinite(variance):
            raise ValueError(f"variance must be positive and finite, got {variance}")
        return self._gen.normal(0.0, math.sqrt(variance), size=size)

    def chi(self, dof: float, size=None) -> np.ndarray:
        if not (dof > 0.0) or not math.isfinite(dof):
            raise ValueError(f"dof must be positive and finite, got {dof}")
        return np.sqrt(2.0 * self._gen.standard_gamma(dof / 2.0, size=size))

    def complex_normal(self, size: int) -> np.ndarray:
        """``(size, 2)`` component array of standard complex normals."""
        return self._gen.normal(0.0, _SQRT_HALF, size=(size, 2))

    def quaternion_normal(self, size: int) -> np.ndarray:
        """``(size, 4)`` component array of standard quaternion normals."""
        return self._gen.normal(0.0, 0.5, size=(size, 4))

    def uniform_sphere(self, size: int) -> np.ndarray:
        """``(size, 3)`` points uniform on the unit sphere (normalized normals)."""
        pts = self._gen.normal(0.0, 1.0, size=(size, 3))
        norms = np.sqrt(np.einsum("ij,ij->i", pts, pts))
        # zero norm has probability zero; redraw defensively if it ever occurs
        while np.any(norms == 0.0):  # pragma: no cover
            bad = norms == 0.0
            pts[bad] = self._gen.normal(0.0, 1.0, size=(int(bad.sum()), 3))
            norms = np.sqrt(np.einsum("ij,ij->i", pts, pts))
        return pts / norms[:, None]


_SQRT_HALF = math.sqrt(0.5)
