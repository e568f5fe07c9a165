"""Division-algebra scalars (real, complex, quaternion) for pivoted elimination.

A :class:`Scalar` is a tagged value over one of the three normed division
algebras, stored as up to four real coordinates ``(x, y, u, v)`` standing for
``x + i*y + j*u + k*v``.  Unused coordinates are pinned to zero, so a single
Hamilton-product implementation serves every kind.  The quaternion product
uses the right-handed convention ``i*j = k``, ``j*i = -k``.

Two magnitude functions are provided: :func:`modulus` (the Euclidean norm of
the coordinate vector) and :func:`l1_magnitude` (the sum of coordinate
absolute values, the square-root-free comparison LAPACK's CABS1 uses for
complex pivot candidates; extended here componentwise to quaternions).

Everything is plain binary64 arithmetic with value semantics; all functions
are pure and thread-safe.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ScalarKind",
    "Scalar",
    "l1_magnitude",
    "modulus",
    "multiply",
    "invert",
    "conjugate",
    "hamilton_product",
    "conjugate_components",
    "modulus_components",
    "l1_components",
    "invert_components",
]


class ScalarKind(enum.IntEnum):
    """Which division algebra a scalar lives in; ordered by containment."""

    REAL = 1
    COMPLEX = 2
    QUATERNION = 3


@dataclass(frozen=True, slots=True)
class Scalar:
    """Immutable tagged scalar ``x + i*y + j*u + k*v``.

    Coordinates beyond the kind's dimension must be zero (a real scalar has
    ``y = u = v = 0``, a complex one ``u = v = 0``); the constructor enforces
    this.
    """

    kind: ScalarKind
    x: float
    y: float = 0.0
    u: float = 0.0
    v: float = 0.0

    def __post_init__(self) -> None:
        if self.kind == ScalarKind.REAL and (self.y or self.u or self.v):
            raise ValueError("real scalar must have y = u = v = 0")
        if self.kind == ScalarKind.COMPLEX and (self.u or self.v):
            raise ValueError("complex scalar must have u = v = 0")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def real(x: float) -> "Scalar":
        return Scalar(ScalarKind.REAL, float(x))

    @staticmethod
    def complex(x: float, y: float) -> "Scalar":
        return Scalar(ScalarKind.COMPLEX, float(x), float(y))

    @staticmethod
    def quaternion(x: float, y: float, u: float, v: float) -> "Scalar":
        return Scalar(ScalarKind.QUATERNION, float(x), float(y), float(u), float(v))

    @staticmethod
    def zero(kind: ScalarKind = ScalarKind.REAL) -> "Scalar":
        return Scalar(kind, 0.0)

    @staticmethod
    def one(kind: ScalarKind = ScalarKind.REAL) -> "Scalar":
        return Scalar(kind, 1.0)

    @staticmethod
    def from_components(kind: ScalarKind, comps) -> "Scalar":
        x, y, u, v = (float(c) for c in comps)
        return Scalar(kind, x, y, u, v)

    # -- views -------------------------------------------------------------

    @property
    def components(self) -> tuple[float, float, float, float]:
        return (self.x, self.y, self.u, self.v)

    def is_zero(self) -> bool:
        return self.x == 0.0 and self.y == 0.0 and self.u == 0.0 and self.v == 0.0

    # -- operator sugar (delegates to the module-level functions) -----------

    def __add__(self, other: "Scalar") -> "Scalar":
        kind = ScalarKind(max(self.kind, other.kind))
        return Scalar(kind, self.x + other.x, self.y + other.y,
                      self.u + other.u, self.v + other.v)

    def __sub__(self, other: "Scalar") -> "Scalar":
        kind = ScalarKind(max(self.kind, other.kind))
        return Scalar(kind, self.x - other.x, self.y - other.y,
                      self.u - other.u, self.v - other.v)

    def __neg__(self) -> "Scalar":
        return Scalar(self.kind, -self.x, -self.y, -self.u, -self.v)

    def __mul__(self, other: "Scalar") -> "Scalar":
        return multiply(self, other)


def l1_magnitude(s: Scalar) -> float:
    """Sum of coordinate absolute values: ``|x| + |y| + |u| + |v|``.

    For a real scalar this is ``|x|``; for a complex one it is the CABS1
    comparison value ``|x| + |y|``.
    """
    return abs(s.x) + abs(s.y) + abs(s.u) + abs(s.v)


def modulus(s: Scalar) -> float:
    """Euclidean norm ``sqrt(x^2 + y^2 + u^2 + v^2)``."""
    return math.sqrt(s.x * s.x + s.y * s.y + s.u * s.u + s.v * s.v)


def multiply(a: Scalar, b: Scalar) -> Scalar:
    """Hamilton product with kind promotion real < complex < quaternion.

    The formula specializes exactly to complex (and real) multiplication when
    the j/k coordinates vanish.  Order matters: quaternion multiplication is
    not commutative.
    """
    x1, y1, u1, v1 = a.x, a.y, a.u, a.v
    x2, y2, u2, v2 = b.x, b.y, b.u, b.v
    kind = ScalarKind(max(a.kind, b.kind))
    return Scalar(
        kind,
        x1 * x2 - y1 * y2 - u1 * u2 - v1 * v2,
        x1 * y2 + y1 * x2 + u1 * v2 - v1 * u2,
        x1 * u2 - y1 * v2 + u1 * x2 + v1 * y2,
        x1 * v2 + y1 * u2 - u1 * y2 + v1 * x2,
    )


def conjugate(s: Scalar) -> Scalar:
    """Negate the imaginary coordinates; identity on reals."""
    return Scalar(s.kind, s.x, -s.y, -s.u, -s.v)


def invert(s: Scalar) -> Scalar:
    """Multiplicative inverse ``conjugate(s) / modulus(s)^2``.

    Raises:
        ZeroDivisionError: if ``s`` is the zero scalar ("zero divisor").
    """
    m2 = s.x * s.x + s.y * s.y + s.u * s.u + s.v * s.v
    if m2 == 0.0:
        raise ZeroDivisionError("zero divisor: cannot invert the zero scalar")
    return Scalar(s.kind, s.x / m2, -s.y / m2, -s.u / m2, -s.v / m2)


# -- vectorized component-array counterparts ---------------------------------
#
# Batch elimination and Monte Carlo paths represent scalars as float64 arrays
# with a trailing axis of length 4.  The expressions below mirror the scalar
# functions term for term so both paths perform identical IEEE operations.


def hamilton_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Hamilton product of component arrays shaped ``(..., 4)``, broadcasting."""
    x1, y1, u1, v1 = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    x2, y2, u2, v2 = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    return np.stack(
        [
            x1 * x2 - y1 * y2 - u1 * u2 - v1 * v2,
            x1 * y2 + y1 * x2 + u1 * v2 - v1 * u2,
            x1 * u2 - y1 * v2 + u1 * x2 + v1 * y2,
            x1 * v2 + y1 * u2 - u1 * y2 + v1 * x2,
        ],
        axis=-1,
    )


def conjugate_components(a: np.ndarray) -> np.ndarray:
    out = a.copy()
    out[..., 1:] = -out[..., 1:]
    return out


def modulus_components(a: np.ndarray) -> np.ndarray:
    """Euclidean magnitude along the component axis; shape ``(...,)``.

    Summation order matches :func:`modulus` exactly so the scalar and batch
    elimination paths make bitwise-identical pivot comparisons.
    """
    x, y, u, v = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    return np.sqrt(x * x + y * y + u * u + v * v)


def l1_components(a: np.ndarray) -> np.ndarray:
    """Componentwise absolute sum along the component axis; shape ``(...,)``."""
    return np.abs(a[..., 0]) + np.abs(a[..., 1]) + np.abs(a[..., 2]) + np.abs(a[..., 3])


def invert_components(a: np.ndarray) -> np.ndarray:
    """Inverse of each scalar in a component array; zero scalars map to zero.

    The zero-maps-to-zero guard (instead of raising) is what the batch
    elimination path wants: a zero pivot simply produces zero multipliers.
    """
    x, y, u, v = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    m2 = x * x + y * y + u * u + v * v
    safe = np.where(m2 == 0.0, 1.0, m2)
    out = conjugate_components(a) / safe[..., None]
    out[m2 == 0.0] = 0.0
    return out
