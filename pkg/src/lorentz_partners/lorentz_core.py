"""Vector algebra of Minkowski 3-space with signature (-, +, +).

All functions accept array-likes whose last axis has length 3, so they work
on single vectors and on ``(n, 3)`` stacks of per-node samples alike.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import NullVectorError

DEFAULT_TOL_NULL = 1e-9

METRIC = np.array([-1.0, 1.0, 1.0])


class CausalCharacter(enum.Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"

    @property
    def sign(self) -> int:
        """Self-product sign of a unit vector of this character."""
        if self is CausalCharacter.LIGHTLIKE:
            raise ValueError("lightlike vectors have no unit sign")
        return -1 if self is CausalCharacter.TIMELIKE else 1


@dataclass(frozen=True)
class MinkVec3:
    """A point or vector of Minkowski 3-space; ``x1`` is the timelike axis."""

    x1: float
    x2: float
    x3: float

    def __post_init__(self):
        if not all(np.isfinite((self.x1, self.x2, self.x3))):
            raise ValueError(f"non-finite component in {self!r}")

    def __array__(self, dtype=None, copy=None):
        return np.array([self.x1, self.x2, self.x3], dtype=dtype or float)

    def __iter__(self):
        return iter((self.x1, self.x2, self.x3))

    @classmethod
    def of(cls, arr) -> "MinkVec3":
        a = np.asarray(arr, dtype=float)
        return cls(float(a[0]), float(a[1]), float(a[2]))

    def __add__(self, other):
        return MinkVec3.of(np.asarray(self) + np.asarray(other))

    def __sub__(self, other):
        return MinkVec3.of(np.asarray(self) - np.asarray(other))

    def __neg__(self):
        return MinkVec3(-self.x1, -self.x2, -self.x3)

    def __mul__(self, k: float):
        return MinkVec3(k * self.x1, k * self.x2, k * self.x3)

    __rmul__ = __mul__

    def inner(self, other) -> float:
        return float(minkowski_inner(self, other))

    def cross(self, other) -> "MinkVec3":
        return MinkVec3.of(minkowski_cross(self, other))

    def character(self, tol_null: float = DEFAULT_TOL_NULL) -> CausalCharacter:
        return causal_character(self, tol_null)

    def normalized(self, tol_null: float = DEFAULT_TOL_NULL) -> tuple["MinkVec3", int]:
        u, sigma = lorentz_normalize(self, tol_null)
        return MinkVec3.of(u), sigma


E1 = MinkVec3(1.0, 0.0, 0.0)
E2 = MinkVec3(0.0, 1.0, 0.0)
E3 = MinkVec3(0.0, 0.0, 1.0)


def minkowski_inner(x, y) -> np.ndarray:
    """Lorentzian inner product -x1*y1 + x2*y2 + x3*y3 along the last axis."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return -x[..., 0] * y[..., 0] + x[..., 1] * y[..., 1] + x[..., 2] * y[..., 2]


def minkowski_cross(x, y) -> np.ndarray:
    """Lorentzian vector product.

    The determinant with first row (-i, j, k), negated:
    ``(x2*y3 - x3*y2, x1*y3 - x3*y1, -(x1*y2 - x2*y1))``.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    x1, x2, x3 = x[..., 0], x[..., 1], x[..., 2]
    y1, y2, y3 = y[..., 0], y[..., 1], y[..., 2]
    return np.stack(
        [x2 * y3 - x3 * y2, x1 * y3 - x3 * y1, -(x1 * y2 - x2 * y1)], axis=-1
    )


def _null_band(x: np.ndarray, tol_null: float) -> np.ndarray:
    scale = np.maximum(1.0, np.max(np.abs(x), axis=-1) ** 2)
    return tol_null * scale


def causal_character(x, tol_null: float = DEFAULT_TOL_NULL) -> CausalCharacter:
    """Classify a single vector.

    The null band is ``tol_null * max(1, |x|_inf**2)`` so that the verdict does
    not change when the vector is rescaled. The zero vector is spacelike.
    """
    if tol_null <= 0:
        raise ValueError("tol_null must be positive")
    x = np.asarray(x, dtype=float)
    if not np.any(x):
        return CausalCharacter.SPACELIKE
    q = float(minkowski_inner(x, x))
    band = float(_null_band(x, tol_null))
    if q > band:
        return CausalCharacter.SPACELIKE
    if q < -band:
        return CausalCharacter.TIMELIKE
    return CausalCharacter.LIGHTLIKE


def causal_signs(x, tol_null: float = DEFAULT_TOL_NULL) -> np.ndarray:
    """Vectorized classification of an ``(n, 3)`` stack.

    Returns an int array with -1 (timelike), +1 (spacelike) or 0 (lightlike).
    """
    x = np.atleast_2d(np.asarray(x, dtype=float))
    q = minkowski_inner(x, x)
    band = _null_band(x, tol_null)
    out = np.zeros(len(x), dtype=int)
    out[q > band] = 1
    out[q < -band] = -1
    out[~np.any(x, axis=-1)] = 1
    return out


def lorentz_normalize(x, tol_null: float = DEFAULT_TOL_NULL) -> tuple[np.ndarray, int]:
    """Scale a non-null vector to unit length; returns ``(u, <u,u>)``."""
    x = np.asarray(x, dtype=float)
    q = float(minkowski_inner(x, x))
    if abs(q) <= float(_null_band(x, tol_null)):
        raise NullVectorError(f"cannot normalize null vector {x.tolist()}")
    return x / np.sqrt(abs(q)), (1 if q > 0 else -1)
