"""Finite-difference derivatives on uniform grids.

Fourth-order central stencils in the interior, second-order one-sided
stencils at the two outermost nodes on each end. Arrays are differentiated
along axis 0, so ``(n+1,)`` and ``(n+1, 3)`` inputs both work.
"""
from __future__ import annotations

import numpy as np

from .errors import GridTooSmall

#: nodes at each end that use the lower-order one-sided stencils
BOUNDARY = 2


def _check(f: np.ndarray, need: int) -> None:
    if f.shape[0] < need:
        raise GridTooSmall(f"need at least {need} nodes, got {f.shape[0]}")


def d1(f, h: float) -> np.ndarray:
    f = np.asarray(f, dtype=float)
    _check(f, 5)
    out = np.empty_like(f)
    out[2:-2] = (f[:-4] - 8.0 * f[1:-3] + 8.0 * f[3:-1] - f[4:]) / (12.0 * h)
    for i in (0, 1):
        out[i] = (-3.0 * f[i] + 4.0 * f[i + 1] - f[i + 2]) / (2.0 * h)
    for i in (-1, -2):
        out[i] = (3.0 * f[i] - 4.0 * f[i - 1] + f[i - 2]) / (2.0 * h)
    return out


def d1_strided(f, h: float, stride: int = 1) -> np.ndarray:
    """``d1`` with nodes ``stride`` apart, run on each interleaved sub-grid.

    Trades truncation error for roundoff when ``f`` is itself a noisy
    derivative. One-sided stencils then cover ``BOUNDARY * stride`` nodes
    at each end.
    """
    f = np.asarray(f, dtype=float)
    if stride < 1:
        raise ValueError(f"stride must be >= 1, got {stride}")
    out = np.empty_like(f)
    for j in range(stride):
        out[j::stride] = d1(f[j::stride], stride * h)
    return out


def d2(f, h: float) -> np.ndarray:
    f = np.asarray(f, dtype=float)
    _check(f, 6)
    out = np.empty_like(f)
    out[2:-2] = (
        -f[:-4] + 16.0 * f[1:-3] - 30.0 * f[2:-2] + 16.0 * f[3:-1] - f[4:]
    ) / (12.0 * h * h)
    for i in (0, 1):
        out[i] = (2.0 * f[i] - 5.0 * f[i + 1] + 4.0 * f[i + 2] - f[i + 3]) / (h * h)
    for i in (-1, -2):
        out[i] = (2.0 * f[i] - 5.0 * f[i - 1] + 4.0 * f[i - 2] - f[i - 3]) / (h * h)
    return out


def interior_mask(n_nodes: int, boundary: int = BOUNDARY) -> np.ndarray:
    m = np.ones(n_nodes, dtype=bool)
    m[:boundary] = False
    m[n_nodes - boundary:] = False
    return m


def dilate(mask_bad: np.ndarray, width: int = BOUNDARY) -> np.ndarray:
    """Grow a boolean "bad node" mask by ``width`` nodes on each side."""
    bad = np.asarray(mask_bad, dtype=bool).copy()
    out = bad.copy()
    for k in range(1, width + 1):
        out[k:] |= bad[:-k]
        out[:-k] |= bad[k:]
    return out
