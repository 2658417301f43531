"""Curve representations, arc-length reparametrization and integral curves."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from scipy.interpolate import PchipInterpolator

from . import stencils
from .errors import (
    GridTooSmall,
    LightlikeTangentError,
    NonMonotoneError,
    NonUnitFieldError,
)
from .lorentz_core import (
    DEFAULT_TOL_NULL,
    CausalCharacter,
    causal_signs,
    minkowski_inner,
)

VecFn = Callable[[np.ndarray], np.ndarray]

DEFAULT_TOL_UNIT = 1e-10
MIN_NODES = 16

# 8-point Gauss-Legendre rule on [-1, 1], used to polish t(s)
_GL_X, _GL_W = np.polynomial.legendre.leggauss(8)


@dataclass(frozen=True)
class CurveSpec:
    """Analytic curve with derivatives up to order three.

    The four callables take a 1-d array of parameter values and return an
    ``(len(t), 3)`` array.
    """

    name: str
    params: dict
    domain: tuple[float, float]
    position: VecFn
    d1: VecFn
    d2: VecFn
    d3: VecFn

    def __post_init__(self):
        lo, hi = self.domain
        if not lo < hi:
            raise ValueError(f"empty domain {self.domain}")


@dataclass(frozen=True)
class SampledCurve:
    grid: np.ndarray
    positions: np.ndarray
    derivs: tuple[np.ndarray, np.ndarray, np.ndarray]
    spec: Optional[CurveSpec] = None

    def __post_init__(self):
        if np.any(np.diff(self.grid) <= 0):
            raise ValueError("grid must be strictly increasing")
        if not np.all(np.isfinite(self.positions)):
            raise ValueError("non-finite positions")

    @property
    def n(self) -> int:
        return len(self.grid) - 1


@dataclass(frozen=True)
class UnitSpeedCurve:
    """Samples on a uniform arc-length grid.

    ``derivs`` holds d/ds, d2/ds2 and d3/ds3 of the position. ``tier`` records
    whether they are analytic (chain rule on exact derivatives) or came from
    finite differences, which decides which tolerance tier applies downstream.
    """

    s: np.ndarray
    positions: np.ndarray
    derivs: tuple[np.ndarray, np.ndarray, np.ndarray]
    character: CausalCharacter
    tier: str = "analytic"
    name: str = ""
    meta: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.s) - 1

    @property
    def h(self) -> float:
        return float((self.s[-1] - self.s[0]) / self.n)

    @property
    def tangent(self) -> np.ndarray:
        return self.derivs[0]

    @classmethod
    def from_positions(cls, s, positions, name: str = "", tol_null=DEFAULT_TOL_NULL):
        """Build from positions alone; derivatives come from finite differences.

        ``s`` must be a uniform arc-length grid.
        """
        s = np.asarray(s, dtype=float)
        positions = np.asarray(positions, dtype=float)
        h = float((s[-1] - s[0]) / (len(s) - 1))
        t1 = stencils.d1(positions, h)
        t2 = stencils.d2(positions, h)
        t3 = stencils.d1(t2, h)
        return cls(
            s=s,
            positions=positions,
            derivs=(t1, t2, t3),
            character=_uniform_character(t1, tol_null),
            tier="finite_difference",
            name=name,
        )


def _uniform_character(tangent: np.ndarray, tol_null: float) -> CausalCharacter:
    signs = causal_signs(tangent, tol_null)
    if np.any(signs == 0):
        k = int(np.flatnonzero(signs == 0)[0])
        raise LightlikeTangentError(f"tangent is lightlike at node {k}")
    if np.all(signs < 0):
        return CausalCharacter.TIMELIKE
    if np.all(signs > 0):
        return CausalCharacter.SPACELIKE
    raise LightlikeTangentError("tangent changes causal character (passes through the light cone)")


def sample_curve(spec: CurveSpec, n: int, tol_null: float = DEFAULT_TOL_NULL) -> SampledCurve:
    """Evaluate ``spec`` on a uniform grid of ``n + 1`` nodes."""
    if n < MIN_NODES:
        raise GridTooSmall(f"n must be >= {MIN_NODES}, got {n}")
    t = np.linspace(spec.domain[0], spec.domain[1], n + 1)
    a1 = np.asarray(spec.d1(t), dtype=float)
    _uniform_character(a1, tol_null)
    return SampledCurve(
        grid=t,
        positions=np.asarray(spec.position(t), dtype=float),
        derivs=(a1, np.asarray(spec.d2(t), dtype=float), np.asarray(spec.d3(t), dtype=float)),
        spec=spec,
    )


def cumulative_integral(values, c0: float = 0.0, h: float = 1.0) -> np.ndarray:
    """Running integral ``F(s_k) = c0 + int_{s_0}^{s_k} f ds`` on a uniform grid.

    Even prefixes use composite Simpson. Odd prefixes use Simpson up to
    ``k - 3`` plus the 3/8 rule on the last three panels, and ``k = 1``
    integrates the cubic through the first four nodes. Every node is exact
    for cubics.
    """
    f = np.asarray(values, dtype=float)
    n = f.shape[0] - 1
    if n < 2:
        raise GridTooSmall("cumulative_integral needs at least 3 nodes")
    out = np.empty_like(f)
    out[0] = 0.0

    # Simpson partial sums over pairs of panels
    pair = h / 3.0 * (f[0:-2:2] + 4.0 * f[1:-1:2] + f[2::2])
    even = np.concatenate([np.zeros((1,) + f.shape[1:]), np.cumsum(pair, axis=0)])
    out[0::2] = even[: len(out[0::2])]

    if n >= 3:
        out[1] = h / 24.0 * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3])
    else:
        out[1] = h / 12.0 * (5.0 * f[0] + 8.0 * f[1] - f[2])
    if n >= 3:
        k = np.arange(3, n + 1, 2)
        tail = 3.0 * h / 8.0 * (f[k - 3] + 3.0 * f[k - 2] + 3.0 * f[k - 1] + f[k])
        out[3::2] = even[(k - 3) // 2] + tail
    return out + c0


def _speed_terms(a1, a2, a3, eps):
    """Speed g and its first two t-derivatives for a curve of sign ``eps``."""
    g2 = eps * minkowski_inner(a1, a1)
    g = np.sqrt(g2)
    gp = eps * minkowski_inner(a1, a2) / g
    gpp = (eps * (minkowski_inner(a2, a2) + minkowski_inner(a1, a3)) - gp * gp) / g
    return g, gp, gpp


def _chain_rule(a1, a2, a3, eps):
    g, gp, gpp = _speed_terms(a1, a2, a3, eps)
    t1 = 1.0 / g
    t2 = -gp / g**3
    t3 = -gpp / g**4 + 3.0 * gp**2 / g**5
    c1, c2, c3 = t1[:, None], t2[:, None], t3[:, None]
    x1 = a1 * c1
    x2 = a2 * c1**2 + a1 * c2
    x3 = a3 * c1**3 + 3.0 * a2 * c1 * c2 + a1 * c3
    return x1, x2, x3


def reparametrize_arclength(
    c: SampledCurve,
    n_out: Optional[int] = None,
    tol_null: float = DEFAULT_TOL_NULL,
) -> UnitSpeedCurve:
    """Resample ``c`` on a uniform arc-length grid.

    Arc length is the Simpson running integral of the speed. The inverse map
    ``t(s)`` starts from a monotone cubic interpolant and, when the analytic
    spec is available, is polished with Newton steps whose residual uses
    Gauss-Legendre quadrature from the nearest grid node. Derivatives with
    respect to s follow from the chain rule.
    """
    n_out = c.n if n_out is None else n_out
    if n_out < MIN_NODES:
        raise GridTooSmall(f"n_out must be >= {MIN_NODES}")
    a1 = c.derivs[0]
    character = _uniform_character(a1, tol_null)
    eps = character.sign
    t = c.grid
    h_t = float((t[-1] - t[0]) / c.n)
    speed = np.sqrt(eps * minkowski_inner(a1, a1))
    s_of_t = cumulative_integral(speed, 0.0, h_t)
    if np.any(np.diff(s_of_t) <= 0):
        raise NonMonotoneError("computed arc length is not strictly increasing")

    # arc length is anchored at t_0 so unit-speed inputs keep s == t
    s_of_t = s_of_t + t[0]
    s_out = np.linspace(t[0], s_of_t[-1], n_out + 1)
    t_of_s = PchipInterpolator(s_of_t, t)(s_out)
    t_of_s[0], t_of_s[-1] = t[0], t[-1]

    spec = c.spec
    if spec is not None:
        def speed_at(tt):
            v = np.asarray(spec.d1(np.atleast_1d(tt)), dtype=float)
            return np.sqrt(eps * minkowski_inner(v, v))

        for _ in range(4):
            j = np.clip(np.searchsorted(t, t_of_s) - 1, 0, c.n)
            lo = t[j]
            half = 0.5 * (t_of_s - lo)
            mid = 0.5 * (t_of_s + lo)
            nodes = mid[:, None] + half[:, None] * _GL_X[None, :]
            vals = speed_at(nodes.ravel()).reshape(nodes.shape)
            s_est = s_of_t[j] + half * (vals @ _GL_W)
            step = (s_est - s_out) / speed_at(t_of_s)
            step[0] = step[-1] = 0.0
            t_of_s = t_of_s - step
            if np.max(np.abs(step)) < 1e-15 * max(1.0, np.max(np.abs(t))):
                break
        b1, b2, b3 = (np.asarray(f(t_of_s), dtype=float) for f in (spec.d1, spec.d2, spec.d3))
        positions = np.asarray(spec.position(t_of_s), dtype=float)
        tier = "analytic"
    else:
        # sampled-only input: spline the samples, looser tolerance tier
        from scipy.interpolate import CubicSpline

        positions = CubicSpline(t, c.positions, axis=0)(t_of_s)
        b1, b2, b3 = (CubicSpline(t, d, axis=0)(t_of_s) for d in c.derivs)
        tier = "finite_difference"

    x1, x2, x3 = _chain_rule(b1, b2, b3, eps)
    return UnitSpeedCurve(
        s=s_out,
        positions=positions,
        derivs=(x1, x2, x3),
        character=character,
        tier=tier,
        name=spec.name if spec is not None else "",
        meta={"params": dict(spec.params)} if spec is not None else {},
    )


def integral_curve(
    X,
    base,
    s,
    tol_unit: float = DEFAULT_TOL_UNIT,
    name: str = "",
) -> UnitSpeedCurve:
    """Integral curve of a unit field sampled on the uniform grid ``s``.

    ``beta(s_k) = base + int_{s_0}^{s_k} X ds``. Since X is unit, beta is
    unit speed on the same grid; its higher derivatives are finite
    differences of X.
    """
    X = np.asarray(X, dtype=float)
    s = np.asarray(s, dtype=float)
    q = minkowski_inner(X, X)
    scale = np.maximum(1.0, np.max(np.abs(X), axis=-1) ** 2)
    bad = np.abs(np.abs(q) - 1.0) > tol_unit * scale
    if np.any(bad):
        k = int(np.flatnonzero(bad)[0])
        raise NonUnitFieldError(f"|<X,X>| = {abs(q[k])!r} at node {k}, expected 1")
    h = float((s[-1] - s[0]) / (len(s) - 1))
    base = np.asarray(base, dtype=float)
    positions = base[None, :] + cumulative_integral(X, 0.0, h)
    character = CausalCharacter.TIMELIKE if np.all(q < 0) else (
        CausalCharacter.SPACELIKE if np.all(q > 0) else None
    )
    if character is None:
        raise NonUnitFieldError("field changes causal character along the grid")
    return UnitSpeedCurve(
        s=s,
        positions=positions,
        derivs=(X, stencils.d1(X, h), stencils.d2(X, h)),
        character=character,
        tier="finite_difference",
        name=name,
    )
