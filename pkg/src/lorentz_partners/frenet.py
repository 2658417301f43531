"""Lorentzian Frenet apparatus of unit-speed non-lightlike curves.

Conventions. With ``eps_Y = <Y, Y>`` the frame satisfies

    T' = kappa N
    N' = eps_B kappa T + tau B
    B' = eps_T tau N

and ``B = eps_T eps_N (T x N)``, ``eps_B = -eps_T eps_N``. Torsion is read off
the third row, ``tau = eps_T eps_N <B', N>``, which is the only choice that
keeps the system above exact for every causal type.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import stencils
from .curve_model import UnitSpeedCurve
from .errors import FrameUndefinedError, LightlikeNormalError, MixedTypeError
from .lorentz_core import DEFAULT_TOL_NULL, causal_signs, minkowski_cross, minkowski_inner

DEFAULT_KAPPA_MIN = 1e-8
#: partner frames: nodes with kappa below this fraction of the median are excised
DEFAULT_EXCISE_REL = 1e-2


class CurveType(enum.Enum):
    TIMELIKE = ("timelike", -1, 1, 1)
    SPACELIKE_TYPE1 = ("spacelike_type1", 1, -1, 1)
    SPACELIKE_TYPE2 = ("spacelike_type2", 1, 1, -1)

    def __init__(self, label, eps_T, eps_N, eps_B):
        self.label = label
        self.eps_T = eps_T
        self.eps_N = eps_N
        self.eps_B = eps_B

    @property
    def signs(self) -> tuple[int, int, int]:
        return (self.eps_T, self.eps_N, self.eps_B)

    @classmethod
    def from_signs(cls, eps_T: int, eps_N: int) -> "CurveType":
        for ct in cls:
            if ct.eps_T == eps_T and ct.eps_N == eps_N:
                return ct
        raise ValueError(f"no non-lightlike Frenet type with eps_T={eps_T}, eps_N={eps_N}")

    @classmethod
    def from_label(cls, label: str) -> "CurveType":
        for ct in cls:
            if ct.label == label:
                return ct
        raise ValueError(label)


@dataclass(frozen=True)
class FrenetSample:
    s: float
    T: np.ndarray
    N: np.ndarray
    B: np.ndarray
    kappa: float
    tau: float


@dataclass(frozen=True)
class FrenetApparatus:
    """Per-node frame and curvatures on a uniform arc-length grid.

    ``valid`` marks nodes where the frame is defined. It is all-true for
    donor curves; partner curves may lose neighbourhoods of inflection
    points (kappa -> 0) where the normal flips.
    """

    curve_type: CurveType
    s: np.ndarray
    T: np.ndarray
    N: np.ndarray
    B: np.ndarray
    kappa: np.ndarray
    tau: np.ndarray
    valid: Optional[np.ndarray] = None
    tier: str = "analytic"
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.valid is None:
            object.__setattr__(self, "valid", np.ones(len(self.s), dtype=bool))

    def __len__(self):
        return len(self.s)

    def __getitem__(self, k: int) -> FrenetSample:
        return FrenetSample(
            float(self.s[k]), self.T[k], self.N[k], self.B[k], float(self.kappa[k]), float(self.tau[k])
        )

    @property
    def samples(self) -> list[FrenetSample]:
        return [self[k] for k in range(len(self))]

    @property
    def h(self) -> float:
        return float((self.s[-1] - self.s[0]) / (len(self.s) - 1))

    def check_mask(self, dilation: int = stencils.BOUNDARY) -> np.ndarray:
        """Nodes that count toward pass/fail maxima.

        Interior nodes whose finite-difference stencil stays clear of
        excised nodes.
        """
        bad = stencils.dilate(~self.valid, dilation)
        return ~bad & stencils.interior_mask(len(self.s))

    def excision_summary(self) -> dict:
        bad = ~self.valid
        if not bad.any():
            return {"excised_nodes": 0}
        edges = np.flatnonzero(np.diff(np.concatenate([[0], bad.astype(int), [0]])))
        zones = [(float(self.s[a]), float(self.s[b - 1])) for a, b in zip(edges[::2], edges[1::2])]
        return {"excised_nodes": int(bad.sum()), "zones": zones}


def _frame(c: UnitSpeedCurve, kappa_min: float, tol_null: float, excise_rel: Optional[float]):
    d1, d2, d3 = c.derivs
    q = minkowski_inner(d2, d2)
    euclid = np.max(np.abs(d2), axis=-1)
    kappa = np.sqrt(np.abs(q))

    eps_T = causal_signs(d1, tol_null)
    if np.any(eps_T == 0):
        raise LightlikeNormalError("tangent lightlike")
    eps_N = causal_signs(d2, tol_null)

    if excise_rel is None:
        tiny = euclid <= kappa_min
        if np.any(tiny):
            k = int(np.flatnonzero(tiny)[0])
            raise FrameUndefinedError(f"curvature vanishes at s={float(c.s[k])!r} (kappa <= {kappa_min})")
        if np.any(eps_N == 0):
            k = int(np.flatnonzero(eps_N == 0)[0])
            raise LightlikeNormalError(f"T' is lightlike at s={float(c.s[k])!r}")
        valid = np.ones(len(kappa), dtype=bool)
    else:
        pos = kappa[kappa > kappa_min]
        if pos.size == 0:
            raise FrameUndefinedError("curvature vanishes everywhere")
        floor = max(kappa_min, excise_rel * float(np.median(pos)))
        valid = (kappa > floor) & (eps_N != 0)
    return kappa, eps_T, eps_N, valid


def _type_of(eps_T: np.ndarray, eps_N: np.ndarray, valid: np.ndarray) -> CurveType:
    pairs = set(zip(eps_T[valid].tolist(), eps_N[valid].tolist()))
    if not pairs:
        raise FrameUndefinedError("no node with a defined frame")
    if len(pairs) > 1:
        names = sorted(CurveType.from_signs(a, b).label for a, b in pairs)
        raise MixedTypeError(f"causal type changes along the curve: {names}")
    (a, b), = pairs
    if a < 0 and b < 0:
        raise LightlikeNormalError("timelike tangent with timelike normal is impossible")
    return CurveType.from_signs(a, b)


def frenet_apparatus(
    c: UnitSpeedCurve,
    kappa_min: float = DEFAULT_KAPPA_MIN,
    tol_null: float = DEFAULT_TOL_NULL,
    excise_rel: Optional[float] = None,
) -> FrenetApparatus:
    """Frame, curvature and torsion from the curve's derivative data.

    With ``excise_rel=None`` (donor curves) any node with kappa <= kappa_min
    raises :class:`FrameUndefinedError`. Partner curves pass a relative floor
    instead; nodes under it are marked invalid and carry NaN frames.
    """
    kappa, eps_T, eps_N, valid = _frame(c, kappa_min, tol_null, excise_rel)
    ct = _type_of(eps_T, eps_N, valid)
    eT, eN = ct.eps_T, ct.eps_N

    d1, d2, d3 = c.derivs
    with np.errstate(divide="ignore", invalid="ignore"):
        k = np.where(valid, kappa, np.nan)[:, None]
        T = d1
        N = d2 / k
        B = eT * eN * minkowski_cross(T, N)
        # kappa kappa' = eps_N <T', T''>
        kp = eN * minkowski_inner(d2, d3)[:, None] / k
        Np = (d3 * k - d2 * kp) / k**2
        Bp = eT * eN * (minkowski_cross(d2, N) + minkowski_cross(T, Np))
        tau = eT * eN * minkowski_inner(Bp, N)
    return FrenetApparatus(
        curve_type=ct,
        s=c.s,
        T=T,
        N=N,
        B=B,
        kappa=kappa,
        tau=tau,
        valid=valid,
        tier=c.tier,
        meta={"name": c.name},
    )


def classify_curve_type(c: UnitSpeedCurve, kappa_min=DEFAULT_KAPPA_MIN, tol_null=DEFAULT_TOL_NULL) -> CurveType:
    kappa, eps_T, eps_N, valid = _frame(c, kappa_min, tol_null, None)
    return _type_of(eps_T, eps_N, valid)


@dataclass
class FrenetResidualReport:
    """Residuals of the three rows of the Frenet system.

    ``rows`` holds per-node sup-norm residuals (NaN at excised nodes);
    maxima are taken over ``mask`` only, so boundary nodes are reported
    but do not decide pass/fail.
    """

    rows: tuple[np.ndarray, np.ndarray, np.ndarray]
    orthonormality: np.ndarray
    mask: np.ndarray
    tol: float
    tol_frame: float

    @property
    def row_max(self) -> tuple[float, float, float]:
        return tuple(_masked_max(r, self.mask) for r in self.rows)

    @property
    def boundary_max(self) -> tuple[float, float, float]:
        edge = ~stencils.interior_mask(len(self.mask))
        return tuple(_masked_max(r, edge) for r in self.rows)

    @property
    def orthonormality_max(self) -> float:
        return _masked_max(self.orthonormality, self.mask)

    @property
    def row_pass(self) -> tuple[bool, bool, bool]:
        return tuple(m < self.tol for m in self.row_max)

    @property
    def passed(self) -> bool:
        return all(self.row_pass) and self.orthonormality_max < self.tol_frame


def _masked_max(values: np.ndarray, mask: np.ndarray) -> float:
    v = values[mask]
    v = v[np.isfinite(v)]
    if v.size == 0:
        return float("nan")
    return float(np.max(v))


def frame_residuals(app: FrenetApparatus) -> np.ndarray:
    """Per-node max deviation from Lorentz-orthonormality and from
    ``B = eps_T eps_N T x N``."""
    eT, eN, eB = app.curve_type.signs
    T, N, B = app.T, app.N, app.B
    ip = minkowski_inner
    parts = [
        np.abs(ip(T, T) - eT),
        np.abs(ip(N, N) - eN),
        np.abs(ip(B, B) - eB),
        np.abs(ip(T, N)),
        np.abs(ip(T, B)),
        np.abs(ip(N, B)),
        np.max(np.abs(B - eT * eN * minkowski_cross(T, N)), axis=-1),
    ]
    return np.max(np.stack(parts), axis=0)


def check_frenet_equations(app: FrenetApparatus, tol: float = 1e-6, tol_frame: float = 1e-8) -> FrenetResidualReport:
    """Compare finite-difference derivatives of the sampled frame against
    the right-hand side of the Frenet system."""
    h = app.h
    eT, eN, eB = app.curve_type.signs
    k = app.kappa[:, None]
    t = app.tau[:, None]
    Tp, Np, Bp = (stencils.d1(v, h) for v in (app.T, app.N, app.B))
    r1 = np.max(np.abs(Tp - k * app.N), axis=-1)
    r2 = np.max(np.abs(Np - (eB * k * app.T + t * app.B)), axis=-1)
    r3 = np.max(np.abs(Bp - eT * t * app.N), axis=-1)
    return FrenetResidualReport(
        rows=(r1, r2, r3),
        orthonormality=frame_residuals(app),
        mask=app.check_mask(),
        tol=tol,
        tol_frame=tol_frame,
    )
