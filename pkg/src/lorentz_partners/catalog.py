"""Built-in donor curves.

Closed-form entries carry exact derivatives to third order. Entries marked
``intrinsic`` are defined by prescribed curvature and torsion and obtained by
integrating the Frenet system (plus alpha' = T) to near machine precision;
their derivatives follow from the frame, so they belong to the analytic tier
as well.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from scipy.integrate import solve_ivp

from .curve_model import CurveSpec
from .errors import ParamOutOfRangeError, UnknownCurveError
from .frenet import CurveType

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class Param:
    default: float
    lo: float = -math.inf
    hi: float = math.inf
    doc: str = ""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    schema: dict
    factory: Callable[[dict], CurveSpec]
    expected_type: Optional[CurveType]
    description: str
    # params -> (kappa(s), tau(s)) in the Frenet-system convention, when known
    closed_form: Optional[Callable[[dict], tuple[Callable, Callable]]] = None
    tags: frozenset = field(default_factory=frozenset)

    def resolve(self, params: Optional[dict] = None) -> dict:
        params = dict(params or {})
        unknown = set(params) - set(self.schema)
        if unknown:
            raise ParamOutOfRangeError(f"{self.name}: unknown parameters {sorted(unknown)}")
        out = {}
        for key, p in self.schema.items():
            v = float(params.get(key, p.default))
            if not (p.lo <= v <= p.hi) or not math.isfinite(v):
                raise ParamOutOfRangeError(f"{self.name}: {key}={v} outside [{p.lo}, {p.hi}]")
            out[key] = v
        return out


def _vec(*cols):
    return np.stack([np.broadcast_to(np.asarray(c, dtype=float), np.shape(cols[0])) for c in cols], axis=-1)


def _zeros(t):
    return np.zeros_like(np.asarray(t, dtype=float))


# --- closed-form curves -----------------------------------------------------

def _timelike_helix(p):
    a, b = p["a"], p["b"]
    if not b > a:
        raise ParamOutOfRangeError("timelike_helix needs b > a")
    return CurveSpec(
        "timelike_helix", p, (p["t0"], p["t1"]),
        position=lambda t: _vec(b * t, a * np.cos(t), a * np.sin(t)),
        d1=lambda t: _vec(b + _zeros(t), -a * np.sin(t), a * np.cos(t)),
        d2=lambda t: _vec(_zeros(t), -a * np.cos(t), -a * np.sin(t)),
        d3=lambda t: _vec(_zeros(t), a * np.sin(t), -a * np.cos(t)),
    )


def _spacelike_helix_type1(p):
    a, b = p["a"], p["b"]
    return CurveSpec(
        "spacelike_helix_type1", p, (p["t0"], p["t1"]),
        position=lambda t: _vec(a * np.cosh(t), a * np.sinh(t), b * t),
        d1=lambda t: _vec(a * np.sinh(t), a * np.cosh(t), b + _zeros(t)),
        d2=lambda t: _vec(a * np.cosh(t), a * np.sinh(t), _zeros(t)),
        d3=lambda t: _vec(a * np.sinh(t), a * np.cosh(t), _zeros(t)),
    )


def _spacelike_helix_type2(p):
    a, b = p["a"], p["b"]
    if not b > a:
        raise ParamOutOfRangeError("spacelike_helix_type2 needs b > a")
    return CurveSpec(
        "spacelike_helix_type2", p, (p["t0"], p["t1"]),
        position=lambda t: _vec(a * np.sinh(t), a * np.cosh(t), b * t),
        d1=lambda t: _vec(a * np.cosh(t), a * np.sinh(t), b + _zeros(t)),
        d2=lambda t: _vec(a * np.sinh(t), a * np.cosh(t), _zeros(t)),
        d3=lambda t: _vec(a * np.cosh(t), a * np.sinh(t), _zeros(t)),
    )


def _timelike_planar(p):
    a = p["a"]
    return CurveSpec(
        "timelike_planar", p, (p["t0"], p["t1"]),
        position=lambda t: _vec(a * np.sinh(t / a), a * np.cosh(t / a), _zeros(t)),
        d1=lambda t: _vec(np.cosh(t / a), np.sinh(t / a), _zeros(t)),
        d2=lambda t: _vec(np.sinh(t / a) / a, np.cosh(t / a) / a, _zeros(t)),
        d3=lambda t: _vec(np.cosh(t / a) / a**2, np.sinh(t / a) / a**2, _zeros(t)),
    )


def _spacelike_planar(p):
    a = p["a"]
    return CurveSpec(
        "spacelike_planar", p, (p["t0"], p["t1"]),
        position=lambda t: _vec(a * np.cosh(t / a), a * np.sinh(t / a), _zeros(t)),
        d1=lambda t: _vec(np.sinh(t / a), np.cosh(t / a), _zeros(t)),
        d2=lambda t: _vec(np.cosh(t / a) / a, np.sinh(t / a) / a, _zeros(t)),
        d3=lambda t: _vec(np.sinh(t / a) / a**2, np.cosh(t / a) / a**2, _zeros(t)),
    )


def _spacelike_circle(p):
    a = p["a"]
    return CurveSpec(
        "spacelike_circle", p, (p["t0"], p["t1"]),
        position=lambda t: _vec(_zeros(t), a * np.cos(t / a), a * np.sin(t / a)),
        d1=lambda t: _vec(_zeros(t), -np.sin(t / a), np.cos(t / a)),
        d2=lambda t: _vec(_zeros(t), -np.cos(t / a) / a, -np.sin(t / a) / a),
        d3=lambda t: _vec(_zeros(t), np.sin(t / a) / a**2, -np.cos(t / a) / a**2),
    )


def _straight_line(p):
    v = np.array([0.0, p["speed"], 0.0])
    return CurveSpec(
        "straight_line", p, (p["t0"], p["t1"]),
        position=lambda t: np.asarray(t, dtype=float)[:, None] * v,
        d1=lambda t: np.tile(v, (len(np.atleast_1d(t)), 1)),
        d2=lambda t: np.zeros((len(np.atleast_1d(t)), 3)),
        d3=lambda t: np.zeros((len(np.atleast_1d(t)), 3)),
    )


# --- intrinsic curves -------------------------------------------------------

_INITIAL_FRAMES = {
    CurveType.TIMELIKE: ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    CurveType.SPACELIKE_TYPE1: ((0, 1, 0), (1, 0, 0), (0, 0, -1)),
    CurveType.SPACELIKE_TYPE2: ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
}


_SOLUTIONS: dict = {}


def _solve_frenet(key, ctype: CurveType, s0: float, s1: float, kappa, tau):
    if key in _SOLUTIONS:
        return _SOLUTIONS[key]
    eT, _, eB = ctype.signs

    def rhs(s, y):
        T, N, B = y[3:6], y[6:9], y[9:12]
        k, w = kappa(s), tau(s)
        return np.concatenate([T, k * N, eB * k * T + w * B, eT * w * N])

    T0, N0, B0 = (np.array(v, dtype=float) for v in _INITIAL_FRAMES[ctype])
    y0 = np.concatenate([np.zeros(3), T0, N0, B0])
    sol = solve_ivp(rhs, (s0, s1), y0, method="DOP853", rtol=1e-13, atol=1e-14, dense_output=True)
    if not sol.success:
        raise RuntimeError(f"frame integration failed: {sol.message}")
    _SOLUTIONS[key] = sol.sol
    return sol.sol


def intrinsic_spec(
    name: str,
    params: dict,
    ctype: CurveType,
    domain: tuple[float, float],
    kappa: Callable[[float], float],
    kappa_prime: Callable[[float], float],
    tau: Callable[[float], float],
) -> CurveSpec:
    """Unit-speed curve with prescribed curvature and torsion."""
    key = (name, tuple(sorted(params.items())))
    sol = _solve_frenet(key, ctype, float(domain[0]), float(domain[1]), kappa, tau)
    eB = ctype.eps_B
    kv, kpv, tv = np.vectorize(kappa), np.vectorize(kappa_prime), np.vectorize(tau)

    def state(t):
        return sol(np.asarray(t, dtype=float)).T

    def d3(t):
        y = state(t)
        T, N, B = y[:, 3:6], y[:, 6:9], y[:, 9:12]
        k, kp, w = kv(t)[:, None], kpv(t)[:, None], tv(t)[:, None]
        return kp * N + k * (eB * k * T + w * B)

    return CurveSpec(
        name, params, domain,
        position=lambda t: state(t)[:, 0:3],
        d1=lambda t: state(t)[:, 3:6],
        d2=lambda t: kv(t)[:, None] * state(t)[:, 6:9],
        d3=d3,
    )


def _intrinsic_nonhelix(p):
    # kappa = 1, tau = s: tau/kappa varies linearly
    return intrinsic_spec(
        "intrinsic_nonhelix", p, CurveType.TIMELIKE, (p["t0"], p["t1"]),
        kappa=lambda s: 1.0, kappa_prime=lambda s: 0.0, tau=lambda s: s,
    )


def _hyperbolic_slant(name, ctype):
    # kappa = 1, tau = c s / sqrt(1 + c^2 s^2) keeps
    # kappa^2 / (kappa^2 - tau^2)^(3/2) (tau/kappa)' = c
    def factory(p):
        c = p["c"]
        return intrinsic_spec(
            name, p, ctype, (p["t0"], p["t1"]),
            kappa=lambda s: 1.0, kappa_prime=lambda s: 0.0,
            tau=lambda s: c * s / math.sqrt(1.0 + (c * s) ** 2),
        )
    return factory


def _circular_slant(p):
    # kappa = 1, tau = c s / sqrt(1 - c^2 s^2) keeps
    # kappa^2 / (kappa^2 + tau^2)^(3/2) (tau/kappa)' = c
    c = p["c"]
    if abs(c) * max(abs(p["t0"]), abs(p["t1"])) >= 0.95:
        raise ParamOutOfRangeError("spacelike_slant_helix_type1 needs |c s| < 0.95 on the domain")
    return intrinsic_spec(
        "spacelike_slant_helix_type1", p, CurveType.SPACELIKE_TYPE1, (p["t0"], p["t1"]),
        kappa=lambda s: 1.0, kappa_prime=lambda s: 0.0,
        tau=lambda s: c * s / math.sqrt(1.0 - (c * s) ** 2),
    )


def _const(v):
    return lambda s: np.full_like(np.asarray(s, dtype=float), v)


def _domain(t0, t1):
    return {"t0": Param(t0, doc="parameter start"), "t1": Param(t1, doc="parameter end")}


CATALOG: dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry) -> None:
    CATALOG[entry.name] = entry


_register(CatalogEntry(
    "timelike_helix",
    {"a": Param(1.0, 1e-3, 1e3), "b": Param(SQRT2, 1e-3, 1e3), **_domain(0.0, math.pi)},
    _timelike_helix, CurveType.TIMELIKE,
    "(b t, a cos t, a sin t), b > a; unit speed when b^2 - a^2 = 1",
    closed_form=lambda p: (_const(p["a"] / (p["b"] ** 2 - p["a"] ** 2)),
                           _const(p["b"] / (p["b"] ** 2 - p["a"] ** 2))),
    tags=frozenset({"helix"}),
))
_register(CatalogEntry(
    "timelike_planar",
    {"a": Param(1.0, 1e-3, 1e3), **_domain(0.0, 2.0)},
    _timelike_planar, CurveType.TIMELIKE,
    "(a sinh(t/a), a cosh(t/a), 0): timelike hyperbola in the x1x2-plane",
    closed_form=lambda p: (_const(1.0 / p["a"]), _const(0.0)),
    tags=frozenset({"planar"}),
))
_register(CatalogEntry(
    "spacelike_helix_type1",
    {"a": Param(0.6, 1e-3, 1e3), "b": Param(0.8, 1e-3, 1e3), **_domain(0.0, 2.0)},
    _spacelike_helix_type1, CurveType.SPACELIKE_TYPE1,
    "(a cosh t, a sinh t, b t): timelike normal",
    closed_form=lambda p: (_const(p["a"] / (p["a"] ** 2 + p["b"] ** 2)),
                           _const(p["b"] / (p["a"] ** 2 + p["b"] ** 2))),
    tags=frozenset({"helix"}),
))
_register(CatalogEntry(
    "spacelike_helix_type2",
    {"a": Param(1.0, 1e-3, 1e3), "b": Param(SQRT2, 1e-3, 1e3), **_domain(0.0, 2.0)},
    _spacelike_helix_type2, CurveType.SPACELIKE_TYPE2,
    "(a sinh t, a cosh t, b t), b > a: timelike binormal",
    closed_form=lambda p: (_const(p["a"] / (p["b"] ** 2 - p["a"] ** 2)),
                           _const(-p["b"] / (p["b"] ** 2 - p["a"] ** 2))),
    tags=frozenset({"helix"}),
))
_register(CatalogEntry(
    "spacelike_planar",
    {"a": Param(1.0, 1e-3, 1e3), **_domain(0.0, 2.0)},
    _spacelike_planar, CurveType.SPACELIKE_TYPE1,
    "(a cosh(t/a), a sinh(t/a), 0): spacelike hyperbola in the x1x2-plane",
    closed_form=lambda p: (_const(1.0 / p["a"]), _const(0.0)),
    tags=frozenset({"planar"}),
))
_register(CatalogEntry(
    "spacelike_circle",
    {"a": Param(1.0, 1e-3, 1e3), **_domain(0.0, math.pi)},
    _spacelike_circle, CurveType.SPACELIKE_TYPE2,
    "(0, a cos(t/a), a sin(t/a)): Euclidean circle in the spacelike x2x3-plane",
    closed_form=lambda p: (_const(1.0 / p["a"]), _const(0.0)),
    tags=frozenset({"planar"}),
))
_register(CatalogEntry(
    "intrinsic_nonhelix",
    _domain(0.5, 2.5),
    _intrinsic_nonhelix, CurveType.TIMELIKE,
    "timelike, kappa = 1, tau = s (frame integration)",
    closed_form=lambda p: (_const(1.0), lambda s: np.asarray(s, dtype=float)),
    tags=frozenset({"intrinsic"}),
))
_register(CatalogEntry(
    "timelike_slant_helix",
    {"c": Param(0.4, -10.0, 10.0), **_domain(0.0, 2.0)},
    _hyperbolic_slant("timelike_slant_helix", CurveType.TIMELIKE), CurveType.TIMELIKE,
    "timelike, kappa = 1, tau = c s / sqrt(1 + c^2 s^2) (frame integration)",
    closed_form=lambda p: (_const(1.0), lambda s: p["c"] * np.asarray(s) / np.sqrt(1 + (p["c"] * np.asarray(s)) ** 2)),
    tags=frozenset({"intrinsic", "slant"}),
))
_register(CatalogEntry(
    "spacelike_slant_helix_type2",
    {"c": Param(0.4, -10.0, 10.0), **_domain(0.0, 2.0)},
    _hyperbolic_slant("spacelike_slant_helix_type2", CurveType.SPACELIKE_TYPE2), CurveType.SPACELIKE_TYPE2,
    "spacelike type 2, kappa = 1, tau = c s / sqrt(1 + c^2 s^2) (frame integration)",
    closed_form=lambda p: (_const(1.0), lambda s: p["c"] * np.asarray(s) / np.sqrt(1 + (p["c"] * np.asarray(s)) ** 2)),
    tags=frozenset({"intrinsic", "slant"}),
))
_register(CatalogEntry(
    "spacelike_slant_helix_type1",
    {"c": Param(0.3, -10.0, 10.0), **_domain(0.0, 2.0)},
    _circular_slant, CurveType.SPACELIKE_TYPE1,
    "spacelike type 1, kappa = 1, tau = c s / sqrt(1 - c^2 s^2) (frame integration)",
    closed_form=lambda p: (_const(1.0), lambda s: p["c"] * np.asarray(s) / np.sqrt(1 - (p["c"] * np.asarray(s)) ** 2)),
    tags=frozenset({"intrinsic", "slant"}),
))
_register(CatalogEntry(
    "straight_line",
    {"speed": Param(1.0, 1e-3, 1e3), **_domain(0.0, 2.0)},
    _straight_line, None,
    "(0, speed t, 0): spacelike line, no Frenet frame",
    tags=frozenset({"degenerate"}),
))
CATALOG["spacelike_line"] = CATALOG["straight_line"]


def curve_catalog(name: str, params: Optional[dict] = None) -> CurveSpec:
    try:
        entry = CATALOG[name]
    except KeyError:
        raise UnknownCurveError(f"unknown curve {name!r}; known: {sorted(CATALOG)}") from None
    return entry.factory(entry.resolve(params))
