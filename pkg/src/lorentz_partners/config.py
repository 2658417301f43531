"""Run configuration and tolerances.

Tolerances can be overridden without code changes through the environment
variable ``LPC_TOL_OVERRIDE``, a JSON object mapping field names of
:class:`Tolerances` to numbers.
"""
from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field, fields, replace
from typing import Optional

from .curve_model import MIN_NODES
from .errors import UsageError

ENV_OVERRIDE = "LPC_TOL_OVERRIDE"


@dataclass(frozen=True)
class Tolerances:
    frenet: float = 1e-6       # rows of the Frenet system
    frame: float = 1e-8        # Lorentz orthonormality of the frame
    partner: float = 1e-5      # partner frame relations and kappa_bar
    tau_bar: float = 1e-4      # |tau_bar| against the closed form
    const: float = 1e-3        # "is a constant function" in the theorem suite
    unit: float = 1e-10        # unit-field law
    kappa_min: float = 1e-8
    null: float = 1e-9
    plane: float = 1e-8
    excise_rel: float = 1e-2

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if not (isinstance(v, (int, float)) and v > 0):
                raise UsageError(f"tolerance {f.name} must be a positive number, got {v!r}")

    @classmethod
    def from_env(cls, environ=None) -> "Tolerances":
        raw = (os.environ if environ is None else environ).get(ENV_OVERRIDE)
        base = cls()
        if not raw:
            return base
        try:
            over = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise UsageError(f"{ENV_OVERRIDE} is not valid JSON: {exc}") from exc
        if not isinstance(over, dict):
            raise UsageError(f"{ENV_OVERRIDE} must be a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = set(over) - known
        if unknown:
            raise UsageError(f"{ENV_OVERRIDE}: unknown tolerances {sorted(unknown)}")
        return replace(base, **{k: float(v) for k, v in over.items()})


@dataclass(frozen=True)
class RunConfig:
    curve: str
    params: dict = field(default_factory=dict)
    n: int = 2000
    kind: Optional[str] = None
    case: str = "i"
    c0: float = 0.0
    theta: float = 0.0
    tolerances: Tolerances = field(default_factory=Tolerances)
    out: Optional[str] = None
    plane: str = "x2x3"

    def __post_init__(self):
        if self.n < MIN_NODES:
            raise UsageError(f"n must be >= {MIN_NODES}, got {self.n}")

    def echo(self) -> dict:
        d = asdict(self)
        d["tolerances"] = asdict(self.tolerances)
        return d
