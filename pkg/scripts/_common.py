"""Helpers shared by the experiment scripts."""
from __future__ import annotations

import argparse
import dataclasses
from typing import Iterator

from lorentz_partners.catalog import CATALOG, curve_catalog
from lorentz_partners.curve_model import reparametrize_arclength, sample_curve
from lorentz_partners.direction_curves import ADMISSIBLE, CASES, PartnerKind, PartnerSpec
from lorentz_partners.frenet import frenet_apparatus

DONORS = sorted(n for n, e in CATALOG.items() if e.expected_type is not None)


def parse_into(cfg_cls, description: str):
    """Build a dataclass config from command line flags named after its fields."""
    p = argparse.ArgumentParser(description=description)
    for f in dataclasses.fields(cfg_cls):
        default = f.default if f.default is not dataclasses.MISSING else f.default_factory()
        if isinstance(default, tuple):
            kind = type(default[0]) if default else str
            p.add_argument(f"--{f.name.replace('_', '-')}", nargs="+", type=kind, default=default)
        else:
            p.add_argument(f"--{f.name.replace('_', '-')}", type=type(default), default=default)
    ns = p.parse_args()
    return cfg_cls(**{k: tuple(v) if isinstance(v, list) else v for k, v in vars(ns).items()})


def donor(name: str, n: int):
    c = reparametrize_arclength(sample_curve(curve_catalog(name), n))
    return c, frenet_apparatus(c)


def specs(ct, c0s=(0.0, 0.3, 1.0), thetas=(0.0, 0.7)) -> Iterator[PartnerSpec]:
    for kind in PartnerKind:
        for case in CASES:
            if ct not in ADMISSIBLE[(kind, case)]:
                continue
            if kind is PartnerKind.BERTRAND:
                yield from (PartnerSpec(kind, case, theta=t) for t in thetas)
            else:
                yield from (PartnerSpec(kind, case, c0=c) for c in c0s)
