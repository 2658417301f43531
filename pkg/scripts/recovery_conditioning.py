"""Donor curvature recovered from Mannheim and evolute partners, against grid
size and the node spacing of the extra difference the recovery takes.

Shows the balance between truncation error (falls with n) and roundoff
amplified through two differences of X plus one more for the recovery
(grows with n).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from _common import donor, parse_into

from lorentz_partners.direction_curves import PartnerSpec, construct_partner, recover_donor_curvatures


@dataclass(frozen=True)
class Config:
    donors: tuple = ("timelike_helix", "intrinsic_nonhelix", "timelike_slant_helix",
                     "spacelike_slant_helix_type1")
    kinds: tuple = ("mannheim_i", "evolute_i")
    ns: tuple = (500, 1000, 2000, 4000)
    strides: tuple = (1, 2, 4, 8)
    c0: float = 1.0


def main(cfg: Config) -> int:
    print(f"{'donor':28s} {'spec':12s} {'n':>5s} {'stride':>6s} {'max|d kappa|':>13s} {'max|d |tau||':>13s}")
    for name in cfg.donors:
        for label in cfg.kinds:
            kind, case = label.split("_")
            for n in cfg.ns:
                c, app = donor(name, n)
                spec = PartnerSpec(kind, case, c0=cfg.c0)
                try:
                    _, bapp = construct_partner(c, spec, app)
                except Exception as exc:  # inadmissible or degenerate combination
                    print(f"{name:28s} {label:12s} {n:5d}  skipped: {type(exc).__name__}")
                    break
                for stride in cfg.strides:
                    rec = recover_donor_curvatures(bapp, spec, app.curve_type, stride=stride)
                    m = rec.conditioned
                    ek = np.max(np.abs(rec.kappa - app.kappa)[m])
                    et = np.max(np.abs(np.abs(rec.tau) - np.abs(app.tau))[m])
                    print(f"{name:28s} {label:12s} {n:5d} {stride:6d} {ek:13.2e} {et:13.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main(parse_into(Config, __doc__)))
