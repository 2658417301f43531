"""SVG projections of each catalog helix with its partner curves."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from _common import donor, parse_into, specs

from lorentz_partners.direction_curves import construct_partner
from lorentz_partners.errors import DegenerateKappaBarError
from lorentz_partners.export import export_svg


@dataclass(frozen=True)
class Config:
    donors: tuple = ("timelike_helix", "spacelike_helix_type1", "spacelike_helix_type2", "timelike_planar")
    n: int = 800
    c0: float = 0.3
    theta: float = 0.7
    plane: str = "x2x3"
    out_dir: str = "gallery"


def main(cfg: Config) -> int:
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name in cfg.donors:
        c, app = donor(name, cfg.n)
        for spec in specs(app.curve_type, c0s=(cfg.c0,), thetas=(cfg.theta,)):
            try:
                beta, _ = construct_partner(c, spec, app)
            except DegenerateKappaBarError:
                continue
            path = out / f"{name}_{spec.label}_{cfg.plane}.svg"
            export_svg([(name, c.positions, "donor"), (spec.label, beta.positions, "partner")], path, cfg.plane)
            print(path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main(parse_into(Config, __doc__)))
