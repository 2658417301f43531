"""Torsion sign audit: measured partner torsion against each closed-form
transfer law, for every admissible (donor, kind, case).

"same" or "flipped" means the law holds with that sign on all checked nodes;
"mixed" means the sign relation changes along the curve (typically across an
excised inflection of the partner).
"""
from __future__ import annotations

import csv
from dataclasses import dataclass

from _common import DONORS, donor, parse_into, specs

from lorentz_partners.direction_curves import construct_partner, verify_partner_relation
from lorentz_partners.errors import DegenerateKappaBarError


@dataclass(frozen=True)
class Config:
    n: int = 2000
    out: str = "sign_audit.csv"


def main(cfg: Config) -> int:
    out = []
    for name in DONORS:
        c, app = donor(name, cfg.n)
        for spec in specs(app.curve_type):
            param = spec.theta if spec.kind.value == "bertrand" else spec.c0
            try:
                beta, bapp = construct_partner(c, spec, app)
            except DegenerateKappaBarError:
                out.append((name, spec.label, param, "", "degenerate", "", ""))
                continue
            rep = verify_partner_relation(app, bapp, spec, fld=beta.meta["field"])
            tau = rep.check("tau_bar_magnitude_match")
            out.append((name, spec.label, param, rep.verdicts["law"], rep.verdicts["tau_bar_sign"],
                        bapp.curve_type.label, f"{tau.max_residual:.2e}"))
    header = ("donor", "spec", "param", "law", "tau_bar_sign", "partner_type", "max_abs_tau_bar_error")
    with open(cfg.out, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(out)
    for row in out:
        print("  ".join(f"{x!s:<28}" if i == 0 else f"{x!s:<14}" for i, x in enumerate(row)))
    by_law: dict[str, set] = {}
    for _, _, _, law, sign, _, _ in out:
        if law:
            by_law.setdefault(law, set()).add(sign)
    print("\nper law:")
    for law, s in sorted(by_law.items()):
        print(f"  {law:32s} {'/'.join(sorted(s))}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main(parse_into(Config, __doc__)))
