"""Run every correspondence theorem on every catalog donor and admissible
partner; print a table and write the reports as JSON."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass

from _common import DONORS, donor, parse_into, specs

from lorentz_partners.characterization import TOL_CONST_SUITE, theorem_suite
from lorentz_partners.errors import DegenerateKappaBarError
from lorentz_partners.export import report_json


@dataclass(frozen=True)
class Config:
    n: int = 2000
    tol_const: float = TOL_CONST_SUITE
    out: str = "theorem_suite.json"


def main(cfg: Config) -> int:
    t0 = time.perf_counter()
    rows, failures = [], 0
    for name in DONORS:
        c, app = donor(name, cfg.n)
        for spec in specs(app.curve_type):
            param = spec.theta if spec.kind.value == "bertrand" else spec.c0
            try:
                reports = theorem_suite(c, spec, cfg.tol_const, donor_app=app)
            except DegenerateKappaBarError as exc:
                print(f"{name:28s} {spec.label:13s} {param:4}  degenerate partner: {exc}")
                continue
            for r in reports:
                failures += not r.passed
                spread = ", ".join(f"{k}={v:.1e}" for k, v in r.residuals.items() if v == v)
                print(f"{name:28s} {spec.label:13s} {param:4}  {r.theorem:34s} "
                      f"{'PASS' if r.passed else 'FAIL'}  {r.mode:14s} {spread}")
                rows.append({"donor": name, "spec": spec.label, "param": param, **r.as_dict()})
    elapsed = time.perf_counter() - t0
    with open(cfg.out, "w", encoding="utf-8") as fh:
        fh.write(report_json({"config": vars(cfg), "reports": rows, "failures": failures,
                              "runtime_s": elapsed}))
    print(f"\n{len(rows)} reports, {failures} failures, {elapsed:.1f} s -> {cfg.out}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main(parse_into(Config, __doc__)))
