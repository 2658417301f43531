"""Command line front end: ``lpc <subcommand> ...``.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
3 numerical or I/O error.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .catalog import CATALOG, curve_catalog
from .characterization import classify, theorem_suite
from .config import RunConfig, Tolerances
from .curve_model import UnitSpeedCurve, reparametrize_arclength, sample_curve
from .direction_curves import CASES, Check, PartnerKind, PartnerSpec, construct_partner, verify_partner_relation
from .errors import LorentzCurveError, UsageError
from .export import PLANES, writable, csv_text, export_csv, export_report_json, export_svg, report_json
from .frenet import FrenetApparatus, check_frenet_equations, frenet_apparatus

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


def _param(text: str) -> tuple[str, float]:
    key, sep, val = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    try:
        return key.strip(), float(val)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{key}: {val!r} is not a number") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lpc", description="Frenet apparatus and partner curves in Minkowski 3-space.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("catalog", help="list built-in curves and their parameters")

    def curve_args(sp, partner: bool, kind_required: bool = False):
        sp.add_argument("--curve", required=True)
        sp.add_argument("--param", type=_param, action="append", default=[], metavar="KEY=VALUE")
        sp.add_argument("--n", type=int, default=2000, help="grid intervals (nodes - 1)")
        if partner:
            sp.add_argument("--kind", choices=[k.value for k in PartnerKind], required=kind_required)
            sp.add_argument("--case", choices=CASES, default="i")
            sp.add_argument("--c0", type=float, default=0.0)
            sp.add_argument("--theta", type=float, default=0.0)
        sp.add_argument("--out", default=None)

    curve_args(sub.add_parser("frenet", help="Frenet apparatus as CSV"), partner=False)
    curve_args(sub.add_parser("partner", help="donor and partner CSV"), partner=True, kind_required=True)
    v = sub.add_parser("verify", help="run all checks, write a JSON report")
    curve_args(v, partner=True)
    v.add_argument("--inject-corrupt-frame", action="store_true",
                   help="swap N and B before the Frenet check (self-test of the failure path)")
    curve_args(sub.add_parser("classify", help="helix / slant helix / plane verdicts"), partner=False)
    pl = sub.add_parser("plot", help="SVG projection of donor and optional partner")
    curve_args(pl, partner=True)
    pl.add_argument("--plane", choices=sorted(PLANES), default="x2x3")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        curve=ns.curve,
        params=dict(ns.param),
        n=ns.n,
        kind=getattr(ns, "kind", None),
        case=getattr(ns, "case", "i"),
        c0=getattr(ns, "c0", 0.0),
        theta=getattr(ns, "theta", 0.0),
        tolerances=Tolerances.from_env(),
        out=ns.out,
        plane=getattr(ns, "plane", "x2x3"),
    )


def load_donor(cfg: RunConfig) -> tuple[UnitSpeedCurve, FrenetApparatus]:
    spec = curve_catalog(cfg.curve, cfg.params)
    tol = cfg.tolerances
    curve = reparametrize_arclength(sample_curve(spec, cfg.n, tol.null), tol_null=tol.null)
    return curve, frenet_apparatus(curve, kappa_min=tol.kappa_min, tol_null=tol.null)


def partner_spec(cfg: RunConfig) -> PartnerSpec:
    return PartnerSpec(cfg.kind, cfg.case, c0=cfg.c0, theta=cfg.theta)


def _partner(cfg, curve, app):
    tol = cfg.tolerances
    spec = partner_spec(cfg)
    beta, bapp = construct_partner(curve, spec, app, kappa_min=tol.kappa_min,
                                   excise_rel=tol.excise_rel, tol_unit=tol.unit)
    return spec, beta, bapp


def frenet_checks(app: FrenetApparatus, tol: Tolerances) -> list[Check]:
    rep = check_frenet_equations(app, tol.frenet, tol.frame)
    rows = ("T' = kappa N", "N' = eps_B kappa T + tau B", "B' = eps_T tau N")
    checks = [Check(f"frenet_eq_row{i + 1}", rel, m, tol.frenet,
                    notes=f"boundary max {b:.3e} (not gated)")
              for i, (rel, m, b) in enumerate(zip(rows, rep.row_max, rep.boundary_max))]
    checks.append(Check("frame_orthonormality", "<T,T>=eps_T, <N,N>=eps_N, <B,B>=eps_B, B = eps_T eps_N T x N",
                        rep.orthonormality_max, tol.frame))
    return checks


def corrupt_frame(app: FrenetApparatus) -> FrenetApparatus:
    return dataclasses.replace(app, N=app.B.copy(), B=app.N.copy())


def _emit_text(text: str, out: Optional[str]) -> None:
    if out:
        with writable(out) as p:
            p.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_catalog(ns) -> int:
    entries = []
    for name, e in sorted(CATALOG.items()):
        entries.append({
            "name": name,
            "expected_type": e.expected_type.label if e.expected_type else None,
            "description": e.description,
            "params": {k: {"default": p.default, "lo": p.lo, "hi": p.hi, "doc": p.doc}
                       for k, p in e.schema.items()},
        })
    sys.stdout.write(json.dumps(entries, indent=2, default=str) + "\n")
    return EXIT_PASS


def cmd_frenet(ns) -> int:
    cfg = config_from_args(ns)
    curve, app = load_donor(cfg)
    if cfg.out:
        export_csv(curve, app, cfg.out)
    else:
        sys.stdout.write(csv_text(curve, app))
    return EXIT_PASS


def cmd_partner(ns) -> int:
    cfg = config_from_args(ns)
    curve, app = load_donor(cfg)
    spec, beta, bapp = _partner(cfg, curve, app)
    out = Path(cfg.out or ".")
    out.mkdir(parents=True, exist_ok=True)
    export_csv(curve, app, out / "alpha.csv")
    export_csv(beta, bapp, out / "beta.csv")
    sys.stderr.write(f"wrote {out / 'alpha.csv'} and {out / 'beta.csv'} "
                     f"(partner {bapp.curve_type.label}, {bapp.excision_summary()['excised_nodes']} excised nodes)\n")
    return EXIT_PASS


def build_verify_report(cfg: RunConfig, inject_corrupt: bool = False) -> dict:
    tol = cfg.tolerances
    curve, app = load_donor(cfg)
    checks = frenet_checks(corrupt_frame(app) if inject_corrupt else app, tol)
    verdicts: dict = {"donor": classify(app, tol.const, tol.plane)}
    theorems = []
    if cfg.kind:
        spec, beta, bapp = _partner(cfg, curve, app)
        rep = verify_partner_relation(app, bapp, spec, tol=tol.partner, tol_tau=tol.tau_bar,
                                      fld=beta.meta["field"], tol_unit=tol.unit)
        checks += rep.checks
        verdicts["partner"] = rep.verdicts
        verdicts["excision"] = rep.excision
        theorems = [t.as_dict() for t in theorem_suite(curve, spec, tol.const, app, bapp,
                                                       kappa_min=tol.kappa_min, excise_rel=tol.excise_rel,
                                                       tol_unit=tol.unit)]
    ok = all(c.passed for c in checks) and all(t["pass"] for t in theorems)
    return {
        "config": cfg.echo(),
        "checks": [c.as_dict() for c in checks],
        "theorems": theorems,
        "verdicts": verdicts,
        "pass": ok,
    }


def cmd_verify(ns) -> int:
    cfg = config_from_args(ns)
    report = build_verify_report(cfg, ns.inject_corrupt_frame)
    if cfg.out:
        export_report_json(report, cfg.out)
    else:
        sys.stdout.write(report_json(report))
    for c in report["checks"]:
        if not c["pass"]:
            sys.stderr.write(f"FAIL {c['id']}: {c['max_residual']} >= {c['tolerance']}\n")
    for t in report["theorems"]:
        if not t["pass"]:
            sys.stderr.write(f"FAIL {t['theorem']}\n")
    return EXIT_PASS if report["pass"] else EXIT_FAIL


def cmd_classify(ns) -> int:
    cfg = config_from_args(ns)
    _, app = load_donor(cfg)
    verdicts = classify(app, cfg.tolerances.const, cfg.tolerances.plane)
    _emit_text(report_json({"config": cfg.echo(), "verdicts": verdicts}), cfg.out)
    return EXIT_PASS


def cmd_plot(ns) -> int:
    cfg = config_from_args(ns)
    curve, app = load_donor(cfg)
    curves = [(cfg.curve, curve.positions, "donor")]
    if cfg.kind:
        spec, beta, _ = _partner(cfg, curve, app)
        curves.append((spec.label, beta.positions, "partner"))
    export_svg(curves, cfg.out or f"{cfg.curve}_{cfg.plane}.svg", cfg.plane)
    return EXIT_PASS


COMMANDS = {
    "catalog": cmd_catalog,
    "frenet": cmd_frenet,
    "partner": cmd_partner,
    "verify": cmd_verify,
    "classify": cmd_classify,
    "plot": cmd_plot,
}


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    try:
        ns = build_parser().parse_args(argv)
        return COMMANDS[ns.command](ns)
    except LorentzCurveError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return exc.exit_code
    except OSError as exc:
        sys.stderr.write(f"error: I/O: {exc}\n")
        return EXIT_NUMERIC
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
