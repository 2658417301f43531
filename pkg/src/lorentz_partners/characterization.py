"""Helix, slant-helix and plane-curve predicates, and the correspondence
theorems between a donor and its partner curves as executable checks.

"Constant function" is operationalized through :class:`ConstancyVerdict`:
``rel_spread = max|v - mean| / max(1, |mean|)`` over checked nodes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import stencils
from .curve_model import UnitSpeedCurve
from .direction_curves import (
    PartnerKind,
    PartnerSpec,
    construct_partner,
    law_id,
    recover_donor_curvatures,
)
from .errors import DegenerateKappaError, NoApplicableVariantError
from .frenet import DEFAULT_KAPPA_MIN, FrenetApparatus, frenet_apparatus

TOL_CONST_ANALYTIC = 1e-4
TOL_CONST_FD = 1e-2
#: tolerance used by the theorem suite on both donor and partner predicates
TOL_CONST_SUITE = 1e-3
TOL_PLANE = 1e-8

#: slant-helix variants, keyed by the radicand under the 3/2 power
SLANT_VARIANTS = ("tau2_minus_kappa2", "kappa2_minus_tau2", "kappa2_plus_tau2")


@dataclass(frozen=True)
class ConstancyVerdict:
    values: np.ndarray
    mean: float
    rel_spread: float
    is_constant: bool
    tol: float
    mask: Optional[np.ndarray] = None
    variant: str = ""

    def as_dict(self) -> dict:
        return {
            "variant": self.variant,
            "mean": _num(self.mean),
            "rel_spread": _num(self.rel_spread),
            "is_constant": self.is_constant,
            "tol": self.tol,
        }


def _num(x):
    x = float(x)
    return x if np.isfinite(x) else None


def _segments(mask: np.ndarray) -> list[tuple[int, int]]:
    edges = np.flatnonzero(np.diff(np.concatenate([[0], mask.astype(int), [0]])))
    return list(zip(edges[::2], edges[1::2]))


def align_segments(values: np.ndarray, mask: np.ndarray) -> np.ndarray:
    """Flip the sign of each masked segment after the first so its median
    agrees with the first segment's.

    Partner normals may reverse across excised zones, which reverses the sign
    of orientation-dependent quantities segment by segment.
    """
    out = np.array(values, dtype=float)
    segs = _segments(mask)
    if len(segs) < 2:
        return out
    ref = np.sign(np.median(out[segs[0][0]:segs[0][1]])) or 1.0
    for a, b in segs[1:]:
        if np.sign(np.median(out[a:b])) == -ref:
            out[a:b] = -out[a:b]
    return out


def constancy(values, mask=None, tol: float = TOL_CONST_SUITE, variant: str = "") -> ConstancyVerdict:
    values = np.asarray(values, dtype=float)
    mask = np.ones(len(values), bool) if mask is None else np.asarray(mask, bool)
    mask = mask & np.isfinite(values)
    if not mask.any():
        return ConstancyVerdict(values, float("nan"), float("nan"), False, tol, mask, variant)
    v = align_segments(values, mask)
    sel = v[mask]
    # shifted mean: exact for constant input
    mean = float(sel[0] + np.mean(sel - sel[0]))
    spread = float(np.max(np.abs(sel - mean)) / max(1.0, abs(mean)))
    return ConstancyVerdict(v, mean, spread, spread < tol, tol, mask, variant)


def default_tol_const(app: FrenetApparatus) -> float:
    return TOL_CONST_ANALYTIC if app.tier == "analytic" else TOL_CONST_FD


def _checked(app: FrenetApparatus, kappa_min: float) -> np.ndarray:
    mask = app.check_mask()
    if np.any(mask & ~(app.kappa > kappa_min)):
        raise DegenerateKappaError("curvature vanishes on checked nodes")
    return mask


def helix_ratio(kappa, tau, mask, tol: float) -> ConstancyVerdict:
    with np.errstate(divide="ignore", invalid="ignore"):
        return constancy(np.asarray(tau) / np.asarray(kappa), mask, tol, "tau/kappa")


def helix_invariant(app: FrenetApparatus, tol: Optional[float] = None,
                    kappa_min: float = DEFAULT_KAPPA_MIN) -> ConstancyVerdict:
    """Constancy of ``tau / kappa`` over interior, non-excised nodes.

    Plane curves give the constant 0 and count as degenerate helices here.
    """
    tol = default_tol_const(app) if tol is None else tol
    return helix_ratio(app.kappa, app.tau, _checked(app, kappa_min), tol)


def slant_radicands(kappa, tau) -> dict[str, np.ndarray]:
    k2, t2 = np.asarray(kappa) ** 2, np.asarray(tau) ** 2
    return {
        "tau2_minus_kappa2": t2 - k2,
        "kappa2_minus_tau2": k2 - t2,
        "kappa2_plus_tau2": k2 + t2,
    }


def slant_values(kappa, tau, h: float) -> dict[str, np.ndarray]:
    """``kappa^2 (tau/kappa)' / rad^{3/2}`` for every variant, NaN where the
    radicand is not positive. Uses ``kappa^2 (tau/kappa)' = kappa tau' - kappa' tau``."""
    kappa, tau = np.asarray(kappa, float), np.asarray(tau, float)
    num = kappa * stencils.d1(tau, h) - stencils.d1(kappa, h) * tau
    out = {}
    with np.errstate(invalid="ignore", divide="ignore"):
        for name, rad in slant_radicands(kappa, tau).items():
            out[name] = np.where(rad > 0, num / np.abs(rad) ** 1.5, np.nan)
    return out


def slant_helix_variants(kappa, tau, h, mask, tol: float, rad_floor: float = 1e-10) -> dict[str, ConstancyVerdict]:
    """Verdicts for every variant whose radicand stays positive on ``mask``.

    The derivative of tau/kappa is one stencil deeper than kappa and tau, so
    ``mask`` is eroded by one more stencil half-width.
    """
    mask = ~stencils.dilate(~np.asarray(mask, bool), stencils.BOUNDARY)
    vals = slant_values(kappa, tau, h)
    rads = slant_radicands(kappa, tau)
    out = {}
    for name in SLANT_VARIANTS:
        if np.all(rads[name][mask] > rad_floor):
            out[name] = constancy(vals[name], mask, tol, name)
    if not out:
        raise NoApplicableVariantError("every slant-helix radicand changes sign or vanishes on the grid")
    return out


def slant_helix_invariant(app: FrenetApparatus, tol: Optional[float] = None,
                          kappa_min: float = DEFAULT_KAPPA_MIN) -> dict[str, ConstancyVerdict]:
    tol = default_tol_const(app) if tol is None else tol
    mask = _checked(app, kappa_min)
    with np.errstate(invalid="ignore"):
        return slant_helix_variants(app.kappa, app.tau, app.h, mask, tol)


def is_slant_helix(verdicts: dict[str, ConstancyVerdict]) -> bool:
    return any(v.is_constant for v in verdicts.values())


def is_plane_curve(app: FrenetApparatus, tol: float = TOL_PLANE) -> bool:
    mask = app.check_mask()
    t = app.tau[mask]
    return bool(np.all(np.abs(t[np.isfinite(t)]) < tol))


# --- theorem suite -----------------------------------------------------------

@dataclass
class TheoremReport:
    """One correspondence theorem evaluated on a donor/partner pair.

    ``hypothesis`` and ``conclusion`` hold the predicate values on each side.
    ``mode`` is "direct" when the hypothesis holds (the conclusion must then
    hold with residuals below tolerance) and "contrapositive" when it does not
    (the conclusion must then fail too).
    """

    theorem: str
    statement: str
    hypothesis: dict
    conclusion: dict
    residuals: dict
    mode: str
    passed: bool
    converse: dict = field(default_factory=dict)
    notes: str = ""

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "statement": self.statement,
            "hypothesis": self.hypothesis,
            "conclusion": self.conclusion,
            "residuals": {k: _num(v) for k, v in self.residuals.items()},
            "mode": self.mode,
            "converse": self.converse,
            "pass": self.passed,
            "notes": self.notes,
        }


@dataclass
class _Sides:
    donor: UnitSpeedCurve
    dapp: FrenetApparatus
    spec: PartnerSpec
    papp: FrenetApparatus
    tol: float

    @property
    def dmask(self):
        return _checked(self.dapp, DEFAULT_KAPPA_MIN)

    @property
    def pmask(self):
        return self.papp.check_mask()


def _helix_pred(kappa, tau, mask, tol):
    v = helix_ratio(kappa, tau, mask, tol)
    return v.is_constant, v


def _slant_pred(kappa, tau, h, mask, tol):
    try:
        vs = slant_helix_variants(kappa, tau, h, mask, tol)
    except NoApplicableVariantError:
        return False, {}
    return is_slant_helix(vs), vs


def _best(vs: dict) -> tuple[str, float]:
    if not vs:
        return "", float("nan")
    name = min(vs, key=lambda k: vs[k].rel_spread)
    return name, vs[name].rel_spread


def _biconditional(theorem, statement, hyp_name, hyp_ok, hyp_res, concl_name, concl_ok, concl_res, notes=""):
    mode = "direct" if hyp_ok else "contrapositive"
    return TheoremReport(
        theorem=theorem,
        statement=statement,
        hypothesis={hyp_name: hyp_ok},
        conclusion={concl_name: concl_ok},
        residuals={hyp_name: hyp_res, concl_name: concl_res},
        mode=mode,
        passed=bool(hyp_ok == concl_ok),
        notes=notes,
    )


def _recovered_helix(sides: _Sides) -> tuple[bool, float]:
    # partner data only: the Bertrand normal orientation is left at +1, which
    # can flip the recovered pair but not the constancy of its ratio
    rec = recover_donor_curvatures(sides.papp, sides.spec, sides.dapp.curve_type)
    tau = np.abs(rec.tau)
    ok, v = _helix_pred(rec.kappa, tau, rec.mask, sides.tol)
    return ok, v.rel_spread


def _converse(hyp_ok: bool, sides: _Sides, partner_ok: bool) -> dict:
    """Run the donor predicate on curvatures recovered from the partner alone."""
    ok, spread = _recovered_helix(sides)
    return {"recovered_donor_helix": ok, "recovered_rel_spread": _num(spread),
            "pass": bool(ok == partner_ok == hyp_ok)}


def _evolute_reports(s: _Sides) -> list[TheoremReport]:
    d, p = s.dapp, s.papp
    helix_ok, hv = _helix_pred(d.kappa, d.tau, s.dmask, s.tol)
    slant_ok, svs = _slant_pred(p.kappa, p.tau, p.h, s.pmask, s.tol)
    variant, spread = _best(svs)
    r33 = _biconditional(
        "evolute_of_helix_is_slant_helix",
        "donor is a helix iff its evolute-direction curve is a slant helix",
        "donor_helix", helix_ok, hv.rel_spread, "partner_slant_helix", slant_ok, spread,
        notes=f"variant {variant}" if variant else "no applicable variant",
    )
    r33.converse = _converse(helix_ok, s, slant_ok)
    r33.passed = r33.passed and r33.converse["pass"]

    plane_ok = is_plane_curve(d)
    ph_ok, pv = _helix_pred(p.kappa, p.tau, s.pmask, s.tol)
    r34 = _biconditional(
        "evolute_of_plane_curve_is_helix",
        "donor is a plane curve iff its evolute-direction curve is a helix",
        "donor_plane", plane_ok, float(np.max(np.abs(d.tau[s.dmask]))), "partner_helix", ph_ok, pv.rel_spread,
        notes="partner torsion vanishes: degenerate helix" if plane_ok and is_plane_curve(p, 1e-6) else "",
    )
    return [r33, r34]


def _mannheim_reports(s: _Sides) -> list[TheoremReport]:
    d, p = s.dapp, s.papp
    helix_ok, hv = _helix_pred(d.kappa, d.tau, s.dmask, s.tol)
    slant_ok, svs = _slant_pred(p.kappa, p.tau, p.h, s.pmask, s.tol)
    variant, spread = _best(svs)
    r = _biconditional(
        "mannheim_of_helix_is_slant_helix",
        "donor is a helix iff its Mannheim-direction curve is a slant helix",
        "donor_helix", helix_ok, hv.rel_spread, "partner_slant_helix", slant_ok, spread,
        notes=f"variant {variant}" if variant else "no applicable variant",
    )
    r.converse = _converse(helix_ok, s, slant_ok)
    r.passed = r.passed and r.converse["pass"]
    return [r]


#: radicand family preserved by each Bertrand law
def _preserved_variants(law: str) -> tuple[str, ...]:
    if law.startswith("bertrand_iii"):
        return ("kappa2_plus_tau2",)
    return ("kappa2_minus_tau2", "tau2_minus_kappa2")


def planarizing_theta(kappa: float, tau: float, law: str) -> Optional[float]:
    """Angle making the Bertrand partner of a helix a plane curve, if any."""
    r = {
        "bertrand_i_timelike": tau / kappa,
        "bertrand_ii_timelike": kappa / tau if tau else np.inf,
        "bertrand_i_spacelike_type2": -tau / kappa,
        "bertrand_ii_spacelike_type2": -kappa / tau if tau else np.inf,
    }
    if law == "bertrand_iii_spacelike_type1":
        return float(np.arctan(tau / kappa))
    x = r[law]
    return float(np.arctanh(x)) if abs(x) < 1 else None


def _bertrand_reports(s: _Sides, kw: dict) -> list[TheoremReport]:
    d, p = s.dapp, s.papp
    law = law_id(s.spec, d.curve_type)
    helix_ok, hv = _helix_pred(d.kappa, d.tau, s.dmask, s.tol)
    ph_ok, pv = _helix_pred(p.kappa, p.tau, s.pmask, s.tol)
    r53 = _biconditional(
        "bertrand_preserves_helix",
        "donor is a helix iff its Bertrand-direction curve is a helix",
        "donor_helix", helix_ok, hv.rel_spread, "partner_helix", ph_ok, pv.rel_spread,
    )
    r53.converse = _converse(helix_ok, s, ph_ok)
    r53.passed = r53.passed and r53.converse["pass"]

    # plane donor => helix partner; the reverse implication is exercised by
    # building a planar partner from a helix donor
    plane_ok = is_plane_curve(d)
    r54 = TheoremReport(
        theorem="bertrand_of_plane_curve_is_helix",
        statement="plane donor gives a helix partner; plane partner forces a helix donor",
        hypothesis={"donor_plane": plane_ok},
        conclusion={"partner_helix": ph_ok},
        residuals={"partner_helix": pv.rel_spread},
        mode="direct" if plane_ok else "not_applicable",
        passed=ph_ok if plane_ok else True,
    )
    if helix_ok and not plane_ok:
        k0, t0 = float(np.median(d.kappa)), float(np.median(d.tau))
        theta = planarizing_theta(k0, t0, law)
        if theta is None:
            r54.converse = {"applicable": False, "reason": f"no real angle planarizes {law}"}
        else:
            spec2 = PartnerSpec(s.spec.kind, s.spec.case, theta=theta, base=s.spec.base)
            _, papp2 = construct_partner(s.donor, spec2, d, **kw)
            flat = float(np.nanmax(np.abs(papp2.tau[papp2.check_mask()])))
            sides2 = _Sides(s.donor, d, spec2, papp2, s.tol)
            rec_ok, rec_spread = _recovered_helix(sides2)
            ok = flat < 1e-6 and rec_ok
            r54.converse = {"applicable": True, "theta": theta, "partner_max_abs_tau": flat,
                            "recovered_donor_helix": rec_ok, "recovered_rel_spread": _num(rec_spread),
                            "pass": ok}
            r54.passed = r54.passed and ok
            if r54.mode == "not_applicable":
                r54.mode = "converse"

    dslant, dvs = _slant_pred(d.kappa, d.tau, d.h, s.dmask, s.tol)
    pslant, pvs = _slant_pred(p.kappa, p.tau, p.h, s.pmask, s.tol)
    r55 = _biconditional(
        "bertrand_preserves_slant_helix",
        "donor is a slant helix iff its Bertrand-direction curve is a slant helix",
        "donor_slant_helix", dslant, _best(dvs)[1], "partner_slant_helix", pslant, _best(pvs)[1],
    )
    # pointwise identity of the preserved invariant, up to overall sign
    mask = ~stencils.dilate(~(s.pmask & s.dmask), stencils.BOUNDARY)
    for name in _preserved_variants(law):
        if name in dvs and name in pvs:
            a = constancy(pvs[name].values, mask).values
            b = constancy(dvs[name].values, mask).values
            diff = min(np.nanmax(np.abs(a - b)[mask]), np.nanmax(np.abs(a + b)[mask]))
            r55.residuals[f"identity_{name}"] = float(diff)
            r55.passed = r55.passed and diff < s.tol
            r55.notes = f"preserved invariant {name} compared pointwise"
            break
    else:
        r55.notes = "preserved invariant not sign-definite on the grid; identity not checked"
    return [r53, r54, r55]


def theorem_suite(
    donor: UnitSpeedCurve,
    spec: PartnerSpec,
    tol_const: float = TOL_CONST_SUITE,
    donor_app: Optional[FrenetApparatus] = None,
    partner_app: Optional[FrenetApparatus] = None,
    **kw,
) -> list[TheoremReport]:
    """Evaluate the correspondence theorems for ``spec`` on ``donor``.

    Each report compares the donor-side predicate with the partner-side one.
    Where the theorem is an equivalence, a matching pair of verdicts passes in
    either direction, and a converse check re-derives the donor predicate from
    curvatures recovered from the partner alone.
    """
    dapp = frenet_apparatus(donor) if donor_app is None else donor_app
    if partner_app is None:
        _, partner_app = construct_partner(donor, spec, dapp, **kw)
    sides = _Sides(donor, dapp, spec, partner_app, tol_const)
    if spec.kind is PartnerKind.EVOLUTE:
        return _evolute_reports(sides)
    if spec.kind is PartnerKind.MANNHEIM:
        return _mannheim_reports(sides)
    return _bertrand_reports(sides, kw)


def classify(app: FrenetApparatus, tol: Optional[float] = None, tol_plane: float = TOL_PLANE) -> dict:
    """Helix / slant-helix / plane verdicts for a single curve."""
    tol = default_tol_const(app) if tol is None else tol
    hv = helix_invariant(app, tol)
    try:
        svs = slant_helix_invariant(app, tol)
    except NoApplicableVariantError:
        svs = {}
    return {
        "curve_type": app.curve_type.label,
        "plane": is_plane_curve(app, tol_plane),
        "helix": hv.is_constant,
        "helix_invariant": hv.as_dict(),
        "slant_helix": is_slant_helix(svs),
        "slant_helix_variants": {k: v.as_dict() for k, v in svs.items()},
    }
