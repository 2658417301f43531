"""Frenet apparatus and direction-type partner curves in Minkowski 3-space."""
from .catalog import CATALOG, curve_catalog
from .characterization import classify, helix_invariant, is_plane_curve, slant_helix_invariant, theorem_suite
from .curve_model import integral_curve, reparametrize_arclength, sample_curve
from .direction_curves import (
    PartnerKind,
    PartnerSpec,
    construct_partner,
    predicted_partner_curvatures,
    recover_donor_curvatures,
    verify_partner_relation,
)
from .frenet import CurveType, check_frenet_equations, frenet_apparatus
from .lorentz_core import minkowski_cross, minkowski_inner

__version__ = "0.1.0"

__all__ = [
    "CATALOG", "CurveType", "PartnerKind", "PartnerSpec", "check_frenet_equations", "classify",
    "construct_partner", "curve_catalog", "frenet_apparatus", "helix_invariant", "integral_curve",
    "is_plane_curve", "minkowski_cross", "minkowski_inner", "predicted_partner_curvatures",
    "recover_donor_curvatures", "reparametrize_arclength", "sample_curve", "slant_helix_invariant",
    "theorem_suite", "verify_partner_relation",
]
