import math

import numpy as np
import pytest

from lorentz_partners.catalog import CATALOG, curve_catalog
from lorentz_partners.errors import ParamOutOfRangeError, UnknownCurveError
from lorentz_partners.frenet import CurveType

from conftest import DONORS


def test_covers_all_types():
    types = {CATALOG[n].expected_type for n in DONORS}
    assert types == set(CurveType)
    assert len(DONORS) >= 6


def test_timelike_helix_closed_form():
    spec = curve_catalog("timelike_helix", {"a": 1, "b": math.sqrt(2)})
    t = np.linspace(0, 3, 7)
    assert np.allclose(spec.position(t), np.stack([math.sqrt(2) * t, np.cos(t), np.sin(t)], -1))


def test_timelike_planar_in_plane():
    spec = curve_catalog("timelike_planar")
    t = np.linspace(*spec.domain, 9)
    assert np.all(spec.position(t)[:, 2] == 0)


def test_unknown_and_bad_params():
    with pytest.raises(UnknownCurveError):
        curve_catalog("nope")
    with pytest.raises(ParamOutOfRangeError):
        curve_catalog("timelike_helix", {"zzz": 1})
    with pytest.raises(ParamOutOfRangeError):
        curve_catalog("timelike_helix", {"a": 2, "b": 1})


def test_intrinsic_curves_hit_prescribed_curvatures(load):
    c, app = load("intrinsic_nonhelix")
    assert np.max(np.abs(app.kappa - 1)) < 1e-9
    assert np.max(np.abs(app.tau - c.s)) < 1e-9


@pytest.mark.parametrize("name", DONORS)
def test_derivatives_consistent_with_positions(name, load):
    # finite differences of the sampled positions agree with the analytic data
    c, _ = load(name)
    from lorentz_partners import stencils
    fd = stencils.d1(c.positions, c.h)
    assert np.max(np.abs(fd[2:-2] - c.derivs[0][2:-2])) < 1e-8
