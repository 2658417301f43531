import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from lorentz_partners.catalog import curve_catalog
from lorentz_partners.curve_model import (
    CurveSpec, UnitSpeedCurve, cumulative_integral, integral_curve,
    reparametrize_arclength, sample_curve,
)
from lorentz_partners.errors import GridTooSmall, LightlikeTangentError, NonUnitFieldError
from lorentz_partners.lorentz_core import CausalCharacter, causal_signs, minkowski_inner


def line(name, direction, domain=(0.0, 1.0)):
    d = np.asarray(direction, float)
    return CurveSpec(
        name, {}, domain,
        position=lambda t: np.outer(t, d),
        d1=lambda t: np.tile(d, (len(t), 1)),
        d2=lambda t: np.zeros((len(t), 3)),
        d3=lambda t: np.zeros((len(t), 3)),
    )


def test_sample_timelike_helix():
    c = sample_curve(curve_catalog("timelike_helix"), 200)
    assert len(c.grid) == 201
    assert np.all(causal_signs(c.derivs[0]) == -1)
    assert np.allclose(minkowski_inner(c.derivs[0], c.derivs[0]), -1, atol=1e-14)


def test_sample_spacelike_line_tangent():
    c = sample_curve(curve_catalog("spacelike_line"), 16)
    assert np.array_equal(c.derivs[0], np.tile([0.0, 1.0, 0.0], (17, 1)))


def test_lightlike_tangent_rejected():
    with pytest.raises(LightlikeTangentError):
        sample_curve(line("null", (1, 1, 0)), 20)

    # crosses the light cone mid-domain
    bad = CurveSpec("cross", {}, (0.0, 2.0),
                    position=lambda t: np.stack([t, t**2 / 2, 0 * t], -1),
                    d1=lambda t: np.stack([np.ones_like(t), t, 0 * t], -1),
                    d2=lambda t: np.stack([0 * t, np.ones_like(t), 0 * t], -1),
                    d3=lambda t: np.zeros((len(t), 3)))
    with pytest.raises(LightlikeTangentError):
        sample_curve(bad, 40)


def test_grid_too_small():
    with pytest.raises(GridTooSmall):
        sample_curve(curve_catalog("timelike_helix"), 15)


def test_unit_speed_input_keeps_grid():
    c = sample_curve(curve_catalog("timelike_helix"), 400)
    u = reparametrize_arclength(c)
    assert np.max(np.abs(u.s - c.grid)) < 1e-10
    assert u.character is CausalCharacter.TIMELIKE and u.tier == "analytic"


def test_line_lengths():
    u = reparametrize_arclength(sample_curve(line("l2", (0, 2, 0)), 64))
    assert abs(u.s[-1] - 2.0) < 1e-10
    u = reparametrize_arclength(sample_curve(line("l7", (1, 2, 2)), 64))
    assert abs(u.s[-1] - math.sqrt(7)) < 1e-8


def test_nonuniform_speed_against_quad():
    # (t, t^2, 0): spacelike for t > 1, speed sqrt(4t^2 - 1)
    spec = CurveSpec("parab", {}, (1.0, 3.0),
                     position=lambda t: np.stack([t, t**2, 0 * t], -1),
                     d1=lambda t: np.stack([np.ones_like(t), 2 * t, 0 * t], -1),
                     d2=lambda t: np.stack([0 * t, 2 + 0 * t, 0 * t], -1),
                     d3=lambda t: np.zeros((len(t), 3)))
    u = reparametrize_arclength(sample_curve(spec, 400))
    total, _ = quad(lambda t: math.sqrt(4 * t * t - 1), 1.0, 3.0, epsabs=1e-13)
    assert abs((u.s[-1] - u.s[0]) - total) < 1e-8
    # unit speed on the new grid, and x1 = t(s) inverts s(t) at an interior node
    assert np.max(np.abs(minkowski_inner(u.derivs[0], u.derivs[0]) - 1)) < 1e-10
    k = 137
    s_k, _ = quad(lambda t: math.sqrt(4 * t * t - 1), 1.0, u.positions[k, 0], epsabs=1e-13)
    assert abs(s_k + 1.0 - u.s[k]) < 1e-9


def test_cumulative_integral_examples():
    s = np.linspace(0, 1, 11)
    assert abs(cumulative_integral(np.ones_like(s), 0, s[1])[-1] - 1) < 1e-12
    s = np.linspace(0, math.pi / 2, 201)
    assert abs(cumulative_integral(np.cos(s), 0, s[1])[-1] - 1) < 1e-8
    assert cumulative_integral(np.cos(s), 5.0, s[1])[0] == 5.0


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(-3, 3), min_size=4, max_size=4), st.integers(3, 40))
def test_cumulative_integral_exact_on_cubics(coef, n):
    # Simpson and 3/8 are exact for cubics at every prefix, odd or even
    s = np.linspace(0.0, 1.7, n + 1)
    p = np.polynomial.Polynomial(coef)
    got = cumulative_integral(p(s), 0.0, s[1])
    want = p.integ()(s) - p.integ()(0.0)
    assert np.allclose(got, want, atol=1e-11 * max(1, np.max(np.abs(want))))


def test_cumulative_integral_fourth_order_on_every_node():
    errs = []
    for n in (40, 80, 160):
        s = np.linspace(0, 2, n + 1)
        errs.append(np.max(np.abs(cumulative_integral(np.exp(s), 0, s[1]) - (np.exp(s) - 1))))
    assert np.log2(errs[0] / errs[1]) > 3.7 and np.log2(errs[1] / errs[2]) > 3.7


def test_integral_curve_straight_line():
    s = np.linspace(0, 2, 21)
    b = integral_curve(np.tile([0.0, 1.0, 0.0], (21, 1)), np.zeros(3), s)
    assert np.max(np.abs(b.positions[-1] - [0, 2, 0])) < 1e-12
    assert b.tier == "finite_difference"


def test_integral_curve_of_tangent_reproduces_curve(load):
    c, app = load("timelike_helix")
    b = integral_curve(app.T, c.positions[0], c.s)
    assert np.max(np.abs(b.positions - c.positions)) < 1e-8


def test_principal_direction_curve(load):
    c, app = load("timelike_helix")
    b = integral_curve(app.N, np.zeros(3), c.s)
    assert np.max(np.abs(b.tangent - app.N)) < 1e-10
    assert b.character is CausalCharacter.SPACELIKE


def test_integral_curve_rejects_non_unit():
    s = np.linspace(0, 1, 20)
    with pytest.raises(NonUnitFieldError):
        integral_curve(np.tile([0.0, 1.1, 0.0], (20, 1)), np.zeros(3), s)


def test_from_positions_fd_tier(load):
    c, _ = load("timelike_helix")
    u = UnitSpeedCurve.from_positions(c.s, c.positions)
    assert u.tier == "finite_difference"
    assert np.max(np.abs(u.derivs[0][2:-2] - c.derivs[0][2:-2])) < 1e-9
