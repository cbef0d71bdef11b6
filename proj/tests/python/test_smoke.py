import json
import math

import pytest

import earring


def test_normalize_folds_into_the_domain():
    g, t = earring.normalize(-1.0, -2.0)
    assert (g, t) == pytest.approx((1.0, 2.0))


def test_sigma_hat_solves_the_rescaled_system():
    g, t = 1.1, 2.3
    nu = math.atan2(-math.sin(g), math.sin(t))
    h = (0.0, -math.sin(nu), math.cos(nu))  # e^{nu i} k
    h2, h3 = earring.eval_H(g, t, h, 0.0)
    assert abs(h2) < 1e-12 and abs(h3) < 1e-12


def test_fiber_is_two_points_away_from_corners():
    assert len(earring.solve_fiber(math.pi / 2, math.pi / 3, 0.19)) == 2


def test_empty_fiber_near_a_corner_raises():
    with pytest.raises(earring.NumericalError):
        earring.solve_fiber(0.157, 0.314, 0.19)


def test_corner_gap():
    assert earring.corner_system_gap(0.19) == pytest.approx(0.19, rel=1e-6)


def test_composed_arc_is_a_figure_eight():
    a = earring.slope_arc(1, 1)
    c = earring.compose_curve(a, 0.19)
    assert len(c.components) == 1
    v = earring.classify_fig8(c.components, a)
    assert v["is_homology_fig8"]
    assert v["beta"] == {"algebraic": 0, "geometric": 2}
    assert earring.pairing(c, earring.slope_arc(1, 0)) == 1


def test_loop_doubles():
    L = earring.circle((math.pi / 2, math.pi / 2), 0.5)
    c = earring.compose_curve(L, 0.02)
    assert len(c.components) == 2
    assert max(earring.hausdorff(x, L) for x in c.components) < 0.1


def test_curve_json_round_trip():
    a = earring.slope_arc(3, 1)
    b = earring.curve_from_json(a.to_json())
    assert b.corners == (0, 3)
    assert json.loads(b.to_json())["kind"] == "arc"


def test_algebra_pipeline():
    assert earring.mul("S1", "S2") == "S1S2"
    assert earring.mul("D2", "S1") == "0"
    t3 = earring.t3_complex()
    assert earring.mc_check(t3)
    r = earring.reduce(earring.functor_II(t3))
    assert earring.mc_check(r)
    assert r.count("->") == 8
    assert earring.curve_to_complex(earring.slope_arc(3, 1)) == t3
    loop = earring.complex_to_curve(earring.fig8_complex())
    assert not loop.is_arc
    assert earring.same_up_to_relabeling(earring.curve_to_complex(loop), earring.fig8_complex())


def test_algebra_errors():
    with pytest.raises(earring.IoError):
        earring.mc_check("g1 = a•\ng1 -> g2 : D1\n")
    with pytest.raises(earring.TopLeftCornerHit):
        earring.curve_to_complex(earring.slope_arc(0, 1))
