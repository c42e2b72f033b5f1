import math

import pytest

from invmills import core, extremal
from invmills.types import SQRT_2_OVER_PI


def test_x_star_closed_form():
    assert abs(extremal.X_STAR - (math.pi - 1) * SQRT_2_OVER_PI) < 1e-15


def test_find_y_star_bracket():
    consts = extremal.find_y_star()
    lo, hi = consts.y_star_bracket
    assert hi - lo <= 1e-6
    assert lo <= consts.y_star <= hi
    assert 1.6267 < consts.y_star < 1.6268
    assert 0.6861 <= consts.s_at_y_star <= 0.6863


def test_y_star_is_stationary():
    consts = extremal.find_y_star()
    # at the minimizer the derivative ratio crosses the profile itself:
    # s'(y) = 0  <=>  pi*s1(y) = s(y)
    def gap(y):
        return math.pi * extremal.s1(y) - core.s_imaginary_axis_stable(y)

    assert abs(gap(consts.y_star)) < 1e-5
    assert gap(consts.y_star - 1e-2) * gap(consts.y_star + 1e-2) < 0
    # and the profile really is locally minimal there
    s_star = core.s_imaginary_axis_stable(consts.y_star)
    assert core.s_imaginary_axis_stable(consts.y_star - 0.05) > s_star
    assert core.s_imaginary_axis_stable(consts.y_star + 0.05) > s_star


def test_s2_turning_points():
    y21, y22 = extremal.s2_turning_points()
    assert 0.684 < y21 < 0.687
    assert 1.406 < y22 < 1.409
    assert abs(extremal.s2_prime(y21)) < 1e-10
    assert abs(extremal.s2_prime(y22)) < 1e-10


def test_s1_derivative_consistency():
    # s1' via closed form vs central difference of s1
    h = 1e-6
    for y in (0.3, 1.0, 2.0, 4.0):
        fd = (extremal.s1(y + h) - extremal.s1(y - h)) / (2 * h)
        assert abs(extremal.s1_prime(y) - fd) < 1e-8


def test_real_axis_ratio_minimum():
    x_star = extremal.X_STAR
    assert abs(extremal.real_axis_ratio_prime(x_star)) < 1e-15
    assert extremal.real_axis_ratio(x_star) < extremal.real_axis_ratio(x_star - 0.2)
    assert extremal.real_axis_ratio(x_star) < extremal.real_axis_ratio(x_star + 0.2)
    # h(0) = 1/b^2 = pi/2
    assert extremal.real_axis_ratio(0.0) == pytest.approx(math.pi / 2)


def test_s_profile_values():
    # s(y) = |S(iy)|^2 at the two reference ordinates
    assert 0.5525 < core.s_imaginary_axis_stable(1.0) < 0.5545
    assert 0.6695 < core.s_imaginary_axis_stable(3.0) < 0.6715


def test_golden_section_quadratic():
    lo, hi = extremal.golden_section(lambda t: (t - 1.3) ** 2, 0.0, 3.0, 1e-8)
    assert hi - lo <= 1e-8
    assert lo <= 1.3 <= hi


def test_vertical_min_sweep_ordering():
    minima = extremal.vertical_min_sweep([0.0, 1.0, 4.0])
    vals = [v for _, v in minima]
    assert vals[0] < vals[1] < vals[2]
    consts = extremal.find_y_star()
    assert abs(vals[0] - consts.s_at_y_star) < 1e-3


def test_vertical_min_sweep_validation():
    with pytest.raises(ValueError):
        extremal.vertical_min_sweep([2.0, 1.0])
    with pytest.raises(ValueError):
        extremal.vertical_min_sweep([0.0], y_range=0.5)  # window misses the dip
