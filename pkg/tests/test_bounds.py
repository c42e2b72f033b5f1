import math

import pytest

from invmills import bounds
from invmills.types import SQRT_2_OVER_PI, RangeOverflowError


def test_band_interior_points():
    for z in (1 + 1j, 0.5 + 3j, 4 + 0j, 0.1 - 2j):
        rep = bounds.s_band_check(z)
        assert rep.passed and not rep.boundary_case
        assert rep.margin > 0


def test_band_boundary_points():
    # |S(0)| = 1 and |S(i y*)| = band floor: both equality cases
    assert bounds.s_band_check(0j).boundary_case
    assert bounds.s_band_check(0j).passed
    for sign in (1, -1):
        rep = bounds.s_band_check(complex(0.0, sign * 1.62679))
        assert rep.boundary_case and rep.passed


def test_band_floor_injection():
    # raising the floor to 0.7 must break the check near i*y_star
    rep = bounds.s_band_check(complex(0.0, 1.63), band_floor=0.7)
    assert not rep.passed


def test_r_envelope():
    rep0 = bounds.r_envelope_check(0j)
    assert rep0.boundary_case and rep0.passed  # |R(0)| = sqrt(2/pi) exactly
    for z in (1.0 + 0j, 2 + 5j, 0.01 + 1j):
        rep = bounds.r_envelope_check(z)
        assert rep.passed
        assert rep.envelope == abs(z + SQRT_2_OVER_PI)


def test_derivative_bound_closed_form():
    z = 2 + 1j
    n = 3
    expected = (math.factorial(n) / 2.0**n) * math.sqrt(
        abs(z + SQRT_2_OVER_PI) ** 2 + 4.0
    )
    assert bounds.derivative_bound(n, z) == pytest.approx(expected, rel=1e-14)
    assert bounds.log_derivative_bound(n, z) == pytest.approx(math.log(expected), rel=1e-14)


def test_derivative_bound_overflow():
    # n!/x^n explodes for tiny x; the log form must still work
    with pytest.raises(RangeOverflowError):
        bounds.derivative_bound(40, complex(1e-8, 0.0))
    assert math.isfinite(bounds.log_derivative_bound(40, complex(1e-8, 0.0)))


def test_derivative_bound_validation():
    with pytest.raises(ValueError):
        bounds.derivative_bound(0, 1 + 0j)
    with pytest.raises(ValueError):
        bounds.derivative_bound(1, 1j)


def test_J_closed_forms():
    for a in (0.5, 1.0, 4.0):
        assert bounds.J(a, 0.0) == pytest.approx(2 * math.pi * math.sqrt(a), rel=1e-10)
        assert bounds.J(a, a) == pytest.approx(4 * math.sqrt(2 * a), rel=1e-8)
    with pytest.raises(ValueError):
        bounds.J(1.0, 2.0)


def test_J_monotone_in_b():
    vals = [bounds.J(1.0, b / 10) for b in range(11)]
    assert all(u >= v for u, v in zip(vals, vals[1:]))


def test_elliptic_params():
    p = bounds.elliptic_params(1 + 1j)
    m = abs(1 + 1j + SQRT_2_OVER_PI)
    assert p.a == pytest.approx(m * m + 1.0)
    assert p.b == pytest.approx(2.0 * m)
    assert 0 <= p.b <= p.a  # guarantees J is defined
    with pytest.raises(ValueError):
        bounds.elliptic_params(2j)
