"""Property-based invariants over randomly drawn half-plane points."""

import math

from hypothesis import given, settings
from hypothesis import strategies as st

from invmills import bounds, core

points = st.builds(
    complex,
    st.floats(min_value=0.0, max_value=30.0, allow_nan=False),
    st.floats(min_value=-30.0, max_value=30.0, allow_nan=False),
)


@given(points)
@settings(max_examples=200, deadline=None)
def test_band_everywhere(z):
    assert bounds.s_band_check(z).passed


@given(points)
@settings(max_examples=200, deadline=None)
def test_conjugation(z):
    a = core.mills_ratio(z).value
    b = core.mills_ratio(z.conjugate()).value
    assert a == b.conjugate()


@given(points)
@settings(max_examples=200, deadline=None)
def test_reciprocal(z):
    r = core.mills_ratio(z).value
    big_r = core.inverse_mills(z).value
    assert abs(r * big_r - 1.0) < 1e-12


@given(points)
@settings(max_examples=200, deadline=None)
def test_sign_structure(z):
    r = core.inverse_mills(z).value
    assert r.real > 0
    if z.imag != 0:
        assert (r.imag > 0) == (z.imag > 0)


@given(st.floats(min_value=0.0, max_value=36.0, allow_nan=False))
@settings(max_examples=200, deadline=None)
def test_s_profile_in_band(y):
    s = core.s_imaginary_axis_stable(y)
    assert 0.6861**2 < s <= 1.0 or math.isclose(s, 1.0)
