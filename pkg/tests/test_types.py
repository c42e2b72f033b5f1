import math

import pytest

from invmills.types import (
    Evaluation,
    HalfPlanePoint,
    Method,
    RangeOverflowError,
    as_point,
)


def test_point_rejects_left_halfplane():
    with pytest.raises(ValueError):
        HalfPlanePoint(-0.1, 0.0)


@pytest.mark.parametrize("bad", [float("nan"), float("inf")])
def test_point_rejects_nonfinite(bad):
    with pytest.raises(ValueError):
        HalfPlanePoint(bad, 0.0)
    with pytest.raises(ValueError):
        HalfPlanePoint(1.0, bad)


def test_point_roundtrip():
    p = HalfPlanePoint.from_complex(2 + 3j)
    assert p.z == 2 + 3j
    assert p.conjugate().z == 2 - 3j
    assert abs(p) == pytest.approx(math.hypot(2, 3))


def test_as_point_coercions():
    assert as_point(1.5).z == 1.5 + 0j
    assert as_point(1 + 2j) == HalfPlanePoint(1.0, 2.0)
    p = HalfPlanePoint(0.5, -0.5)
    assert as_point(p) is p
    with pytest.raises(ValueError):
        as_point(-1.0)


def test_evaluation_requires_nonnegative_error():
    with pytest.raises(ValueError):
        Evaluation(1 + 0j, -1e-16, Method.TAYLOR)


def test_range_overflow_is_overflow_error():
    assert issubclass(RangeOverflowError, OverflowError)
