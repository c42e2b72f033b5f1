import pytest

from invmills import core
from invmills.summation import (
    SumMethod,
    SumRequest,
    sum_direct,
    sum_euler_maclaurin,
)


def test_request_validation():
    with pytest.raises(ValueError):
        SumRequest(x0=-1.0, delta=0.1, count=10)
    with pytest.raises(ValueError):
        SumRequest(x0=1.0, delta=0.0, count=10)
    with pytest.raises(ValueError):
        SumRequest(x0=1.0, delta=0.1, count=0)
    with pytest.raises(ValueError):
        SumRequest(x0=1.0, delta=0.1, count=10, order=3)


def test_direct_small_sum():
    req = SumRequest(x0=2.0, delta=0.5, count=4)
    res = sum_direct(req)
    expected = sum(core.inverse_mills(2.0 + 0.5 * k).value.real for k in range(4))
    assert res.value == pytest.approx(expected, rel=1e-14)
    assert res.method is SumMethod.DIRECT
    assert res.terms_evaluated == 4


def test_single_term_shortcut():
    req = SumRequest(x0=5.0, delta=1.0, count=1)
    res = sum_euler_maclaurin(req)
    assert res.value == pytest.approx(core.inverse_mills(5.0).value.real, rel=1e-14)
    assert res.remainder_bound == 0.0


@pytest.mark.parametrize("x0,delta,count", [
    (20.0, 0.01, 500),
    (25.0, 0.05, 300),
    (40.0, 0.02, 1000),
])
def test_em_matches_direct(x0, delta, count):
    req = SumRequest(x0=x0, delta=delta, count=count, order=4)
    direct = sum_direct(req)
    em = sum_euler_maclaurin(req)
    assert abs(em.value - direct.value) <= em.remainder_bound
    assert em.remainder_bound / abs(em.value) < 1e-6


def test_remainder_useless_at_small_x0():
    # the order-8 envelope at x0 = 0.01 is ~exp(47); the bound must be honest
    # about being useless there rather than quietly small
    req = SumRequest(x0=0.01, delta=0.1, count=20, order=8)
    em = sum_euler_maclaurin(req)
    assert em.remainder_bound > 1e3 * abs(em.value)
