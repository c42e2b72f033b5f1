"""Closed-form envelopes for |S|, |R|, and the derivatives of R.

The modulus band 0.6861 < |S(z)| < 1 (strict away from 0 and +-i*y_star),
the envelope |R(z)| < |z + sqrt(2/pi)|, the derivative envelope
(n!/x^n) sqrt(|z + sqrt(2/pi)|^2 + x^2), and the elliptic integral
J(a, b) = integral_0^{2pi} sqrt(a + b cos t) dt used to bracket it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from scipy.integrate import quad

from .types import (
    SQRT_2_OVER_PI,
    _LOG_MAX_DOUBLE,
    HalfPlanePoint,
    RangeOverflowError,
    as_point,
)
from . import core

# Certified band floor: the rigorous lower bracket on |S(i*y_star)|,
# deliberately not the value our own minimizer produces.
BAND_FLOOR = 0.6861
Y_STAR_REFERENCE = 1.62675  # midpoint of the certified bracket, for exclusions

__all__ = [
    "BAND_FLOOR",
    "BoundReport",
    "EllipticParams",
    "s_band_check",
    "r_envelope_check",
    "derivative_bound",
    "log_derivative_bound",
    "J",
    "elliptic_params",
]


@dataclass(frozen=True)
class BoundReport:
    point: HalfPlanePoint
    quantity: float
    envelope: float
    margin: float
    passed: bool
    tolerance: float = 0.0
    boundary_case: bool = False


@dataclass(frozen=True)
class EllipticParams:
    a: float
    b: float
    theta: float

    def __post_init__(self) -> None:
        if not (0 <= self.b <= self.a):
            raise ValueError(f"need 0 <= b <= a, got a={self.a}, b={self.b}")


def s_band_check(z, exclusion_radius: float = 1e-3,
                 band_floor: float = BAND_FLOOR) -> BoundReport:
    """Check BAND_FLOOR < |S(z)| < 1, flagging the boundary-equality points.

    At z = 0 and z = +-i*y_star one end of the band is attained; within
    `exclusion_radius` of those points the check passes when |S| is inside
    the closed band widened by the radius.
    """
    p = as_point(z)
    q = abs(core.S(p).value)
    margin = min(1.0 - q, q - band_floor)
    boundary = abs(p.z) <= exclusion_radius or (
        p.x <= exclusion_radius and abs(abs(p.y) - Y_STAR_REFERENCE) <= exclusion_radius
    )
    if boundary:
        passed = band_floor - exclusion_radius <= q <= 1.0 + exclusion_radius
        return BoundReport(p, q, 1.0, margin, passed,
                           tolerance=exclusion_radius, boundary_case=True)
    return BoundReport(p, q, 1.0, margin, margin > 0.0)


def r_envelope_check(z, tolerance: float = 1e-12) -> BoundReport:
    """Check |R(z)| < |z + sqrt(2/pi)| strictly; z = 0 is the equality case."""
    p = as_point(z)
    quantity = abs(core.inverse_mills(p).value)
    envelope = abs(p.z + SQRT_2_OVER_PI)
    margin = envelope - quantity
    if p.x == 0 and p.y == 0:
        return BoundReport(p, quantity, envelope, margin,
                           abs(margin) <= tolerance, tolerance=tolerance,
                           boundary_case=True)
    return BoundReport(p, quantity, envelope, margin, margin > 0.0)


def log_derivative_bound(n: int, z) -> float:
    """log of the derivative envelope; safe for any n >= 1 and x > 0."""
    p = as_point(z)
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if p.x <= 0:
        raise ValueError("derivative bound requires Re z > 0")
    m2 = abs(p.z + SQRT_2_OVER_PI) ** 2 + p.x * p.x
    return math.lgamma(n + 1) - n * math.log(p.x) + 0.5 * math.log(m2)


def derivative_bound(n: int, z) -> float:
    """(n!/x^n) * sqrt(|z + sqrt(2/pi)|^2 + x^2), the envelope of |R^(n)(z)|."""
    log_bound = log_derivative_bound(n, z)
    if log_bound > _LOG_MAX_DOUBLE:
        raise RangeOverflowError(
            f"derivative bound exp({log_bound:.6g}) overflows; use log_derivative_bound"
        )
    return math.exp(log_bound)


def J(a: float, b: float) -> float:
    """Elliptic integral J(a,b) = integral_0^{2pi} sqrt(a + b cos t) dt.

    J(a,0) = 2*pi*sqrt(a), J(a,a) = 4*sqrt(2a), and J is nonincreasing and
    concave in b on [0,a]. The integrand's square-root zero at t = pi when
    a = b is integrable; quadrature is split there.
    """
    if not (a > 0 and 0 <= b <= a):
        raise ValueError(f"need a > 0 and 0 <= b <= a, got a={a}, b={b}")

    def integrand(t: float) -> float:
        return math.sqrt(max(a + b * math.cos(t), 0.0))

    value, _ = quad(integrand, 0.0, math.pi, epsabs=1e-14, epsrel=1e-12, limit=200)
    return 2.0 * value  # symmetric about t = pi


def elliptic_params(z) -> EllipticParams:
    """The (a, b, theta) parameters bounding the Cauchy-circle integrand."""
    p = as_point(z)
    if p.x <= 0:
        raise ValueError("elliptic parameters require Re z > 0")
    m = abs(p.z + SQRT_2_OVER_PI)
    return EllipticParams(
        a=m * m + p.x * p.x,
        b=2.0 * p.x * m,
        theta=math.atan2(p.y, p.x + SQRT_2_OVER_PI),
    )
