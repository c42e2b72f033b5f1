"""Independent quadrature route for the Mills ratio.

For Re z > 0 the Mills ratio splits into real integrals along the
hyperbola uv = xy:

    r(z) = A(z) - i*B(z),
    A = integral_x^inf  exp(a(u) - a(x)) du,
    B = integral_0^y    exp(a(y) - a(v)) dv,
    a(u) = x^2 y^2 / (2 u^2) - u^2 / 2.

This module evaluates A and B by adaptive quadrature and serves as a
cross-validation oracle for the production evaluators in `core`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import quad

from .types import HalfPlanePoint, as_point

_EPS_V = 1e-30  # lower limit for B; integrand underflows to 0 long before
_QUAD_KW = dict(epsabs=1e-15, epsrel=1e-12, limit=200)

__all__ = ["PhaseFunction", "phase", "A_integral", "B_integral", "mills_ratio_AB"]


@dataclass(frozen=True)
class PhaseFunction:
    """Parameters (x, y) of the phase a_{xy}(u) = x^2 y^2/(2u^2) - u^2/2."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (self.x > 0 and math.isfinite(self.x)):
            raise ValueError(f"phase function requires x > 0, got {self.x}")
        if not math.isfinite(self.y):
            raise ValueError(f"y must be finite, got {self.y}")

    def __call__(self, u: float) -> float:
        return phase(self, u)


def phase(p: PhaseFunction, u: float) -> float:
    if not u > 0:
        raise ValueError(f"phase is defined for u > 0, got {u}")
    return (p.x * p.x * p.y * p.y) / (2.0 * u * u) - u * u / 2.0


def _require_positive_x(p: HalfPlanePoint) -> None:
    if p.x <= 0:
        raise ValueError("the A - iB representation requires Re z > 0")


def A_integral(z) -> float:
    """A(z) > 0, to ~1e-11 relative accuracy."""
    p = as_point(z)
    _require_positive_x(p)
    x, y = p.x, abs(p.y)
    a = PhaseFunction(x, y)
    a_x = phase(a, x)

    def integrand(u: float) -> float:
        return math.exp(phase(a, u) - a_x)

    # Gaussian decay: a(u) - a(x) <= -(u^2 - x^2)/2, so past
    # u = sqrt(x^2 + 90) the integrand is below e^-45.  The local decay
    # rate at u = x is (x^2 + y^2)/x, which for large |z| squeezes the
    # mass into a layer far narrower than the interval; hand quad the
    # layer edges explicitly or it never sees the spike.
    upper = math.sqrt(x * x + 90.0)
    scale = x / (x * x + y * y)
    breaks = sorted({min(upper, x + k * scale) for k in (3.0, 10.0, 40.0)})
    total, _ = quad(integrand, x, upper, points=breaks, **_QUAD_KW)
    lo = upper
    while True:
        hi = 2.0 * lo
        panel, _ = quad(integrand, lo, hi, **_QUAD_KW)
        total += panel
        if abs(panel) <= 1e-14 * abs(total):
            break
        lo = hi
    return total


def B_integral(z) -> float:
    """B(z) >= 0 for y >= 0 (odd in y), to ~1e-11 relative accuracy."""
    p = as_point(z)
    _require_positive_x(p)
    x, y = p.x, p.y
    if y == 0:
        return 0.0
    if y < 0:
        return -B_integral(HalfPlanePoint(x, -y))
    a = PhaseFunction(x, y)
    a_y = phase(a, y)

    def integrand(v: float) -> float:
        d = a_y - phase(a, v)
        # d -> -inf as v -> 0; cut off before math.exp underflow complains
        return math.exp(d) if d > -745.0 else 0.0

    # The mass sits in a boundary layer of width ~ 1/(y + x^2/y) at v = y.
    width = 1.0 / (y + x * x / y)
    breaks = sorted({max(_EPS_V, y - k * width) for k in (40.0, 10.0, 3.0)})
    value, _ = quad(integrand, _EPS_V, y, points=breaks, **_QUAD_KW)
    return value


def mills_ratio_AB(z) -> complex:
    """Oracle Mills ratio r(z) = A - iB for Re z > 0 (conjugate-symmetric)."""
    p = as_point(z)
    _require_positive_x(p)
    a = A_integral(HalfPlanePoint(p.x, abs(p.y)))
    b = B_integral(HalfPlanePoint(p.x, abs(p.y)))
    sign = 1.0 if p.y >= 0 else -1.0
    return complex(a, -sign * b)
