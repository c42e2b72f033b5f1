"""Extremal constants and monotonicity structure of |S|.

Locates the imaginary-axis minimizer y_star of s(y) = |S(iy)|^2, the
real-axis minimizer x_star of S (closed form), and the turning points of
the derivative-ratio functions s1 and s2 used to certify unimodality.

Derivation notes (c = 2/pi, tr = rescaled Dawson function):

    s(y)  = f/g,  f = phi(iy)^2/(y^2 + c),  g = 1/4 + E(y)^2
    s1(y) = (1/pi) * f'/g' = y (y^2 + c - 1) / (pi * tr(y) * (y^2 + c)^2)
    s2(y) = f1'/g1'  with  g1 = E,  f1 = s1 * E
          = (y^6 + 2(c-1) y^4 + (c^2 - c + 3) y^2 + c(c-1)) / (pi (y^2 + c)^3)

The 1/pi normalization matches the published reference decimals for s1
and s2; it rescales both ratios by a positive constant and therefore
changes none of the sign or monotonicity conclusions. The degree-6/6
rational form of s2 above was derived symbolically from the definitions
and is validated against numerical differentiation in the test suite.

On the real axis the corresponding derivative ratio is the rational
function h(x) = (x^2 + bx + 1)/(x + b)^2 with b = sqrt(2/pi), whose
single critical point is x_star = (pi - 1) sqrt(2/pi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from scipy.optimize import brentq

from .types import SQRT_2_OVER_PI, TWO_OVER_PI, AccuracyError
from .core import S, dawson_rescaled, s_imaginary_axis_stable

_C = TWO_OVER_PI
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0

X_STAR = (math.pi - 1.0) * SQRT_2_OVER_PI

__all__ = [
    "ExtremalConstants",
    "X_STAR",
    "s",
    "s1",
    "s1_prime",
    "s2",
    "s2_prime",
    "s2_turning_points",
    "find_y_star",
    "real_axis_ratio",
    "real_axis_ratio_prime",
    "vertical_min_sweep",
    "golden_section",
]


@dataclass(frozen=True)
class ExtremalConstants:
    y_star: float
    y_star_bracket: tuple[float, float]
    s_at_y_star: float  # |S(i y_star)|
    x_star: float
    S_at_x_star: float
    y21: float
    y22: float


def s(y: float) -> float:
    """s(y) = |S(iy)|^2, overflow-free."""
    return s_imaginary_axis_stable(y)


def s1(y: float) -> float:
    if not y > 0:
        raise ValueError(f"s1 requires y > 0, got {y}")
    q = y * y + _C
    return y * (q - 1.0) / (math.pi * dawson_rescaled(y) * q * q)


def s1_prime(y: float) -> float:
    """Analytic derivative of s1, using tr'(y) = 1 - y*tr(y)."""
    if not y > 0:
        raise ValueError(f"s1_prime requires y > 0, got {y}")
    q = y * y + _C
    tr = dawson_rescaled(y)
    p_val = y * (q - 1.0) / (q * q)
    p_der = ((3.0 * y * y + _C - 1.0) * q - 4.0 * y * y * (q - 1.0)) / q**3
    return (p_der * tr - p_val * (1.0 - y * tr)) / (math.pi * tr * tr)


def _s2_numerator(y: float) -> float:
    y2 = y * y
    return (y2 ** 3 + 2.0 * (_C - 1.0) * y2 * y2
            + (_C * _C - _C + 3.0) * y2 + _C * (_C - 1.0))


def s2(y: float) -> float:
    if y < 0:
        raise ValueError(f"s2 requires y >= 0, got {y}")
    return _s2_numerator(y) / (math.pi * (y * y + _C) ** 3)


def s2_prime(y: float) -> float:
    y2 = y * y
    q = y2 + _C
    num_der = 6.0 * y2 * y2 * y + 8.0 * (_C - 1.0) * y2 * y + 2.0 * (_C * _C - _C + 3.0) * y
    return (num_der * q - 6.0 * y * _s2_numerator(y)) / (math.pi * q**4)


def s2_turning_points(xtol: float = 1e-10) -> tuple[float, float]:
    """Roots of s2' bracketing its increase-decrease-increase pattern."""
    y21 = brentq(s2_prime, 0.3, 1.0, xtol=xtol)
    y22 = brentq(s2_prime, 1.0, 2.0, xtol=xtol)
    return float(y21), float(y22)


def golden_section(func: Callable[[float], float], lo: float, hi: float,
                   width: float) -> tuple[float, float]:
    """Golden-section minimization; returns the final bracket (lo, hi)."""
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = func(c), func(d)
    while b - a > width:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = func(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = func(d)
    return a, b


def _s_derivative_sign(y: float, step: float = 1e-7) -> float:
    return s(y + step) - s(y - step)


def find_y_star() -> ExtremalConstants:
    """Locate the imaginary-axis minimizer of |S| with a certified bracket.

    Golden-section to width 1e-4, then bisection on the sign of the
    central-difference derivative of s down to width 1e-6. Confirms the
    reference bracket (1.6267, 1.6268) by the same derivative signs used
    to certify it.
    """
    lo, hi = golden_section(s, 0.5, 3.0, 1e-4)
    lo, hi = lo - 2e-4, hi + 2e-4  # widen so the derivative changes sign
    d_lo, d_hi = _s_derivative_sign(lo), _s_derivative_sign(hi)
    if not (d_lo < 0 < d_hi):
        raise AccuracyError(
            f"no derivative sign change across [{lo}, {hi}]: {d_lo}, {d_hi}"
        )
    while hi - lo > 1e-6:
        mid = 0.5 * (lo + hi)
        if _s_derivative_sign(mid) < 0:
            lo = mid
        else:
            hi = mid
    y_star = 0.5 * (lo + hi)
    if not (1.6267 < y_star < 1.6268):
        raise AccuracyError(f"y_star = {y_star} escaped the certified bracket")
    if not (_s_derivative_sign(1.6267) < 0 < _s_derivative_sign(1.6268)):
        raise AccuracyError("reference bracket (1.6267, 1.6268) not confirmed")
    y21, y22 = s2_turning_points()
    return ExtremalConstants(
        y_star=y_star,
        y_star_bracket=(lo, hi),
        s_at_y_star=math.sqrt(s(y_star)),
        x_star=X_STAR,
        S_at_x_star=abs(S(complex(X_STAR, 0.0)).value),
        y21=y21,
        y22=y22,
    )


def real_axis_ratio(x: float) -> float:
    """Derivative ratio of S's restriction to the real axis.

    h(x) = (x^2 + bx + 1)/(x + b)^2, b = sqrt(2/pi); decreasing on
    [0, x_star], increasing on [x_star, inf).
    """
    if x < 0:
        raise ValueError(f"real_axis_ratio requires x >= 0, got {x}")
    b = SQRT_2_OVER_PI
    return (x * x + b * x + 1.0) / (x + b) ** 2


def real_axis_ratio_prime(x: float) -> float:
    b = SQRT_2_OVER_PI
    return (b * x + b * b - 2.0) / (x + b) ** 3


def vertical_min_sweep(x_list: Sequence[float], y_range: float = 20.0,
                       scan_points: int = 201) -> list[tuple[float, float]]:
    """min_y |S(x + iy)| for each x, over y in [0, y_range] (symmetric in y).

    Coarse scan to bracket the minimizer, then golden-section refinement.
    y_range must be far enough out that the tail is dominated.
    """
    if any(b <= a for a, b in zip(x_list, x_list[1:])):
        raise ValueError("x_list must be strictly increasing")
    out = []
    for x in x_list:

        def modulus(y: float, _x: float = x) -> float:
            return abs(S(complex(_x, y)).value)

        # the minimizer must sit strictly inside [0, y_range]; past it the
        # modulus climbs back toward 1, so a non-increasing tail means the
        # window is too short
        if modulus(y_range) <= modulus(0.9 * y_range):
            raise ValueError(f"y_range = {y_range} too small at x = {x}")

        ys = [y_range * i / (scan_points - 1) for i in range(scan_points)]
        vals = [modulus(y) for y in ys]
        k = min(range(scan_points), key=vals.__getitem__)
        lo = ys[max(k - 1, 0)]
        hi = ys[min(k + 1, scan_points - 1)]
        a, b = golden_section(modulus, lo, hi, 1e-8)
        y_min = 0.5 * (a + b)
        out.append((x, min(modulus(y_min), vals[k])))
    return out
