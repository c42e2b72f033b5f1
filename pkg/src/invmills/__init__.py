"""Inverse Mills ratio R = phi/tail on the right complex half-plane.

Evaluation of R, its normalization S(z) = R(z)/(z + sqrt(2/pi)), high-order
derivatives with certified envelopes, extremal constants of |S|, and
Euler-Maclaurin summation of R over arithmetic grids.
"""

from .types import (
    AccuracyError,
    Evaluation,
    HalfPlanePoint,
    Method,
    RangeOverflowError,
    SQRT_2_OVER_PI,
    Y_OVERFLOW,
)
from .core import (
    E,
    E_scaled,
    S,
    dawson_rescaled,
    gaussian_tail,
    inverse_mills,
    mills_ratio,
    phi,
    phi_log,
    s_imaginary_axis_stable,
)
from .oracle import A_integral, B_integral, PhaseFunction, mills_ratio_AB, phase
from .bounds import (
    BAND_FLOOR,
    BoundReport,
    EllipticParams,
    J,
    derivative_bound,
    elliptic_params,
    log_derivative_bound,
    r_envelope_check,
    s_band_check,
)
from .derivatives import CauchyConfig, derivative_cauchy, vanishing_ratio
from .extremal import (
    ExtremalConstants,
    X_STAR,
    find_y_star,
    real_axis_ratio,
    s1,
    s2,
    s2_turning_points,
    vertical_min_sweep,
)
from .summation import SumMethod, SumRequest, SumResult, sum_direct, sum_euler_maclaurin
from .verify import VerificationSummary, run_verification

__version__ = "0.1.0"
