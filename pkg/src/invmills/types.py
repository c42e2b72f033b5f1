"""Shared domain types, constants, and exceptions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

# Shared constants, computed once at native precision.
TWO_OVER_PI = 2.0 / math.pi
SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)
SQRT_2PI = math.sqrt(2.0 * math.pi)
INV_SQRT_2PI = 1.0 / SQRT_2PI
LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)

# exp(y^2/2) leaves double range near y ~ 38.6; keep a safety margin.
Y_OVERFLOW = 37.0

# log of the largest finite double, rounded down.
_LOG_MAX_DOUBLE = 709.0


class RangeOverflowError(OverflowError):
    """Requested exact value exceeds double range; use a scaled/log form."""


class AccuracyError(RuntimeError):
    """A numerical routine could not meet its accuracy target."""


class Method(str, Enum):
    TAYLOR = "taylor"
    CONTINUED_FRACTION = "continued_fraction"
    QUADRATURE = "quadrature"
    SCALED_IMAGINARY_AXIS = "scaled_imaginary_axis"


@dataclass(frozen=True)
class HalfPlanePoint:
    """A point z = x + iy with x >= 0."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"coordinates must be finite, got ({self.x}, {self.y})")
        if self.x < 0:
            raise ValueError(f"Re z must be >= 0, got {self.x}")

    @classmethod
    def from_complex(cls, z: complex) -> "HalfPlanePoint":
        z = complex(z)
        return cls(z.real, z.imag)

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    def conjugate(self) -> "HalfPlanePoint":
        return HalfPlanePoint(self.x, -self.y)

    def __abs__(self) -> float:
        return math.hypot(self.x, self.y)


def as_point(z) -> HalfPlanePoint:
    """Coerce a complex/real/HalfPlanePoint argument to HalfPlanePoint."""
    if isinstance(z, HalfPlanePoint):
        return z
    return HalfPlanePoint.from_complex(complex(z))


@dataclass(frozen=True)
class Evaluation:
    """A computed complex value with an absolute-error estimate."""

    value: complex
    abs_error_estimate: float
    method: Method

    def __post_init__(self) -> None:
        if math.isfinite(abs(self.value)):
            if not (self.abs_error_estimate >= 0 and math.isfinite(self.abs_error_estimate)):
                raise ValueError(
                    f"abs_error_estimate must be finite and >= 0, got {self.abs_error_estimate}"
                )
