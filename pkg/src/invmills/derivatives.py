"""High-order derivatives of R via the Cauchy integral on a circle.

R is holomorphic on the open right half-plane, so

    R^(n)(z) = (n! / (2 pi rho^n)) * integral_0^{2pi} R(z + rho e^{it}) e^{-int} dt

for any circle radius rho < Re z. The periodic trapezoid rule converges
spectrally for analytic integrands; doubling the node count until two
successive results agree gives a reliable error gauge.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .types import (
    AccuracyError,
    Evaluation,
    HalfPlanePoint,
    Method,
    as_point,
)
from .core import inverse_mills

_MAX_NODES = 4096
_REL_TARGET = 1e-8

__all__ = ["CauchyConfig", "derivative_cauchy", "vanishing_ratio"]


@dataclass(frozen=True)
class CauchyConfig:
    radius_fraction: float = 0.5
    node_count: int = 256

    def __post_init__(self) -> None:
        if not 0.0 < self.radius_fraction < 1.0:
            raise ValueError(f"radius_fraction must be in (0,1), got {self.radius_fraction}")
        n = self.node_count
        if n < 16 or (n & (n - 1)) != 0:
            raise ValueError(f"node_count must be a power of two >= 16, got {n}")


def _pairwise_sum(values: list[complex]) -> complex:
    """Deterministic pairwise reduction, independent of chunking."""
    if len(values) == 1:
        return values[0]
    mid = len(values) // 2
    return _pairwise_sum(values[:mid]) + _pairwise_sum(values[mid:])


def _trapezoid(n: int, z: complex, rho: float, nodes: int) -> tuple[complex, float]:
    terms = []
    peak = 0.0
    for j in range(nodes):
        t = 2.0 * math.pi * j / nodes
        w = z + rho * cmath.exp(1j * t)
        r_val = inverse_mills(HalfPlanePoint(w.real, w.imag)).value
        peak = max(peak, abs(r_val))
        terms.append(r_val * cmath.exp(-1j * n * t))
    return _pairwise_sum(terms) / nodes, peak


def derivative_cauchy(n: int, z, cfg: CauchyConfig = CauchyConfig()) -> Evaluation:
    """n-th derivative of R at z (Re z > 0), with a doubling error gauge."""
    p = as_point(z)
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if p.x <= 0:
        raise ValueError("the Cauchy circle requires Re z > 0")
    rho = cfg.radius_fraction * p.x
    factor = math.factorial(n) / rho**n

    nodes = cfg.node_count
    prev, _ = _trapezoid(n, p.z, rho, nodes // 2)
    while True:
        curr, peak = _trapezoid(n, p.z, rho, nodes)
        value = factor * curr
        err = factor * abs(curr - prev)
        scale = max(abs(value), factor * 1e-15)
        # the samples themselves carry relative noise ~1e-13 worst case;
        # after averaging N nodes the residual cannot drop below this floor,
        # so demanding more would loop forever at high order / small radius
        noise_floor = factor * peak * 5e-14 / math.sqrt(nodes)
        if err <= max(_REL_TARGET * scale, noise_floor):
            return Evaluation(value, max(err, noise_floor), Method.QUADRATURE)
        if nodes >= _MAX_NODES:
            raise AccuracyError(
                f"Cauchy derivative n={n} at {p.z} did not converge: "
                f"node-doubling residual {err:.3e} vs target {_REL_TARGET * scale:.3e}"
            )
        prev = curr
        nodes *= 2


def vanishing_ratio(n: int, x_list: list[float],
                    cfg: CauchyConfig = CauchyConfig()) -> list[float]:
    """Ratios |R^(n)(x) - [n==1]| * x^n / x for increasing real x >= 1.

    The sequence must decay toward 0 as x grows; it is the finite-sample
    form of the vanishing of (R^(n) - [n==1]) * x^n / |z|.
    """
    if any(x < 1 for x in x_list):
        raise ValueError("x_list entries must be >= 1")
    if any(b <= a for a, b in zip(x_list, x_list[1:])):
        raise ValueError("x_list must be strictly increasing")
    indicator = 1.0 if n == 1 else 0.0
    out = []
    for x in x_list:
        d = derivative_cauchy(n, HalfPlanePoint(x, 0.0), cfg)
        out.append(abs(d.value - indicator) * x**n / x)
    return out
