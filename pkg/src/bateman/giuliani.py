"""
Trigonometric integrals of the Kummer-function family and their x-derivatives.

    I(x)      = int_0^(pi/2) cos^(alpha-1) cos((x/2) tan(theta) + n theta) d(theta)
    U_n(a, x) = int_0^(pi/2) cos^(alpha-1) cos((x/2) tan(theta)) cos(n theta) d(theta)
    V_n(a, x) = int_0^(pi/2) cos^(alpha-1) sin((x/2) tan(theta)) sin(n theta) d(theta)

and the three-parameter integral int_0^(pi/2) cos^alpha sin^(beta-1) cos(x tan(theta) + n theta).
Derivatives are taken under the integral sign, so every value is a single quadrature.
"""

from __future__ import annotations

import logging
import math

from bateman import errors
from bateman.bateman_core import Kernel, power_weight, trig_integral
from bateman.constants import MAX_WEIGHT_POWER
from bateman.quadrature import (
    DEFAULT_CONFIG,
    EvalResult,
    QuadConfig,
    integrate_semiinf_oscillatory,
)

logger = logging.getLogger(__name__)

MAX_DERIVATIVE = 4
MAX_BATEMAN_I_DERIVATIVE = 3

HALF_PI = 0.5 * math.pi


def _check(alpha: float, x: float, derivative: int, max_derivative: int) -> None:
    if not 0 <= derivative <= max_derivative:
        raise errors.UnsupportedOrderError(
            f"Derivative order must lie in [0, {max_derivative}], got {derivative!r}"
        )
    if not alpha > 0 or alpha >= MAX_WEIGHT_POWER:
        raise errors.DomainError(f"alpha must lie in (0, {MAX_WEIGHT_POWER}), got {alpha!r}")
    if not math.isfinite(x):
        raise errors.DomainError(f"Argument must be finite, got {x!r}")


def giuliani_i(
    n: float, alpha: float, x: float, derivative: int = 0, cfg: QuadConfig = DEFAULT_CONFIG
) -> EvalResult:
    """The integral I(x), or its x-derivative of order `derivative`.

    I(x) equals (pi/2) k_{-n,alpha-1}(x/2).

    Raises:
        DomainError unless alpha > 1.
        UnsupportedOrderError for derivative orders above 4.
    """
    _check(alpha, x, derivative, MAX_DERIVATIVE)
    if alpha <= 1:
        raise errors.DomainError(f"I(x) needs alpha > 1, got {alpha!r}")

    base = power_weight(alpha - 1.0, 0.0)

    def weight(t: float) -> float:
        return (0.5 * t) ** derivative * base(t)

    def phase(t: float) -> float:
        return -n * math.atan(t) - HALF_PI * derivative

    return trig_integral(Kernel.COS, 0.5 * x, weight, phase, cfg).scaled(HALF_PI)


def _uv_integral(
    n: float, alpha: float, x: float, derivative: int, cfg: QuadConfig, is_u: bool
) -> EvalResult:
    _check(alpha, x, derivative, MAX_DERIVATIVE)
    if x <= 0:
        raise errors.DomainError(f"U and V are evaluated for x > 0, got {x!r}")

    exponent = -0.5 * (alpha + 1.0)
    c = math.cos(HALF_PI * derivative)
    s = math.sin(HALF_PI * derivative)

    # d^m/dx^m of cos(x t / 2) is (t/2)^m cos(x t / 2 + m pi / 2), likewise for sin
    def envelope_pair(t: float) -> tuple[float, float]:
        w = (1.0 + t * t) ** exponent * (0.5 * t) ** derivative
        theta = math.atan(t)
        if is_u:
            amplitude = w * math.cos(n * theta)
            return amplitude * c, -amplitude * s
        amplitude = w * math.sin(n * theta)
        return amplitude * s, amplitude * c

    result = integrate_semiinf_oscillatory(envelope_pair, 0.5 * x, cfg)
    if not result.converged:
        logger.warning(
            "%s_%r(%r, %r) derivative %d did not converge",
            "U" if is_u else "V",
            n,
            alpha,
            x,
            derivative,
        )
    return result


def giuliani_u(
    n: float, alpha: float, x: float, derivative: int = 0, cfg: QuadConfig = DEFAULT_CONFIG
) -> EvalResult:
    """U_n(alpha, x) or its x-derivative, for x > 0."""
    return _uv_integral(n, alpha, x, derivative, cfg, is_u=True)


def giuliani_v(
    n: float, alpha: float, x: float, derivative: int = 0, cfg: QuadConfig = DEFAULT_CONFIG
) -> EvalResult:
    """V_n(alpha, x) or its x-derivative, for x > 0."""
    return _uv_integral(n, alpha, x, derivative, cfg, is_u=False)


def bateman_i(
    n: float,
    alpha: float,
    beta: float,
    x: float,
    derivative: int = 0,
    cfg: QuadConfig = DEFAULT_CONFIG,
) -> EvalResult:
    """int_0^(pi/2) cos^alpha sin^(beta-1) cos(x tan(theta) + n theta), or an x-derivative.

    The integral equals (pi/2) k_{-n,alpha,beta-1}(x).

    Raises:
        DomainError unless beta >= 1.
        UnsupportedOrderError for derivative orders above 3.
    """
    _check(alpha, x, derivative, MAX_BATEMAN_I_DERIVATIVE)
    if beta < 1:
        raise errors.DomainError(f"The sine power beta - 1 must be >= 0, got beta={beta!r}")

    base = power_weight(alpha, beta - 1.0)

    def weight(t: float) -> float:
        return t**derivative * base(t)

    def phase(t: float) -> float:
        return -n * math.atan(t) - HALF_PI * derivative

    return trig_integral(Kernel.COS, x, weight, phase, cfg).scaled(HALF_PI)
