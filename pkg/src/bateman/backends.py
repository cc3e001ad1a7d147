"""
Classical special functions with the domain guards the Bateman functions rely on.

Each function is a thin wrapper over the matching scipy.special kernel. The wrappers turn
the poles, branch cuts and unsupported orders that scipy answers with nan or inf into
exceptions, so that a bad argument can never leak a silent nan into an identity residual.
"""

from __future__ import annotations

import enum
import math

import numpy as np
from scipy import special

from bateman import errors
from bateman.constants import MATH, ORDER_SNAP_TOL, MathConstants
from bateman.quadrature import DEFAULT_CONFIG, QuadConfig, integrate_semiinf_decay

__all__ = [
    "MATH",
    "BesselKind",
    "MathConstants",
    "StruveKind",
    "bessel",
    "bessel_k_scaled",
    "exp_integral_e1",
    "exp_integral_ei",
    "gamma",
    "hermite",
    "hyp_gauss_2f1",
    "hyp_kummer_m",
    "is_integer",
    "kelvin_ber_bei",
    "kelvin_ber_bei_prime",
    "laguerre",
    "rgamma",
    "struve",
    "tricomi_u",
    "whittaker_m",
    "whittaker_w",
]

# Largest |x| accepted by the Struve and Kelvin wrappers
_STRUVE_MAX_ARG = 40.0
_KELVIN_MAX_ARG = 20.0


class BesselKind(enum.Enum):
    J = enum.auto()
    Y = enum.auto()
    I = enum.auto()  # noqa: E741
    K = enum.auto()


class StruveKind(enum.Enum):
    H = enum.auto()
    L = enum.auto()


def is_integer(value: float, tol: float = ORDER_SNAP_TOL) -> bool:
    """Returns whether a value lies within `tol` of an integer."""
    return abs(value - round(value)) <= tol


def _is_half_integer(value: float) -> bool:
    return is_integer(value - 0.5)


def gamma(x: float) -> float:
    """Gamma function.

    Raises:
        PoleError at the non-positive integers.
    """
    if x <= 0 and is_integer(x):
        raise errors.PoleError(f"Gamma has a pole at {x!r}")
    return float(special.gamma(x))


def rgamma(x: float) -> float:
    """Reciprocal gamma function, zero at the poles of gamma."""
    return float(special.rgamma(x))


def exp_integral_ei(x: float) -> float:
    """Exponential integral Ei(x); the principal value for x > 0.

    This is also li(e^x), the form in which the Havelock closed forms use it.

    Raises:
        SingularError at x = 0.
    """
    if x == 0:
        raise errors.SingularError("Ei(x) is singular at x = 0")
    return float(special.expi(x))


def exp_integral_e1(x: float) -> float:
    """Exponential integral E_1(x) = -Ei(-x) for x > 0."""
    if x <= 0:
        raise errors.DomainError(f"E_1(x) requires x > 0, got {x!r}")
    return float(special.exp1(x))


def bessel(kind: BesselKind | str, nu: float, x: float) -> float:
    """Bessel function of the first or second kind, or modified Bessel function.

    Supported orders: all integers and half-integers for every kind, plus arbitrary real
    orders for I and K. The Bateman functions only need these.

    Raises:
        UnsupportedOrderError for a general real order of J or Y.
        DomainError for x <= 0 with Y or K, and for x < 0 with a non-integer order.
    """
    kind = BesselKind[kind] if isinstance(kind, str) else kind
    integer_order = is_integer(nu)
    if not (integer_order or _is_half_integer(nu)) and kind in (BesselKind.J, BesselKind.Y):
        raise errors.UnsupportedOrderError(f"{kind.name}_nu is not supported for nu={nu!r}")
    if integer_order:
        nu = float(round(nu))

    if kind in (BesselKind.Y, BesselKind.K) and x <= 0:
        raise errors.DomainError(f"{kind.name}_nu(x) requires x > 0, got {x!r}")
    if x < 0 and not integer_order:
        raise errors.DomainError(f"{kind.name}_{nu!r}(x) is complex for x < 0")

    match kind:
        case BesselKind.J:
            return float(special.jv(nu, x))
        case BesselKind.Y:
            return float(special.yv(nu, x))
        case BesselKind.I:
            return float(special.iv(nu, x))
        case BesselKind.K:
            return float(special.kv(nu, x))
        case _:
            raise errors.UnsupportedError(f"Unknown Bessel kind {kind!r}")


def bessel_k_scaled(nu: float, x: float) -> float:
    """Exponentially scaled modified Bessel function e^x K_nu(x) for x > 0."""
    if x <= 0:
        raise errors.DomainError(f"K_nu(x) requires x > 0, got {x!r}")
    return float(special.kve(nu, x))


def struve(kind: StruveKind | str, nu: float, x: float) -> float:
    """Struve function H_nu or modified Struve function L_nu for x >= 0.

    Negative orders, including the negative half-integers, are covered by the analytic
    continuation of the power series.

    Raises:
        DomainError for x < 0, or x = 0 with nu < -1 where the function is infinite.
        UnsupportedError for x > 40.
    """
    kind = StruveKind[kind] if isinstance(kind, str) else kind
    if x < 0:
        raise errors.DomainError(f"Struve functions are evaluated for x >= 0, got {x!r}")
    if x > _STRUVE_MAX_ARG:
        raise errors.UnsupportedError(f"Struve argument {x!r} exceeds {_STRUVE_MAX_ARG}")
    if x == 0:
        if nu < -1:
            raise errors.DomainError(f"Struve function of order {nu!r} is infinite at x = 0")
        # The leading series term (x/2)^(nu+1) is constant only for nu = -1
        return 0.0 if nu > -1 else 2.0 / math.pi

    value = special.struve(nu, x) if kind is StruveKind.H else special.modstruve(nu, x)
    return float(value)


def kelvin_ber_bei(x: float) -> tuple[float, float]:
    """Kelvin functions (ber(x), bei(x)) for 0 <= x <= 20."""
    _check_kelvin_argument(x)
    return float(special.ber(x)), float(special.bei(x))


def kelvin_ber_bei_prime(x: float) -> tuple[float, float]:
    """Derivatives (ber'(x), bei'(x)) of the Kelvin functions for 0 <= x <= 20."""
    _check_kelvin_argument(x)
    return float(special.berp(x)), float(special.beip(x))


def _check_kelvin_argument(x: float) -> None:
    if x < 0:
        raise errors.DomainError(f"Kelvin functions are evaluated for x >= 0, got {x!r}")
    if x > _KELVIN_MAX_ARG:
        raise errors.UnsupportedError(f"Kelvin argument {x!r} exceeds {_KELVIN_MAX_ARG}")


def laguerre(n: int, alpha: float, x: float) -> float:
    """Generalized Laguerre polynomial L_n^(alpha)(x)."""
    if n < 0:
        raise errors.DomainError(f"Laguerre degree must be >= 0, got {n!r}")
    if alpha > -1:
        return float(special.eval_genlaguerre(n, alpha, x))

    # scipy only covers alpha > -1; the three-term recurrence holds for every alpha
    prev, current = 0.0, 1.0
    for k in range(n):
        prev, current = current, ((2 * k + 1 + alpha - x) * current - (k + alpha) * prev) / (k + 1)
    return current


def hermite(n: int, x: float) -> float:
    """Physicists' Hermite polynomial H_n(x)."""
    if n < 0:
        raise errors.DomainError(f"Hermite degree must be >= 0, got {n!r}")
    return float(special.eval_hermite(n, x))


def hyp_kummer_m(a: float, b: float, x: float) -> float:
    """Kummer's confluent hypergeometric function M(a, b, x) = 1F1(a; b; x).

    A non-positive integer `b` is admitted only when `a` is a non-positive integer of
    smaller magnitude, where the series terminates before the vanishing denominator.

    Raises:
        ParameterPoleError for a forbidden non-positive integer `b`.
    """
    terminating = a <= 0 and is_integer(a)
    if b <= 0 and is_integer(b):
        if not (terminating and round(a) > round(b)):
            raise errors.ParameterPoleError(f"M(a, b, x) has a pole at b={b!r} for a={a!r}")
        degree = -round(a)
        terms = [
            special.poch(a, k) / special.poch(b, k) * x**k / math.factorial(k)
            for k in range(degree + 1)
        ]
        return math.fsum(terms)
    return float(special.hyp1f1(a, b, x))


def hyp_gauss_2f1(a: float, b: float, c: float, z: float) -> float:
    """Gauss hypergeometric function 2F1(a, b; c; z) for real results.

    A non-positive integer `c` is admitted when `a` or `b` is a non-positive integer of
    smaller magnitude, where the series terminates before the vanishing denominator.

    Raises:
        ParameterPoleError for a forbidden non-positive integer `c`.
        DomainError for z > 1, or z = 1 when the series diverges, unless it terminates.
    """
    degrees = [-round(p) for p in (a, b) if p <= 0 and is_integer(p)]
    if c <= 0 and is_integer(c):
        if not degrees or min(degrees) >= -round(c):
            raise errors.ParameterPoleError(f"2F1 has a pole at c={c!r}")
        terms = [
            special.poch(a, k) * special.poch(b, k) / special.poch(c, k) * z**k / math.factorial(k)
            for k in range(min(degrees) + 1)
        ]
        return math.fsum(terms)
    if not degrees and (z > 1 or (z == 1 and c - a - b <= 0)):
        raise errors.DomainError(f"2F1({a!r}, {b!r}; {c!r}; z) has no real value at z={z!r}")
    return float(special.hyp2f1(a, b, c, z))


def tricomi_u(a: float, b: float, x: float) -> float:
    """Tricomi's confluent hypergeometric function U(a, b, x) for x > 0.

    For b <= 0 the kernel is evaluated through Kummer's transformation
    U(a, b, x) = x^(1-b) U(1+a-b, 2-b, x).

    Raises:
        DomainError for x <= 0 or a non-finite kernel value.
    """
    if x <= 0:
        raise errors.DomainError(f"U(a, b, x) requires x > 0, got {x!r}")
    if b <= 0:
        value = x ** (1.0 - b) * special.hyperu(1.0 + a - b, 2.0 - b, x)
    else:
        value = special.hyperu(a, b, x)
    if not np.isfinite(value):
        raise errors.DomainError(f"U({a!r}, {b!r}, {x!r}) is not finite")
    return float(value)


def whittaker_m(kappa: float, mu: float, x: float) -> float:
    """Whittaker function M_{kappa,mu}(x) = x^(mu+1/2) e^(-x/2) M(mu-kappa+1/2, 1+2mu, x)."""
    if x <= 0:
        raise errors.DomainError(f"M_kappa,mu(x) requires x > 0, got {x!r}")
    m = hyp_kummer_m(mu - kappa + 0.5, 1.0 + 2.0 * mu, x)
    return float(x ** (mu + 0.5) * np.exp(-x / 2.0) * m)


def whittaker_w(
    kappa: float, mu: float, x: float, cfg: QuadConfig = DEFAULT_CONFIG
) -> float:
    """Whittaker function W_{kappa,mu}(x) by quadrature of its Laplace-type integral.

    Uses W = x^(mu+1/2) e^(-x/2) / Gamma(mu-kappa+1/2)
    * int_0^inf t^(mu-kappa-1/2) e^(-x t) (1+t)^(mu+kappa-1/2) dt.

    Raises:
        DomainError for x <= 0 or outside the strip mu - kappa + 1/2 > 0.
    """
    if x <= 0:
        raise errors.DomainError(f"W_kappa,mu(x) requires x > 0, got {x!r}")
    a = mu - kappa + 0.5
    if a <= 0:
        raise errors.DomainError(
            f"Integral form of W needs mu - kappa + 1/2 > 0, got {a!r} (kappa={kappa!r}, mu={mu!r})"
        )

    def integrand(t: float) -> float:
        return t ** (a - 1.0) * math.exp(-x * t) * (1.0 + t) ** (mu + kappa - 0.5)

    result = integrate_semiinf_decay(integrand, cfg)
    return x ** (mu + 0.5) * math.exp(-x / 2.0) * result.value / gamma(a)
