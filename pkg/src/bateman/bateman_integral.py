"""
Bateman-integral functions ki_2n(x) and Bessel-integral functions Ji_n(x).

    ki_2n(x) = -int_x^inf k_2n(t) / t dt
    Ji_n(x)  = -int_x^inf J_n(t) / t dt

ki_2n has a finite Laguerre-sum closed form; Ji_n is reduced to finite integrals.
"""

from __future__ import annotations

import logging
import math

import numpy as np
import numpy.typing as npt

from bateman import backends, errors
from bateman.bateman_core import even_order_sequence, laguerre_form
from bateman.constants import MATH
from bateman.quadrature import (
    DEFAULT_CONFIG,
    EvalResult,
    QuadConfig,
    closed,
    integrate_finite,
    integrate_semiinf_decay,
)

logger = logging.getLogger(__name__)

# Below this argument ki_2n is reported as its value at zero
KI_ZERO_THRESHOLD = 1e-8


def _check_index(n: int) -> None:
    if n < 0 or int(n) != n:
        raise errors.DomainError(f"Index must be a non-negative integer, got {n!r}")


def ki_special_zero(n: int) -> float:
    """ki_2n(0): -2/n for odd n and 0 for even n >= 2."""
    if n < 1 or int(n) != n:
        raise errors.DomainError(f"ki_2n(0) is finite only for n >= 1, got {n!r}")
    return -2.0 / n if n % 2 else 0.0


def ki_laguerre_sum(n: int, x: float) -> float:
    """ki_2n(x) = (e^-x / n) sum_(k=1..n) (-2)^k C(n, k) L_(k-1)(x), n >= 1."""
    terms = [
        (-2.0) ** k * math.comb(n, k) * backends.laguerre(k - 1, 0.0, x) for k in range(1, n + 1)
    ]
    return math.exp(-x) * math.fsum(terms) / n


def ki(n: int, x: float, cfg: QuadConfig = DEFAULT_CONFIG) -> EvalResult:
    """Bateman-integral function ki_2n(x).

    Args:
        n: Half the first index; ki_2n is evaluated.
        x: The argument, > 0.
        cfg: Unused by the closed forms, accepted for a uniform signature.

    Returns:
        -E_1(x) for n = 0, the value at zero for x below 1e-8 and n >= 1, the Laguerre
        sum otherwise. Every path is closed form.

    Raises:
        DomainError for x <= 0 or a negative index.
    """
    _check_index(n)
    if not x > 0 or not math.isfinite(x):
        raise errors.DomainError(f"ki_2n(x) needs a finite x > 0, got {x!r}")

    if n == 0:
        return closed(-backends.exp_integral_e1(x))
    if x < KI_ZERO_THRESHOLD:
        return closed(ki_special_zero(n), evals=0)
    return closed(ki_laguerre_sum(n, x), evals=n)


def ki_sequence(n_max: int, x: float) -> npt.NDArray[np.float64]:
    """Returns ki_0(x), ki_2(x), ..., ki_(2 n_max)(x) from the upward recurrence.

    Uses (n+1) ki_(2n+2) = (n-1) ki_(2n-2) - 2 k_2n(x), started from ki_0 = -E_1(x) and
    ki_2 = -2 e^-x, with the k_2n taken from `even_order_sequence`. The homogeneous
    solutions decay like 1/n^2, so the recurrence is stable for any x > 0.
    """
    if n_max < 0:
        raise errors.DomainError(f"n_max must be >= 0, got {n_max!r}")
    if not x > 0 or not math.isfinite(x):
        raise errors.DomainError(f"ki_2n(x) needs a finite x > 0, got {x!r}")

    k = even_order_sequence(n_max, x)
    values = np.zeros(n_max + 1)
    values[0] = -backends.exp_integral_e1(x)
    if n_max >= 1:
        values[1] = -2.0 * math.exp(-x)
    for n in range(1, n_max):
        values[n + 1] = ((n - 1) * values[n - 1] - 2.0 * k[n]) / (n + 1)
    return values


def ki_by_definition(n: int, x: float, cfg: QuadConfig = DEFAULT_CONFIG) -> EvalResult:
    """ki_2n(x) from the defining tail integral of k_2n(t)/t."""
    _check_index(n)
    if not x > 0:
        raise errors.DomainError(f"ki_2n(x) needs x > 0, got {x!r}")

    def integrand(t: float) -> float:
        return laguerre_form(n, t) / t

    return integrate_semiinf_decay(integrand, cfg, a=x).scaled(-1.0)


def bessel_integral_ji(n: int, x: float, cfg: QuadConfig = DEFAULT_CONFIG) -> EvalResult:
    """Bessel-integral function Ji_n(x) for integer n >= 0 and x > 0.

    Uses Ji_n(x) = -1/n + int_0^x J_n(t)/t dt for n >= 1, and
    Ji_0(x) = gamma + ln(x/2) - int_0^x (1 - J_0(t))/t dt.
    """
    _check_index(n)
    if not x > 0 or not math.isfinite(x):
        raise errors.DomainError(f"Ji_n(x) needs a finite x > 0, got {x!r}")

    if n == 0:

        def regular(t: float) -> float:
            # (1 - J_0(t))/t ~ t/4 near zero
            return 0.25 * t if t < 1e-8 else (1.0 - backends.bessel("J", 0, t)) / t

        inner = integrate_finite(regular, 0.0, x, cfg)
        offset = MATH.euler_gamma + math.log(0.5 * x)
        result = inner.scaled(-1.0, offset)
    else:

        def integrand(t: float) -> float:
            return backends.bessel("J", n, t) / t if t > 0 else (0.5 if n == 1 else 0.0)

        result = integrate_finite(integrand, 0.0, x, cfg).scaled(1.0, -1.0 / n)

    if not result.converged:
        logger.warning("Ji_%d(%r) did not converge, err_est=%.3g", n, x, result.err_est)
    return result
