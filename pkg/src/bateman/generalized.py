"""
Generalized Bateman and Havelock functions with powers of cos(theta) and sin(theta).

    k_{nu,alpha,beta}(x) = (2/pi) int_0^(pi/2) cos^alpha sin^beta cos(x tan(theta) - nu theta)
    h_{nu,alpha,beta}(x) = (2/pi) int_0^(pi/2) cos^alpha sin^beta sin(x tan(theta) - nu theta)

With alpha = beta = 0 they reduce to k_nu and h_nu.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction

import attrs
import numpy as np

from bateman import backends, errors
from bateman.bateman_core import (
    Kernel,
    bateman_k,
    havelock_h,
    order_phase,
    power_weight,
    trig_integral,
)
from bateman.constants import MATH, MAX_WEIGHT_POWER, ORDER_SNAP_TOL
from bateman.quadrature import (
    DEFAULT_CONFIG,
    EvalResult,
    Method,
    QuadConfig,
    closed,
    richardson_extrapolate,
)

logger = logging.getLogger(__name__)

# Offset of the symmetric limit taken at the poles of Gamma(-alpha/2)
_LIMIT_EPS = 1e-4

# Above this |x| the Struve bracket loses too many digits to cancellation
_EVEN_LIMIT_MAX_X = 6.0


def _check_weight_power(instance: GenParams, attribute: attrs.Attribute, value: float) -> None:
    if instance.alpha + instance.beta >= MAX_WEIGHT_POWER:
        raise errors.DomainError(
            f"alpha + beta must stay below {MAX_WEIGHT_POWER}, got "
            f"{instance.alpha!r} + {instance.beta!r}"
        )


@attrs.frozen
class GenParams:
    """Order and weight powers of a generalized function.

    Attributes:
        nu: The order.
        alpha: Power of cos(theta), >= 0.
        beta: Power of sin(theta), >= 0.
    """

    nu: float = attrs.field(converter=float)
    alpha: float = attrs.field(default=0.0, converter=float, validator=attrs.validators.ge(0.0))
    beta: float = attrs.field(
        default=0.0,
        converter=float,
        validator=[attrs.validators.ge(0.0), _check_weight_power],
    )

    @property
    def is_plain(self) -> bool:
        return self.alpha == 0 and self.beta == 0

    def weight_params(self) -> tuple[float, float]:
        return self.alpha, self.beta


@attrs.frozen
class SPolynomial:
    """A polynomial S_{n,k}(x) of the explicit generalized Havelock form.

    Attributes:
        n: First index.
        k: Second index.
        coeffs: Exact coefficients in increasing powers of x.
    """

    n: int
    k: int
    coeffs: tuple[Fraction, ...]

    def __call__(self, x: float) -> float:
        return float(np.polynomial.polynomial.polyval(x, [float(c) for c in self.coeffs]))


def _poly(n: int, k: int, denominator: int, *numerators: int) -> SPolynomial:
    return SPolynomial(n, k, tuple(Fraction(c, denominator) for c in numerators))


S_POLYNOMIALS: dict[tuple[int, int], SPolynomial] = {
    (p.n, p.k): p
    for p in (
        _poly(2, 1, 6, 2, 1, 1),
        _poly(3, 1, 12, 2, 0, -1, 1),
        _poly(4, 1, 30, 4, 1, 2, -4, 1),
        _poly(5, 1, 180, 18, 0, -9, 31, -16, 2),
        _poly(3, 2, 48, 16, 7, 3, 1),
        _poly(4, 2, 120, 24, 6, 2, 1, 1),
        _poly(5, 2, 360, 48, 6, 0, -1, -2, 1),
        _poly(6, 2, 2520, 268, 30, 6, 5, 11, -44, 2),
    )
}


def s_polynomial(n: int, k: int, x: float) -> float:
    """Evaluates the tabulated polynomial S_{n,k}(x).

    Raises:
        UnsupportedPairError for an (n, k) pair without a tabulated polynomial.
    """
    try:
        return S_POLYNOMIALS[(n, k)](x)
    except KeyError:
        raise errors.UnsupportedPairError(f"No S polynomial for (n, k) = ({n}, {k})") from None


def bateman_k_gen_quadrature(
    p: GenParams, x: float, cfg: QuadConfig = DEFAULT_CONFIG
) -> EvalResult:
    weight = power_weight(p.alpha, p.beta)
    return trig_integral(Kernel.COS, x, weight, order_phase(p.nu), cfg)


def havelock_h_gen_quadrature(
    p: GenParams, x: float, cfg: QuadConfig = DEFAULT_CONFIG
) -> EvalResult:
    weight = power_weight(p.alpha, p.beta)
    return trig_integral(Kernel.SIN, x, weight, order_phase(p.nu), cfg)


def bateman_k_gen_bessel(alpha: float, x: float) -> EvalResult:
    """k_{0,alpha,0}(x) through the modified Bessel function K_((alpha+1)/2).

    k_{0,alpha,0}(x) = 2 (|x|/2)^((alpha+1)/2) K_((alpha+1)/2)(|x|) / (sqrt(pi) Gamma(alpha/2+1)).

    The form holds for every real alpha >= 0 and is even in x.
    """
    if x == 0:
        raise errors.DomainError("The Bessel form of k_{0,alpha} needs x != 0")
    half = abs(x) / 2.0
    order = 0.5 * (alpha + 1.0)
    kv = backends.bessel("K", order, abs(x))
    # Gamma(alpha/2 + 1) overflows long before alpha reaches the weight cap
    log_prefactor = order * math.log(half) - math.lgamma(0.5 * alpha + 1.0)
    value = 2.0 / MATH.sqrt_pi * math.exp(log_prefactor) * kv
    return closed(value, evals=1)


def _eq65_closed_form(p: GenParams, x: float, fn: Kernel) -> float | None:
    # k_{0,2,0} = (1+|x|) e^-|x| / 2, k_{0,0,2} = (1-|x|) e^-|x| / 2, h_{0,1,1} = x e^-|x| / 2
    if p.nu != 0:
        return None
    decay = math.exp(-abs(x))
    match (fn, p.alpha, p.beta):
        case (Kernel.COS, 2.0, 0.0):
            return 0.5 * (1.0 + abs(x)) * decay
        case (Kernel.COS, 0.0, 2.0):
            return 0.5 * (1.0 - abs(x)) * decay
        case (Kernel.SIN, 1.0, 1.0):
            return 0.5 * x * decay
        case _:
            return None


def bateman_k_gen(p: GenParams, x: float, cfg: QuadConfig = DEFAULT_CONFIG) -> EvalResult:
    """Generalized Bateman function k_{nu,alpha,beta}(x).

    Dispatch: alpha = beta = 0 delegates to `bateman_k`; the three elementary values with
    nu = 0; the Bessel form for nu = 0, beta = 0, x != 0; quadrature otherwise.

    Args:
        p: Order and weight powers.
        x: The argument, any real number.
        cfg: Quadrature settings.
    """
    if not math.isfinite(x):
        raise errors.DomainError(f"Argument must be finite, got {x!r}")
    if p.is_plain:
        return bateman_k(p.nu, x, cfg)

    elementary = _eq65_closed_form(p, x, Kernel.COS)
    if elementary is not None:
        return closed(elementary)
    if p.nu == 0 and p.beta == 0 and x != 0:
        return bateman_k_gen_bessel(p.alpha, x)

    logger.debug("k_{%r,%r,%r}(%r) by quadrature", p.nu, p.alpha, p.beta, x)
    result = bateman_k_gen_quadrature(p, x, cfg)
    if not result.converged:
        logger.warning(
            "k_{%r,%r,%r}(%r) did not converge, err_est=%.3g",
            p.nu,
            p.alpha,
            p.beta,
            x,
            result.err_est,
        )
    return result


def havelock_h_gen(p: GenParams, x: float, cfg: QuadConfig = DEFAULT_CONFIG) -> EvalResult:
    """Generalized Havelock function h_{nu,alpha,beta}(x).

    Dispatch: alpha = beta = 0 delegates to `havelock_h`; h_{0,1,1} in closed form; the
    symmetric Struve limit for nu = beta = 0, alpha = 2k with k >= 1 and 0 < |x| <= 6;
    quadrature otherwise. The Struve form of h_{0,alpha,0} for other alpha is exposed
    separately, as its two terms cancel for large x.
    """
    if not math.isfinite(x):
        raise errors.DomainError(f"Argument must be finite, got {x!r}")
    if p.is_plain:
        return havelock_h(p.nu, x, cfg)

    elementary = _eq65_closed_form(p, x, Kernel.SIN)
    if elementary is not None:
        return closed(elementary)
    half_alpha = 0.5 * p.alpha
    if (
        p.nu == 0
        and p.beta == 0
        and half_alpha >= 1
        and abs(half_alpha - round(half_alpha)) <= ORDER_SNAP_TOL
        and 0 < abs(x) <= _EVEN_LIMIT_MAX_X
    ):
        return h_gen_even_limit(int(round(half_alpha)), x)

    logger.debug("h_{%r,%r,%r}(%r) by quadrature", p.nu, p.alpha, p.beta, x)
    result = havelock_h_gen_quadrature(p, x, cfg)
    if not result.converged:
        logger.warning(
            "h_{%r,%r,%r}(%r) did not converge, err_est=%.3g",
            p.nu,
            p.alpha,
            p.beta,
            x,
            result.err_est,
        )
    return result


def _struve_form(half_alpha: float, x: float) -> float:
    # (1/sqrt(pi)) (x/2)^(k+1/2) Gamma(-k) [I_(k+1/2)(x) - L_(-k-1/2)(x)] with k = alpha/2
    order = half_alpha + 0.5
    bracket = backends.bessel("I", order, x) - backends.struve("L", -order, x)
    prefactor = (0.5 * x) ** order * backends.gamma(-half_alpha) / MATH.sqrt_pi
    return prefactor * bracket


def havelock_h_gen_struve(alpha: float, x: float) -> EvalResult:
    """h_{0,alpha,0}(x) through the modified Struve function.

    For alpha/2 = k a non-negative integer, Gamma(-k) has a pole that the vanishing
    bracket cancels; those points go through `h_gen_even_limit`. The function is odd in
    x, and |x| is limited to the Struve backend range.
    """
    if x == 0:
        return closed(0.0)
    if x < 0:
        return havelock_h_gen_struve(alpha, -x).scaled(-1.0)

    half_alpha = 0.5 * alpha
    if abs(half_alpha - round(half_alpha)) <= ORDER_SNAP_TOL:
        return h_gen_even_limit(int(round(half_alpha)), x)
    return closed(_struve_form(half_alpha, x), evals=3)


def h_gen_even_limit(k: int, x: float) -> EvalResult:
    """h_{0,2k,0}(x) for integer k as the symmetric limit of the Struve form.

    The average A(eps) of the values at k +- eps is even in eps, so one Richardson step
    with eps and eps/2 removes its eps^2 term.
    """
    if k < 0:
        raise errors.DomainError(f"The even-power limit needs k >= 0, got {k!r}")
    if x == 0:
        return closed(0.0)
    if x < 0:
        return h_gen_even_limit(k, -x).scaled(-1.0)

    averages = []
    for eps in (_LIMIT_EPS, 0.5 * _LIMIT_EPS):
        averages.append(0.5 * (_struve_form(k + eps, x) + _struve_form(k - eps, x)))
    diagonal = richardson_extrapolate(averages, 2.0, [2])
    err_est = abs(diagonal[-1] - diagonal[0]) / 16.0
    return EvalResult(diagonal[-1], err_est, Method.SERIES_LIMIT, evals=12)


def havelock_h_gen_s_form(n: int, k: int, x: float) -> EvalResult:
    """The explicit form h_{2n,2k}(x) = (1/pi) [k_2n(x) Ei(x) - 2 S_{n-k-1,k}(x)], n >= k+1.

    Only pairs with a tabulated S polynomial are supported. The form is kept as printed,
    including its index bookkeeping.

    Raises:
        UnsupportedPairError when S_{n-k-1,k} is not tabulated.
        DomainError for n < k + 1 or x <= 0.
    """
    if n < k + 1:
        raise errors.DomainError(f"The S-polynomial form needs n >= k + 1, got n={n}, k={k}")
    if x <= 0:
        raise errors.DomainError(f"The S-polynomial form needs x > 0, got {x!r}")
    s_value = s_polynomial(n - k - 1, k, x)
    k_value = bateman_k(2 * n, x).value
    value = (k_value * backends.exp_integral_ei(x) - 2.0 * s_value) / math.pi
    return closed(value, evals=3)

