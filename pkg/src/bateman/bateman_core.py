"""
Bateman functions k_nu(x) and Havelock functions h_nu(x) of real order and argument.

Both are defined by the finite trigonometric integrals

    k_nu(x) = (2/pi) int_0^(pi/2) cos(x tan(theta) - nu theta) d(theta)
    h_nu(x) = (2/pi) int_0^(pi/2) sin(x tan(theta) - nu theta) d(theta)

which become semi-infinite Fourier integrals after substituting t = tan(theta). Integer orders
have closed forms (Laguerre polynomials, modified Bessel functions, the exponential integral);
everything else goes through oscillatory quadrature.
"""

from __future__ import annotations

import enum
import logging
import math
from collections.abc import Callable

import attrs
import numpy as np
import numpy.typing as npt

from bateman import backends, errors
from bateman.constants import ORDER_SNAP_TOL
from bateman.quadrature import (
    DEFAULT_CONFIG,
    EvalResult,
    Method,
    QuadConfig,
    closed,
    combine,
    integrate_finite,
    integrate_semiinf_oscillatory,
)

logger = logging.getLogger(__name__)

TWO_OVER_PI = 2.0 / math.pi

# Largest even order evaluated through the exponential-integral closed form of h
MAX_HAVELOCK_CLOSED_ORDER = 12

# Beyond this argument the closed form of h loses digits to cancellation against e^x Ei
MAX_HAVELOCK_CLOSED_ARG = 25.0

Weight = Callable[[float], float]
Phase = Callable[[float], float]


class OrderClass(enum.Enum):
    EVEN_INT = enum.auto()
    ODD_INT = enum.auto()
    HALF_INT = enum.auto()
    GENERAL = enum.auto()


@attrs.frozen
class Order:
    """The order nu of a Bateman or Havelock function.

    Attributes:
        value: The order, snapped to the nearest integer when within ORDER_SNAP_TOL of it.
        kind: Parity class driving the evaluation dispatch.
    """

    value: float
    kind: OrderClass

    @classmethod
    def of(cls, nu: Order | float) -> Order:
        return nu if isinstance(nu, Order) else classify_order(nu)

    @property
    def is_integer(self) -> bool:
        return self.kind in (OrderClass.EVEN_INT, OrderClass.ODD_INT)

    @property
    def n(self) -> int:
        if not self.is_integer:
            raise errors.DomainError(f"Order {self.value!r} is not an integer")
        return int(self.value)

    def __neg__(self) -> Order:
        return classify_order(-self.value)


OrderLike = Order | float


def classify_order(nu: float) -> Order:
    """Classifies an order, snapping near-integers to the integer."""
    if not math.isfinite(nu):
        raise errors.DomainError(f"Order must be finite, got {nu!r}")
    nearest = round(nu)
    if abs(nu - nearest) <= ORDER_SNAP_TOL:
        kind = OrderClass.EVEN_INT if nearest % 2 == 0 else OrderClass.ODD_INT
        return Order(float(nearest), kind)
    if abs(nu - 0.5 - round(nu - 0.5)) <= ORDER_SNAP_TOL:
        return Order(round(nu - 0.5) + 0.5, OrderClass.HALF_INT)
    return Order(float(nu), OrderClass.GENERAL)


class FunctionId(enum.Enum):
    BATEMAN_K = enum.auto()
    HAVELOCK_H = enum.auto()
    GEN_K = enum.auto()
    GEN_H = enum.auto()
    KI = enum.auto()


class Kernel(enum.Enum):
    """The trigonometric kernel of a Bateman-type integral."""

    COS = enum.auto()
    SIN = enum.auto()


def plain_weight(t: float) -> float:
    return 1.0 / (1.0 + t * t)


def power_weight(alpha: float, beta: float) -> Weight:
    """Returns the weight t^beta (1+t^2)^(-alpha/2-beta/2-1) of cos^alpha sin^beta."""
    if alpha == 0 and beta == 0:
        return plain_weight
    exponent = -0.5 * alpha - 0.5 * beta - 1.0

    def weight(t: float) -> float:
        # log space keeps large alpha + beta from overflowing before the powers cancel
        if t == 0:
            return 1.0 if beta == 0 else 0.0
        return math.exp(beta * math.log(t) + exponent * math.log1p(t * t))

    return weight


def trig_integral(
    kernel: Kernel, x: float, weight: Weight, phase: Phase, cfg: QuadConfig
) -> EvalResult:
    """Evaluates (2/pi) int_0^inf weight(t) kernel(x t - phase(t)) dt.

    For x != 0 the Fourier integral is split into the cos(|x| t) and sin(|x| t) parts of
    the oscillatory integrator. At x = 0 the integral is mapped back to theta = atan(t)
    on [0, pi/2], where it is an ordinary finite integral.
    """
    if x == 0:

        def integrand(theta: float) -> float:
            t = math.tan(theta)
            argument = -phase(t)
            trig = math.cos(argument) if kernel is Kernel.COS else math.sin(argument)
            return weight(t) * (1.0 + t * t) * trig

        return integrate_finite(integrand, 0.0, 0.5 * math.pi, cfg).scaled(TWO_OVER_PI)

    # cos(x t - p) with x < 0 equals cos(|x| t + p), and sin(x t - p) = -sin(|x| t + p)
    sign = 1.0 if x > 0 else -1.0

    def envelope_pair(t: float) -> tuple[float, float]:
        w = weight(t)
        p = sign * phase(t)
        if kernel is Kernel.COS:
            return w * math.cos(p), w * math.sin(p)
        return -w * math.sin(p), w * math.cos(p)

    result = integrate_semiinf_oscillatory(envelope_pair, abs(x), cfg)
    factor = TWO_OVER_PI if (kernel is Kernel.COS or x > 0) else -TWO_OVER_PI
    return result.scaled(factor)


def order_phase(nu: float, shift: float = 0.0) -> Phase:
    def phase(t: float) -> float:
        return nu * math.atan(t) + shift

    return phase


def bateman_k_quadrature(nu: OrderLike, x: float, cfg: QuadConfig = DEFAULT_CONFIG) -> EvalResult:
    """k_nu(x) straight from its defining integral."""
    order = Order.of(nu)
    return trig_integral(Kernel.COS, x, plain_weight, order_phase(order.value), cfg)


def havelock_h_quadrature(
    nu: OrderLike, x: float, cfg: QuadConfig = DEFAULT_CONFIG
) -> EvalResult:
    """h_nu(x) straight from its defining integral."""
    order = Order.of(nu)
    return trig_integral(Kernel.SIN, x, plain_weight, order_phase(order.value), cfg)


def special_value_at_zero(fn: FunctionId, nu: float) -> float:
    """Value of k_nu or h_nu at x = 0.

    k_nu(0) = (2 / (pi nu)) sin(pi nu / 2) and h_nu(0) = (2 / (pi nu)) (cos(pi nu / 2) - 1),
    with the continuous limits 1 and 0 at nu = 0. Integer orders use exact trig values.
    """
    order = Order.of(nu)
    if order.value == 0:
        return 1.0 if fn is FunctionId.BATEMAN_K else 0.0

    if order.is_integer:
        quarter = order.n % 4
        sin_value = (0.0, 1.0, 0.0, -1.0)[quarter]
        cos_value = (1.0, 0.0, -1.0, 0.0)[quarter]
    else:
        sin_value = math.sin(0.5 * math.pi * order.value)
        cos_value = math.cos(0.5 * math.pi * order.value)

    match fn:
        case FunctionId.BATEMAN_K:
            return TWO_OVER_PI * sin_value / order.value
        case FunctionId.HAVELOCK_H:
            return TWO_OVER_PI * (cos_value - 1.0) / order.value
        case _:
            raise errors.UnsupportedError(f"No special value at zero for {fn.name}")


def laguerre_form(m: int, x: float) -> float:
    """The analytic expression (-1)^m e^-x [L_m(2x) - L_(m-1)(2x)] of k_2m for x > 0.

    For m = 0 this is e^-x. The expression is evaluated for any real x; it equals k_2m
    only for x > 0.
    """
    if m == 0:
        return math.exp(-x)
    difference = backends.laguerre(m, 0.0, 2.0 * x) - backends.laguerre(m - 1, 0.0, 2.0 * x)
    return (-1.0) ** m * math.exp(-x) * difference


def bateman_k_bessel(nu: OrderLike, x: float) -> EvalResult:
    """k_1 and k_-1 through modified Bessel functions of the second kind.

    For x > 0, k_1(x) = (2x/pi) [K_1(x) + K_0(x)] and k_-1(x) = (2x/pi) [K_1(x) - K_0(x)];
    negative arguments follow from k_-n(x) = k_n(-x).
    """
    order = Order.of(nu)
    if order.value not in (1.0, -1.0):
        raise errors.UnsupportedOrderError(f"Bessel form covers orders +-1, got {order.value!r}")
    if x == 0:
        raise errors.DomainError("Bessel form of k_1 needs x != 0")
    if x < 0:
        order, x = -order, -x
    k0, k1 = backends.bessel("K", 0, x), backends.bessel("K", 1, x)
    return closed(TWO_OVER_PI * x * (k1 + order.value * k0), evals=2)


def bateman_k_tricomi(nu: OrderLike, x: float) -> EvalResult:
    """k_nu(x) = 2x e^-x U(1 - nu/2, 2, 2x) / Gamma(1 + nu/2) for x > 0.

    The reciprocal gamma vanishes at nu = -2, -4, ..., matching k_-2m(x) = 0 for x > 0.
    """
    order = Order.of(nu)
    if x <= 0:
        raise errors.DomainError(f"Confluent form of k_nu needs x > 0, got {x!r}")
    u = backends.tricomi_u(1.0 - 0.5 * order.value, 2.0, 2.0 * x)
    value = 2.0 * x * math.exp(-x) * u * backends.rgamma(1.0 + 0.5 * order.value)
    return closed(value, evals=2)


def _odd_order_recurrence(n: int, x: float) -> EvalResult:
    # k_(N+2) = [(2x - N) k_N - (N/2 - 1) k_(N-2)] / (N/2 + 1), upward from k_-1 and k_1
    previous = bateman_k_bessel(-1, x).value
    current = bateman_k_bessel(1, x).value
    for order in range(1, n, 2):
        half = 0.5 * order
        previous, current = current, ((2.0 * x - order) * current - (half - 1.0) * previous) / (
            half + 1.0
        )
    err = 8.0 * n * np.finfo(float).eps * max(abs(current), abs(previous), 1e-300)
    return EvalResult(current, err, Method.RECURRENCE, evals=4 + n)


def bateman_k(nu: OrderLike, x: float, cfg: QuadConfig = DEFAULT_CONFIG) -> EvalResult:
    """Bateman function k_nu(x).

    Dispatch: the special value at x = 0; the symmetry k_nu(-x) = k_-nu(x) for x < 0; the
    Laguerre form for even orders; the Bessel form for orders +-1; upward recurrence for odd
    orders >= 3; oscillatory quadrature otherwise.

    Args:
        nu: The order, any real number.
        x: The argument, any real number.
        cfg: Quadrature settings for the quadrature path.

    Returns:
        The value with its error estimate and the method used.
    """
    order = Order.of(nu)
    if not math.isfinite(x):
        raise errors.DomainError(f"Argument must be finite, got {x!r}")

    if x == 0:
        return closed(special_value_at_zero(FunctionId.BATEMAN_K, order.value))
    if x < 0:
        return bateman_k(-order, -x, cfg)

    if order.is_integer:
        n = order.n
        if n % 2 == 0:
            if n < 0:
                return closed(0.0, evals=0)
            return closed(laguerre_form(n // 2, x), evals=n // 2 + 1)
        if abs(n) == 1:
            return bateman_k_bessel(order, x)
        if n >= 3:
            return _odd_order_recurrence(n, x)

    logger.debug("k_%r(%r) by quadrature", order.value, x)
    result = bateman_k_quadrature(order, x, cfg)
    if not result.converged:
        logger.warning("k_%r(%r) did not converge, err_est=%.3g", order.value, x, result.err_est)
    return result


def _havelock_even_closed(m: int, x: float) -> float:
    # h_2m = (1/pi) [k_2m(x) Ei(x) - 2 Q_m(x)] with Q_1 = 1, Q_2 = x and
    # (j+1) Q_(j+1) = 2 - (2j - 2x) Q_j - (j-1) Q_(j-1)
    ei = backends.exp_integral_ei(x)
    if m == 0:
        return (math.exp(-x) * ei - math.exp(x) * backends.exp_integral_ei(-x)) / math.pi
    q_previous, q = 0.0, 1.0
    for j in range(1, m):
        q_previous, q = q, (2.0 - (2 * j - 2.0 * x) * q - (j - 1) * q_previous) / (j + 1)
    return (laguerre_form(m, x) * ei - 2.0 * q) / math.pi


def havelock_h(nu: OrderLike, x: float, cfg: QuadConfig = DEFAULT_CONFIG) -> EvalResult:
    """Havelock function h_nu(x).

    Dispatch: the special value at x = 0; the antisymmetry h_nu(-x) = -h_-nu(x) for x < 0;
    the exponential-integral closed form for even orders 0..12 up to x = 25; oscillatory
    quadrature otherwise.
    """
    order = Order.of(nu)
    if not math.isfinite(x):
        raise errors.DomainError(f"Argument must be finite, got {x!r}")

    if x == 0:
        return closed(special_value_at_zero(FunctionId.HAVELOCK_H, order.value))
    if x < 0:
        return havelock_h(-order, -x, cfg).scaled(-1.0)

    if (
        order.kind is OrderClass.EVEN_INT
        and 0 <= order.n <= MAX_HAVELOCK_CLOSED_ORDER
        and x <= MAX_HAVELOCK_CLOSED_ARG
    ):
        m = order.n // 2
        value = _havelock_even_closed(m, x)
        # The closed form cancels terms of size ~x^(m-1) down to a result of size ~1/x
        err = 16.0 * np.finfo(float).eps * max(1.0, x) ** max(m, 1)
        return EvalResult(value, err, Method.CLOSED, evals=m + 2)

    logger.debug("h_%r(%r) by quadrature", order.value, x)
    result = havelock_h_quadrature(order, x, cfg)
    if not result.converged:
        logger.warning("h_%r(%r) did not converge, err_est=%.3g", order.value, x, result.err_est)
    return result


def even_order_sequence(n_max: int, x: float) -> npt.NDArray[np.float64]:
    """Returns k_0(x), k_2(x), ..., k_(2 n_max)(x) from the even-order recurrence.

    Uses (n+1) k_(2n+2) = (2x - 2n) k_2n - (n-1) k_(2n-2) for x > 0.
    """
    values = np.zeros(n_max + 1)
    if x < 0:
        values[0] = math.exp(x)
        return values
    if x == 0:
        values[0] = 1.0
        return values

    values[0] = math.exp(-x)
    if n_max >= 1:
        values[1] = 2.0 * x * math.exp(-x)
    for n in range(1, n_max):
        values[n + 1] = ((2.0 * x - 2.0 * n) * values[n] - (n - 1) * values[n - 1]) / (n + 1)
    return values


def _base_weight(fn: FunctionId, params: tuple[float, float] | None) -> tuple[Weight, Kernel]:
    match fn:
        case FunctionId.BATEMAN_K:
            return plain_weight, Kernel.COS
        case FunctionId.HAVELOCK_H:
            return plain_weight, Kernel.SIN
        case FunctionId.GEN_K | FunctionId.GEN_H:
            alpha, beta = params if params is not None else (0.0, 0.0)
            kernel = Kernel.COS if fn is FunctionId.GEN_K else Kernel.SIN
            return power_weight(alpha, beta), kernel
        case _:
            raise errors.UnsupportedError(f"No integral representation for {fn.name}")


def derivative_x(
    fn: FunctionId,
    nu: OrderLike,
    x: float,
    order: int = 1,
    cfg: QuadConfig = DEFAULT_CONFIG,
    params: tuple[float, float] | None = None,
) -> EvalResult:
    """Derivative of order 1 or 2 with respect to the argument.

    Differentiating under the integral multiplies the weight by t^m and advances the
    kernel by m pi / 2. For `FunctionId.KI` the relation x ki'_2n(x) = k_2n(x) is used, with
    `nu` the first index 2n.

    Args:
        fn: Which function to differentiate.
        nu: The order.
        x: The argument, nonzero.
        order: Derivative order, 1 or 2.
        cfg: Quadrature settings.
        params: (alpha, beta) for the generalized functions.

    Raises:
        DomainError at x = 0.
        UnsupportedOrderError for derivative orders above 2.
    """
    if order < 1:
        raise ValueError(f"Derivative order must be >= 1, got {order!r}")
    if order > 2:
        raise errors.UnsupportedOrderError(
            f"x-derivatives are supported up to order 2, got {order}"
        )
    if x == 0:
        raise errors.DomainError("x-derivatives are evaluated for x != 0")
    nu_value = Order.of(nu).value

    if fn is FunctionId.KI:
        if x <= 0:
            raise errors.DomainError(f"ki derivatives need x > 0, got {x!r}")
        k = bateman_k(nu_value, x, cfg)
        if order == 1:
            return k.scaled(1.0 / x)
        k_prime = derivative_x(FunctionId.BATEMAN_K, nu_value, x, 1, cfg)
        return combine([(1.0 / x, k_prime), (-1.0 / (x * x), k)])

    base, kernel = _base_weight(fn, params)

    def weight(t: float) -> float:
        return t**order * base(t)

    return trig_integral(kernel, x, weight, order_phase(nu_value, -0.5 * math.pi * order), cfg)


def derivative_nu(
    fn: FunctionId,
    nu: OrderLike,
    x: float,
    order: int = 1,
    cfg: QuadConfig = DEFAULT_CONFIG,
    params: tuple[float, float] | None = None,
) -> EvalResult:
    """Derivative of any order with respect to the order nu.

    Differentiating under the integral multiplies the integrand by theta^m and shifts the
    kernel by m pi / 2; the weight stays bounded, so every order converges.
    """
    if order < 1:
        raise ValueError(f"Derivative order must be >= 1, got {order!r}")
    nu_value = Order.of(nu).value
    base, kernel = _base_weight(fn, params)

    def weight(t: float) -> float:
        return math.atan(t) ** order * base(t)

    return trig_integral(kernel, x, weight, order_phase(nu_value, 0.5 * math.pi * order), cfg)
