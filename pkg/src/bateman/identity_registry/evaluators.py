"""
Shorthands the catalog modules use to write both sides of an identity.

Every helper returns a plain float; the registry only compares values.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence

from bateman.bateman_core import (
    FunctionId,
    Kernel,
    bateman_k,
    bateman_k_quadrature,
    derivative_x,
    havelock_h,
    havelock_h_quadrature,
    order_phase,
    plain_weight,
    trig_integral,
)
from bateman.generalized import GenParams, bateman_k_gen, havelock_h_gen
from bateman.quadrature import (
    DEFAULT_CONFIG,
    QuadConfig,
    derivative_richardson,
    euler_sum,
    integrate_finite,
)


def k(nu: float, x: float, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    return bateman_k(nu, x, cfg).value


def h(nu: float, x: float, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    return havelock_h(nu, x, cfg).value


def kq(nu: float, x: float, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    """k_nu(x) by quadrature of its defining integral, whatever the order."""
    return bateman_k_quadrature(nu, x, cfg).value


def hq(nu: float, x: float, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    return havelock_h_quadrature(nu, x, cfg).value


def dk(nu: float, x: float, order: int = 1, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    return derivative_x(FunctionId.BATEMAN_K, nu, x, order, cfg).value


def dh(nu: float, x: float, order: int = 1, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    return derivative_x(FunctionId.HAVELOCK_H, nu, x, order, cfg).value


def kg(nu: float, alpha: float, beta: float, x: float, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    return bateman_k_gen(GenParams(nu, alpha, beta), x, cfg).value


def hg(nu: float, alpha: float, beta: float, x: float, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    return havelock_h_gen(GenParams(nu, alpha, beta), x, cfg).value


def dhg(
    nu: float, alpha: float, x: float, order: int = 1, cfg: QuadConfig = DEFAULT_CONFIG
) -> float:
    return derivative_x(FunctionId.GEN_H, nu, x, order, cfg, params=(alpha, 0.0)).value


def t_form(
    kernel: Kernel,
    x: float,
    g: Callable[[float], float],
    nu: float = 0.0,
    cfg: QuadConfig = DEFAULT_CONFIG,
) -> float:
    """(2/pi) int_0^inf g(t) kernel(x t - nu atan t) dt, with g including any 1/(1+t^2)."""
    return trig_integral(kernel, x, g, order_phase(nu), cfg).value


def plain_t_form(kernel: Kernel, nu: float, x: float, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    return t_form(kernel, x, plain_weight, nu, cfg)


def theta_integral(
    f: Callable[[float], float], cfg: QuadConfig = DEFAULT_CONFIG, upper: float = 0.5 * math.pi
) -> float:
    """int_0^upper f(theta) d(theta), by default over [0, pi/2]."""
    return integrate_finite(f, 0.0, upper, cfg).value


def richardson(f: Callable[[float], float], x: float, order: int = 1) -> float:
    return derivative_richardson(f, x, order).value


def alternating_sum(terms: Sequence[float], depth: int = 40) -> float:
    """Sum of a series whose terms alternate in sign, accelerated by Euler averaging."""
    return euler_sum(list(terms), -1.0, depth).real


def truncation_length(t: float, eps: float = 1e-10) -> int:
    """Smallest N with |t|^N / (1 - |t|) < eps, for geometric tails in t."""
    t = abs(t)
    if t == 0:
        return 1
    return max(1, math.ceil(math.log(eps * (1.0 - t)) / math.log(t)))
