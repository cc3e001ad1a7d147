"""
Identities of the Bateman functions k_n(x): values, bounds, closed forms, recurrences,
integral splits, confluent forms and derivative integrals.
"""

from __future__ import annotations

import math
from collections.abc import Iterator

import numpy as np

from bateman import backends
from bateman.bateman_core import (
    TWO_OVER_PI,
    FunctionId,
    Kernel,
    Weight,
    bateman_k_tricomi,
    derivative_nu,
    laguerre_form,
    plain_weight,
    power_weight,
)
from bateman.constants import MATH
from bateman.generalized import bateman_k_gen_bessel
from bateman.identity_registry.evaluators import (
    dh,
    dk,
    h,
    hq,
    k,
    kq,
    plain_t_form,
    richardson,
    t_form,
)
from bateman.identity_registry.identity import Evaluator, Identity, Sample, Tier, grid
from bateman.quadrature import QuadConfig

ASSERT, DIAGNOSE = Tier.ASSERT, Tier.DIAGNOSE

X_GRID = (0.5, 1.0, 2.0)

# Taylor coefficients of the generating function are read off a circle of this radius
_TAYLOR_RADIUS = 0.5
_TAYLOR_POINTS = 64

# Havelock's polynomials: k_2n(x) = c x P(x) e^-x, P in increasing powers of x
_HAVELOCK_POLYNOMIALS: dict[int, tuple[float, tuple[float, ...]]] = {
    0: (1.0, ()),
    1: (2.0, (1.0,)),
    2: (2.0, (-1.0, 1.0)),
    3: (2.0 / 3.0, (3.0, -6.0, 2.0)),
    4: (2.0 / 3.0, (-3.0, 9.0, -6.0, 1.0)),
    5: (2.0 / 15.0, (15.0, -60.0, 60.0, -20.0, 2.0)),
    6: (2.0 / 45.0, (-45.0, 225.0, -300.0, 150.0, -30.0, 2.0)),
}


def _taylor_coefficient(n: int, x: float) -> float:
    t = _TAYLOR_RADIUS * np.exp(2j * np.pi * np.arange(_TAYLOR_POINTS) / _TAYLOR_POINTS)
    values = np.exp(-x * (1.0 + t) / (1.0 - t))
    coefficients = np.fft.fft(values) / _TAYLOR_POINTS
    return float(coefficients[n].real) / _TAYLOR_RADIUS**n


def _havelock_polynomial(n: int, x: float) -> float:
    scale, coeffs = _HAVELOCK_POLYNOMIALS[n]
    if not coeffs:
        return math.exp(-x)
    return scale * x * float(np.polynomial.polynomial.polyval(x, coeffs)) * math.exp(-x)


def _rodrigues(n: int, x: float) -> float:
    # d^n/dx^n [p(x) e^-2x] = q(x) e^-2x with q built by n steps of q -> q' - 2q
    q = np.polynomial.Polynomial.basis(n - 1)
    for _ in range(n):
        q = q.deriv() - 2.0 * q
    return (-1.0) ** n * x * q(x) * math.exp(-x) / math.factorial(n)


def _bound_violation(n: int, x: float) -> float:
    value = abs(k(n, x))
    bounds = [1.0]
    if n > 2:
        bounds += [n / x, (n * n + 2.0) / (x * x)]
    if n % 2 == 0 and n > 0 and x > 1:
        bounds.append(n / x)
    return max(0.0, max(value - b for b in bounds))


def _pow_weight(power: float, exponent: float) -> Weight:
    def weight(t: float) -> float:
        return t**power * (1.0 + t * t) ** -exponent

    return weight


def _g(mu: float, x: float) -> float:
    # x^mu K_mu(x)
    return x**mu * backends.bessel("K", mu, x)


def _d_g(order: int, mu: float, x: float) -> float:
    # Derivatives of x^mu K_mu from (x^mu K_mu)' = -x (x^(mu-1) K_(mu-1))
    match order:
        case 1:
            return -x * _g(mu - 1.0, x)
        case 3:
            return 3.0 * x * _g(mu - 2.0, x) - x**3 * _g(mu - 3.0, x)
        case _:
            raise ValueError(f"No closed derivative of order {order}")


def _eq26_rhs(sign_shift: int) -> Evaluator:
    def rhs(p: Sample, cfg: QuadConfig) -> float:
        n, alpha, x = int(p["n"]), p["alpha"], p["x"]
        c = 2.0 ** (0.5 - alpha) * MATH.sqrt_pi / backends.gamma(alpha)
        return (-1.0) ** (n + sign_shift) * c * _d_g(2 * n + 1, alpha - 0.5, x)

    return rhs


def _eq26_lhs(odd_power: bool) -> Evaluator:
    def lhs(p: Sample, cfg: QuadConfig) -> float:
        n, alpha, x = int(p["n"]), p["alpha"], p["x"]
        power = 2 * n + 1 if odd_power else 2 * n
        return 0.5 * math.pi * t_form(Kernel.SIN, x, _pow_weight(power, alpha), cfg=cfg)

    return lhs


def _k1_printed(x: float) -> float:
    if x > 0:
        return TWO_OVER_PI * x * (backends.bessel("K", 1, x) - backends.bessel("K", 0, x))
    return -TWO_OVER_PI * x * (backends.bessel("K", 1, -x) + backends.bessel("K", 0, -x))


def _k1_corrected(x: float) -> float:
    if x > 0:
        return TWO_OVER_PI * x * (backends.bessel("K", 1, x) + backends.bessel("K", 0, x))
    return -TWO_OVER_PI * x * (backends.bessel("K", 1, -x) - backends.bessel("K", 0, -x))


def _k3_chain(x: float, corrected: bool) -> float:
    k0, k1, k2 = (backends.bessel("K", m, x) for m in (0, 1, 2))
    k0_prime = -k1
    if corrected:
        k1_prime = -0.5 * (k0 + k2)
        dk1 = TWO_OVER_PI * (k1 + k0) + TWO_OVER_PI * x * (k1_prime + k0_prime)
        k_minus_1 = TWO_OVER_PI * x * (k1 - k0)
    else:
        k1_prime = 0.5 * (k2 + k0)
        dk1 = TWO_OVER_PI * (k1 - k0) + TWO_OVER_PI * x * (k1_prime - k0_prime)
        k_minus_1 = k(-1, x)
    return -(4.0 * x * dk1 + k_minus_1) / 3.0


def _theta_power_weight(m: int) -> Weight:
    def weight(t: float) -> float:
        return math.atan(t) ** m * plain_weight(t)

    return weight


def _t_power_weight(m: int) -> Weight:
    def weight(t: float) -> float:
        return t**m * plain_weight(t)

    return weight


def identities() -> Iterator[Identity]:
    yield Identity(
        id="eq09_generating",
        citation='Eq (9), "e^(-x(1+t)/(1-t)) = sum t^n F_n(x), F_n(x) = (-1)^n k_2n(x)"',
        tier=ASSERT,
        samples=grid(n=range(7), x=(0.5, 1.0, 2.0, 5.0)),
        lhs=lambda p, cfg: _taylor_coefficient(int(p["n"]), p["x"]),
        rhs=lambda p, cfg: (-1.0) ** p["n"] * k(2 * p["n"], p["x"]),
        tol=1e-9,
        note="Taylor coefficients by FFT on the circle |t| = 1/2",
    )
    yield Identity(
        id="eq11_zero",
        citation='Eq (11) line 1, "k_n(0) = 2 sin(pi n/2) / (pi n)"',
        tier=ASSERT,
        samples=grid(n=range(1, 13)),
        lhs=lambda p, cfg: kq(p["n"], 0.0, cfg),
        rhs=lambda p, cfg: 2.0 * math.sin(0.5 * math.pi * p["n"]) / (math.pi * p["n"]),
        tol=1e-9,
    )
    yield Identity(
        id="eq11_decay",
        citation='Eq (11) line 2, "lim k_n(x) = lim k\'_n(x) = 0"',
        tier=ASSERT,
        samples=grid(n=range(7), x=(40.0,)),
        lhs=lambda p, cfg: abs(k(p["n"], p["x"], cfg)) + abs(dk(p["n"], p["x"], cfg=cfg)),
        rhs=lambda p, cfg: 0.0,
        tol=1e-6,
    )
    yield Identity(
        id="eq12_bounds",
        citation='Eq (12) lines 1-3, "|k_n(x)| <= 1; |k_n(x)| <= |n/x|; |k_2n(x)| <= |2n/x|"',
        tier=ASSERT,
        samples=grid(n=range(9), x=(0.5, 1.0, 2.0, 4.0, 8.0, 16.0)),
        lhs=lambda p, cfg: _bound_violation(int(p["n"]), p["x"]),
        rhs=lambda p, cfg: 0.0,
        tol=1e-12,
        note="Residual is the amount by which the tightest applicable bound is exceeded",
    )
    yield Identity(
        id="eq12_derivative_bound",
        citation='Eq (12) line 4, "|k\'_n(x)| <= |n/(2x)|"',
        tier=DIAGNOSE,
        samples=grid(n=range(5), x=(0.5, 1.0, 2.0, 4.0)),
        lhs=lambda p, cfg: max(0.0, abs(dk(p["n"], p["x"], cfg=cfg)) - p["n"] / (2.0 * p["x"])),
        rhs=lambda p, cfg: 0.0,
        note="Fails for n = 0, where k'_0 = -e^-x and the bound is zero",
    )
    yield Identity(
        id="eq13_L",
        citation='Eq (13), "k_2n(x) = (2/pi) L_n(x)"',
        tier=ASSERT,
        samples=grid(n=range(5), x=X_GRID),
        lhs=lambda p, cfg: k(2 * p["n"], p["x"]),
        # L_r = int cos(2 r phi - x tan(phi)) with the order 2r = 2n
        rhs=lambda p, cfg: TWO_OVER_PI
        * (0.5 * math.pi * plain_t_form(Kernel.COS, 2 * p["n"], p["x"], cfg)),
        tol=1e-8,
    )
    yield Identity(
        id="eq13_M",
        citation='Eq (13), "h_2n(x) = -(2/pi) M_n(x)"',
        tier=ASSERT,
        samples=grid(n=range(4), x=X_GRID),
        lhs=lambda p, cfg: h(2 * p["n"], p["x"]),
        # M_r = int sin(2 r phi - x tan(phi)) = -int sin(x tan(phi) - 2 r phi)
        rhs=lambda p, cfg: -TWO_OVER_PI
        * (-0.5 * math.pi * plain_t_form(Kernel.SIN, 2 * p["n"], p["x"], cfg)),
        tol=1e-8,
    )
    yield Identity(
        id="eq14_polynomials",
        citation='Eq (14), "k_4(x) = 2x(x-1)e^-x, ..., k_12(x) = (2/45)x(2x^5-...-45)e^-x"',
        tier=ASSERT,
        samples=grid(n=range(7), x=(0.5, 1.0, 2.0, 5.0)),
        lhs=lambda p, cfg: _havelock_polynomial(int(p["n"]), p["x"]),
        rhs=lambda p, cfg: laguerre_form(int(p["n"]), p["x"]),
        tol=1e-10,
    )
    yield Identity(
        id="eq15_rodrigues",
        citation='Eq (15), "k_2n(x) = (-1)^n x e^x / n! d^n/dx^n [x^(n-1) e^(-2x)]"',
        tier=ASSERT,
        samples=grid(n=range(1, 7), x=(0.5, 1.0, 2.0, 5.0)),
        lhs=lambda p, cfg: _rodrigues(int(p["n"]), p["x"]),
        rhs=lambda p, cfg: k(2 * p["n"], p["x"]),
        tol=1e-10,
    )
    yield Identity(
        id="eq17_laguerre",
        citation='Eq (17), "k_2n(x) = (-1)^n e^-x [L_n(2x) - L_(n-1)(2x)]"',
        tier=ASSERT,
        samples=grid(n=range(7), x=X_GRID),
        lhs=lambda p, cfg: laguerre_form(int(p["n"]), p["x"]),
        rhs=lambda p, cfg: kq(2 * p["n"], p["x"], cfg),
        tol=1e-8,
    )
    yield Identity(
        id="eq18_split",
        citation='Eq (18) line 3, "(2/pi) int cos(xt)/(1+t^2)^(3/2) + (2/pi) int t sin(xt)/(1+t^2)^(3/2)"',
        tier=ASSERT,
        samples=grid(x=X_GRID),
        lhs=lambda p, cfg: k(1, p["x"]),
        rhs=lambda p, cfg: t_form(Kernel.COS, p["x"], _pow_weight(0, 1.5), cfg=cfg)
        + t_form(Kernel.SIN, p["x"], _pow_weight(1, 1.5), cfg=cfg),
        tol=1e-8,
    )
    yield Identity(
        id="eq18_bessel_tail",
        citation='Eq (18) line 4, "(2/pi) int cos(xt)/(1+t^2)^(3/2) - (2x/pi) int cos(xt)/(1+t^2)^(1/2)"',
        tier=DIAGNOSE,
        samples=grid(x=X_GRID),
        lhs=lambda p, cfg: k(1, p["x"]),
        rhs=lambda p, cfg: t_form(Kernel.COS, p["x"], _pow_weight(0, 1.5), cfg=cfg)
        - p["x"] * t_form(Kernel.COS, p["x"], _pow_weight(0, 0.5), cfg=cfg),
        note="The printed minus sign gives k_-1; the plus sign gives k_1",
    )
    yield Identity(
        id="eq18_bessel_tail_corrected",
        citation='Eq (18) line 4, "... - (2x/pi) int cos(xt)/(1+t^2)^(1/2)", with a plus sign',
        tier=ASSERT,
        samples=grid(x=X_GRID),
        lhs=lambda p, cfg: k(1, p["x"]),
        rhs=lambda p, cfg: t_form(Kernel.COS, p["x"], _pow_weight(0, 1.5), cfg=cfg)
        + p["x"] * t_form(Kernel.COS, p["x"], _pow_weight(0, 0.5), cfg=cfg),
        tol=1e-7,
    )
    yield Identity(
        id="eq19_printed",
        citation='Eq (19), "k_1(x) = (2x/pi) [K_1(x) - K_0(x)]; x > 0"',
        tier=DIAGNOSE,
        samples=grid(x=(-2.0, -1.0, -0.5, 0.5, 1.0, 2.0)),
        lhs=lambda p, cfg: kq(1, p["x"], cfg),
        rhs=lambda p, cfg: _k1_printed(p["x"]),
        note="The printed branches belong to k_-1",
    )
    yield Identity(
        id="eq19_corrected",
        citation='Eq (19), "k_1(x) = (2x/pi) [K_1(x) - K_0(x)]; x > 0", branches exchanged',
        tier=ASSERT,
        samples=grid(x=(-2.0, -1.0, -0.5, 0.5, 1.0, 2.0)),
        lhs=lambda p, cfg: kq(1, p["x"], cfg),
        rhs=lambda p, cfg: _k1_corrected(p["x"]),
        tol=1e-8,
    )
    yield Identity(
        id="eq20_difference",
        citation='Eq (20) line 1, "(2x-2n) k_2n(x) = (n-1) k_(2n-2)(x) + (n+1) k_(2n+2)(x)"',
        tier=ASSERT,
        samples=grid(n=(1, 2, 3, 5), x=(0.5, 1.0, 2.0, 4.0)),
        lhs=lambda p, cfg: (2.0 * p["x"] - 2.0 * p["n"]) * k(2 * p["n"], p["x"]),
        rhs=lambda p, cfg: (p["n"] - 1.0) * k(2 * p["n"] - 2, p["x"])
        + (p["n"] + 1.0) * k(2 * p["n"] + 2, p["x"]),
        tol=1e-10,
    )
    yield Identity(
        id="eq20_derivative",
        citation='Eq (20) line 2, "4x k\'_n(x) = (n-2) k_(n-2)(x) - (n+2) k_(n+2)(x)"',
        tier=ASSERT,
        samples=grid(n=(0, 1, 2, 3), x=X_GRID),
        lhs=lambda p, cfg: 4.0 * p["x"] * dk(p["n"], p["x"], cfg=cfg),
        rhs=lambda p, cfg: (p["n"] - 2.0) * k(p["n"] - 2, p["x"])
        - (p["n"] + 2.0) * k(p["n"] + 2, p["x"]),
        tol=1e-7,
    )
    yield Identity(
        id="eq20_adjacent",
        citation='Eq (20) line 3, "k\'_n(x) + k\'_(n+2)(x) = k_n(x) - k_(n+2)(x)"',
        tier=ASSERT,
        samples=grid(n=(0, 1, 2, 3), x=X_GRID),
        lhs=lambda p, cfg: dk(p["n"], p["x"], cfg=cfg) + dk(p["n"] + 2, p["x"], cfg=cfg),
        rhs=lambda p, cfg: k(p["n"], p["x"]) - k(p["n"] + 2, p["x"]),
        tol=1e-7,
    )
    yield Identity(
        id="eq20_ode",
        citation='Eq (20) line 4, "x k\'\'_n(x) = (x-n) k_n(x)"',
        tier=ASSERT,
        samples=grid(n=(0, 1, 2, 3), x=X_GRID),
        lhs=lambda p, cfg: p["x"] * dk(p["n"], p["x"], 2, cfg),
        rhs=lambda p, cfg: (p["x"] - p["n"]) * k(p["n"], p["x"]),
        tol=1e-6,
    )
    yield Identity(
        id="eq21_line1",
        citation='Eq (21) line 1, "k_3(x) = -(1/3) [4x dk_1/dx + k_-1(x)]"',
        tier=ASSERT,
        samples=grid(x=X_GRID),
        lhs=lambda p, cfg: k(3, p["x"]),
        rhs=lambda p, cfg: -(4.0 * p["x"] * dk(1, p["x"], cfg=cfg) + k(-1, p["x"])) / 3.0,
        tol=1e-8,
    )
    yield Identity(
        id="eq21_chain",
        citation='Eq (21) lines 2-3, "dk_1/dx = (2/pi) [K_1 - K_0] + ...; dK_1/dx = (K_2 + K_0)/2"',
        tier=DIAGNOSE,
        samples=grid(x=X_GRID),
        lhs=lambda p, cfg: kq(3, p["x"], cfg),
        rhs=lambda p, cfg: _k3_chain(p["x"], corrected=False),
        note="Inherits the branch swap of the printed k_1 and the sign of dK_1/dx",
    )
    yield Identity(
        id="eq21_chain_corrected",
        citation='Eq (21) lines 2-3, with k_1 = (2x/pi)[K_1 + K_0] and dK_1/dx = -(K_0 + K_2)/2',
        tier=ASSERT,
        samples=grid(x=X_GRID),
        lhs=lambda p, cfg: kq(3, p["x"], cfg),
        rhs=lambda p, cfg: _k3_chain(p["x"], corrected=True),
        tol=1e-8,
    )
    yield Identity(
        id="eq22_k_minus_1",
        citation='Eq (22), "k_-1(x) = (2/pi) int cos(x tan) cos(theta) - (2/pi) int sin(x tan) sin(theta)"',
        tier=ASSERT,
        samples=grid(x=X_GRID),
        lhs=lambda p, cfg: k(-1, p["x"]),
        rhs=lambda p, cfg: t_form(Kernel.COS, p["x"], _pow_weight(0, 1.5), cfg=cfg)
        - t_form(Kernel.SIN, p["x"], _pow_weight(1, 1.5), cfg=cfg),
        tol=1e-8,
    )
    yield Identity(
        id="eq24_triple_angle",
        citation='Eq (24), "sin(3 theta) = t(3-t^2)/(1+t^2)^(3/2), cos(3 theta) = (1-3t^2)/(1+t^2)^(3/2)"',
        tier=ASSERT,
        samples=grid(theta=(0.1, 0.4, 0.7, 1.0, 1.3)),
        lhs=lambda p, cfg: _triple_angle_residual(p["theta"]),
        rhs=lambda p, cfg: 0.0,
        tol=1e-12,
    )
    yield Identity(
        id="eq25_k3",
        citation='Eqs (23)-(25), "k_3(x) = (2/pi) int (1-3t^2) cos(xt)/(1+t^2)^(5/2) + ..."',
        tier=ASSERT,
        samples=grid(x=X_GRID),
        lhs=lambda p, cfg: k(3, p["x"]),
        rhs=lambda p, cfg: t_form(Kernel.COS, p["x"], _k3_cos_weight, cfg=cfg)
        + t_form(Kernel.SIN, p["x"], _k3_sin_weight, cfg=cfg),
        tol=1e-8,
    )
    yield Identity(
        id="eq26_odd_power",
        citation='Eq (26) line 1, "int t^(2n+1) sin(xt)/(1+t^2)^alpha = (-1)^(n+1) ... d^(2n+1)/dx^(2n+1)"',
        tier=ASSERT,
        samples=grid(n=(0,), alpha=(1.0, 1.5, 2.5), x=X_GRID)
        + grid(n=(1,), alpha=(2.0, 2.5, 3.0), x=X_GRID),
        lhs=_eq26_lhs(odd_power=True),
        rhs=_eq26_rhs(sign_shift=1),
        tol=1e-7,
    )
    yield Identity(
        id="eq26_even_power",
        citation='Eq (26) line 2, "int t^(2n) sin(xt)/(1+t^2)^alpha = (-1)^n ... d^(2n+1)/dx^(2n+1)"',
        tier=DIAGNOSE,
        samples=grid(n=(0,), alpha=(1.0, 1.5), x=X_GRID) + grid(n=(1,), alpha=(2.0,), x=X_GRID),
        lhs=_eq26_lhs(odd_power=False),
        rhs=_eq26_rhs(sign_shift=0),
        note="The right side is minus the odd-power integral of line 1",
    )
    yield Identity(
        id="eq27_double_angle",
        citation='Eq (27), "sin(2 theta) = 2t/(1+t^2), cos(2 theta) = (1-t^2)/(1+t^2)"',
        tier=ASSERT,
        samples=grid(theta=(0.1, 0.4, 0.7, 1.0, 1.3)),
        lhs=lambda p, cfg: _double_angle_residual(p["theta"]),
        rhs=lambda p, cfg: 0.0,
        tol=1e-12,
    )
    yield from _derivative_integrals()
    yield Identity(
        id="eq29_symmetry",
        citation='Eq (29), "k_-n(x) = k_n(-x)"',
        tier=ASSERT,
        samples=grid(n=(1, 2, 3), x=X_GRID),
        lhs=lambda p, cfg: k(-p["n"], p["x"]),
        rhs=lambda p, cfg: kq(p["n"], -p["x"], cfg),
        tol=1e-8,
    )
    yield Identity(
        id="eq46_symmetry",
        citation='Eq (46), "h_-n(x) = -h_n(-x)"',
        tier=ASSERT,
        samples=grid(n=(1, 2, 3), x=X_GRID),
        lhs=lambda p, cfg: h(-p["n"], p["x"]),
        rhs=lambda p, cfg: -hq(p["n"], -p["x"], cfg),
        tol=1e-8,
    )
    yield Identity(
        id="eq42_whittaker",
        citation='Eq (42), "k_2nu(t/2) = W_(nu,1/2)(t) / Gamma(nu+1)"',
        tier=ASSERT,
        samples=grid(nu=(0.0, 0.25, 0.5, 1.0, 2.0), t=(1.0, 2.0, 4.0)),
        lhs=lambda p, cfg: k(2.0 * p["nu"], 0.5 * p["t"], cfg),
        # W_(nu,1/2)(t) = t e^(-t/2) U(1-nu, 2, t)
        rhs=lambda p, cfg: p["t"]
        * math.exp(-0.5 * p["t"])
        * backends.tricomi_u(1.0 - p["nu"], 2.0, p["t"])
        / backends.gamma(p["nu"] + 1.0),
        tol=1e-8,
    )
    yield from _confluent_forms()
    yield from _t_forms()


def _triple_angle_residual(theta: float) -> float:
    t = math.tan(theta)
    root = (1.0 + t * t) ** 1.5
    return max(
        abs(math.sin(3.0 * theta) - t * (3.0 - t * t) / root),
        abs(math.cos(3.0 * theta) - (1.0 - 3.0 * t * t) / root),
    )


def _double_angle_residual(theta: float) -> float:
    t = math.tan(theta)
    return max(
        abs(math.sin(2.0 * theta) - 2.0 * t / (1.0 + t * t)),
        abs(math.cos(2.0 * theta) - (1.0 - t * t) / (1.0 + t * t)),
    )


def _k3_cos_weight(t: float) -> float:
    return (1.0 - 3.0 * t * t) * (1.0 + t * t) ** -2.5


def _k3_sin_weight(t: float) -> float:
    return t * (3.0 - t * t) * (1.0 + t * t) ** -2.5


def _derivative_integrals() -> Iterator[Identity]:
    """x- and nu-derivatives against their integrals with tan^m or theta^m inserted."""
    integer_grid = grid(n=(1, 2, 3, 4), x=X_GRID)
    real_grid = grid(nu=(0.5, 1.5), x=X_GRID)

    yield Identity(
        id="eq28_even",
        citation='Eq (28) line 1, "d^2m k_n/dx^2m = (-1)^m (2/pi) int tan^2m cos(x tan - n theta)"',
        tier=ASSERT,
        samples=integer_grid,
        lhs=lambda p, cfg: richardson(lambda y: k(p["n"], y), p["x"], 2),
        rhs=lambda p, cfg: -t_form(Kernel.COS, p["x"], _t_power_weight(2), p["n"], cfg),
        tol=1e-5,
    )
    yield Identity(
        id="eq28_odd",
        citation='Eq (28) line 2, "d^(2m+1) k_n/dx^(2m+1) = (-1)^m (2/pi) int tan^(2m+1) sin(...)"',
        tier=DIAGNOSE,
        samples=integer_grid,
        lhs=lambda p, cfg: richardson(lambda y: k(p["n"], y), p["x"], 1),
        rhs=lambda p, cfg: t_form(Kernel.SIN, p["x"], _t_power_weight(1), p["n"], cfg),
        note="Odd derivatives carry (-1)^(m+1)",
    )
    yield Identity(
        id="eq28_odd_corrected",
        citation='Eq (28) line 2, "... = (-1)^m (2/pi) int tan^(2m+1) sin(...)", sign (-1)^(m+1)',
        tier=ASSERT,
        samples=integer_grid,
        lhs=lambda p, cfg: richardson(lambda y: k(p["n"], y), p["x"], 1),
        rhs=lambda p, cfg: -t_form(Kernel.SIN, p["x"], _t_power_weight(1), p["n"], cfg),
        tol=1e-5,
    )
    yield Identity(
        id="eq77_even",
        citation='Eq (77) line 1, "d^2k k_nu/dx^2k = (-1)^k (2/pi) int tan^2k cos(x tan - nu theta)"',
        tier=ASSERT,
        samples=real_grid,
        lhs=lambda p, cfg: richardson(lambda y: dk(p["nu"], y, cfg=cfg), p["x"], 1),
        rhs=lambda p, cfg: -t_form(Kernel.COS, p["x"], _t_power_weight(2), p["nu"], cfg),
        tol=1e-5,
    )
    yield Identity(
        id="eq77_odd",
        citation='Eq (77) line 2, "d^(2k+1) k_nu/dx^(2k+1) = (-1)^k (2/pi) int tan^(2k+1) sin(...)"',
        tier=DIAGNOSE,
        samples=real_grid,
        lhs=lambda p, cfg: richardson(lambda y: k(p["nu"], y, cfg), p["x"], 1),
        rhs=lambda p, cfg: t_form(Kernel.SIN, p["x"], _t_power_weight(1), p["nu"], cfg),
        note="Odd derivatives carry (-1)^(k+1)",
    )
    yield Identity(
        id="eq77_odd_corrected",
        citation='Eq (77) line 2, "... = (-1)^k (2/pi) int tan^(2k+1) sin(...)", sign (-1)^(k+1)',
        tier=ASSERT,
        samples=real_grid,
        lhs=lambda p, cfg: richardson(lambda y: k(p["nu"], y, cfg), p["x"], 1),
        rhs=lambda p, cfg: -t_form(Kernel.SIN, p["x"], _t_power_weight(1), p["nu"], cfg),
        tol=1e-5,
    )
    yield Identity(
        id="eq78_odd",
        citation='Eq (78) line 2, "d^(2k+1) h_nu/dx^(2k+1) = (-1)^k (2/pi) int tan^(2k+1) cos(...)"',
        tier=ASSERT,
        samples=real_grid,
        lhs=lambda p, cfg: richardson(lambda y: h(p["nu"], y, cfg), p["x"], 1),
        rhs=lambda p, cfg: t_form(Kernel.COS, p["x"], _t_power_weight(1), p["nu"], cfg),
        tol=1e-5,
    )
    yield Identity(
        id="eq78_even",
        citation='Eq (78) line 1, "d^2k h_nu/dx^2k = (-1)^k (2/pi) int tan^2k sin(x tan - nu theta)"',
        tier=ASSERT,
        samples=real_grid,
        lhs=lambda p, cfg: richardson(
            lambda y: dh(p["nu"], y, cfg=cfg), p["x"], 1
        ),
        rhs=lambda p, cfg: -t_form(Kernel.SIN, p["x"], _t_power_weight(2), p["nu"], cfg),
        tol=1e-5,
    )

    nu_grid = grid(nu=(0.5, 1.5), x=(-1.0, 0.5, 2.0))

    def d_nu(fn: FunctionId, nu: float, x: float, cfg: QuadConfig) -> float:
        return derivative_nu(fn, nu, x, 1, cfg).value

    yield Identity(
        id="eq79_odd",
        citation='Eq (79) line 2, "d^(2k+1) k_nu/dnu^(2k+1) = (-1)^k (2/pi) int theta^(2k+1) sin(...)"',
        tier=ASSERT,
        samples=nu_grid,
        lhs=lambda p, cfg: richardson(lambda v: k(v, p["x"], cfg), p["nu"], 1),
        rhs=lambda p, cfg: t_form(Kernel.SIN, p["x"], _theta_power_weight(1), p["nu"], cfg),
        tol=1e-5,
    )
    yield Identity(
        id="eq79_even",
        citation='Eq (79) line 1, "d^2k k_nu/dnu^2k = (-1)^k (2/pi) int theta^2k cos(x tan - nu theta)"',
        tier=ASSERT,
        samples=nu_grid,
        lhs=lambda p, cfg: richardson(
            lambda v: d_nu(FunctionId.BATEMAN_K, v, p["x"], cfg), p["nu"], 1
        ),
        rhs=lambda p, cfg: -t_form(Kernel.COS, p["x"], _theta_power_weight(2), p["nu"], cfg),
        tol=1e-5,
    )
    yield Identity(
        id="eq80_even",
        citation='Eq (80) line 1, "d^2k h_nu/dnu^2k = (-1)^k (2/pi) int theta^2k sin(x tan - nu theta)"',
        tier=ASSERT,
        samples=nu_grid,
        lhs=lambda p, cfg: richardson(
            lambda v: d_nu(FunctionId.HAVELOCK_H, v, p["x"], cfg), p["nu"], 1
        ),
        rhs=lambda p, cfg: -t_form(Kernel.SIN, p["x"], _theta_power_weight(2), p["nu"], cfg),
        tol=1e-5,
    )
    yield Identity(
        id="eq80_odd",
        citation='Eq (80) line 2, "d^(2k+1) h_nu/dnu^(2k+1) = (-1)^k (2/pi) int theta^(2k+1) cos(...)"',
        tier=DIAGNOSE,
        samples=nu_grid,
        lhs=lambda p, cfg: richardson(lambda v: h(v, p["x"], cfg), p["nu"], 1),
        rhs=lambda p, cfg: t_form(Kernel.COS, p["x"], _theta_power_weight(1), p["nu"], cfg),
        note="Odd nu-derivatives of h carry (-1)^(k+1)",
    )
    yield Identity(
        id="eq80_odd_corrected",
        citation='Eq (80) line 2, "... = (-1)^k (2/pi) int theta^(2k+1) cos(...)", sign (-1)^(k+1)',
        tier=ASSERT,
        samples=nu_grid,
        lhs=lambda p, cfg: richardson(lambda v: h(v, p["x"], cfg), p["nu"], 1),
        rhs=lambda p, cfg: -t_form(Kernel.COS, p["x"], _theta_power_weight(1), p["nu"], cfg),
        tol=1e-5,
    )


def _confluent_forms() -> Iterator[Identity]:
    yield Identity(
        id="eq74_whittaker",
        citation='Eq (74) line 1, "k_2nu(x) = W_(nu,1/2)(2x) / Gamma(nu+1)"',
        tier=ASSERT,
        samples=grid(nu=(0.0, 0.25, 0.5), x=X_GRID),
        lhs=lambda p, cfg: k(2.0 * p["nu"], p["x"], cfg),
        rhs=lambda p, cfg: backends.whittaker_w(p["nu"], 0.5, 2.0 * p["x"], cfg)
        / backends.gamma(p["nu"] + 1.0),
        tol=1e-8,
    )
    yield Identity(
        id="eq74_tricomi",
        citation='Eq (74) line 1, "k_2nu(x) = e^-x U(-nu, 0; 2x) / Gamma(nu+1)"',
        tier=ASSERT,
        samples=grid(nu=(0.5, 1.0, 1.5, 2.0), x=X_GRID),
        lhs=lambda p, cfg: k(2.0 * p["nu"], p["x"], cfg),
        rhs=lambda p, cfg: math.exp(-p["x"])
        * backends.tricomi_u(-p["nu"], 0.0, 2.0 * p["x"])
        / backends.gamma(p["nu"] + 1.0),
        tol=1e-8,
    )
    yield Identity(
        id="eq74_kummer_transform",
        citation='Eq (74) line 2, "U(-nu, 0; 2x) = 2x U(1-nu, 2; 2x)"',
        tier=ASSERT,
        samples=grid(nu=(0.5, 1.0, 1.5, 2.0), x=X_GRID),
        lhs=lambda p, cfg: backends.tricomi_u(-p["nu"], 0.0, 2.0 * p["x"]),
        rhs=lambda p, cfg: 2.0 * p["x"] * backends.tricomi_u(1.0 - p["nu"], 2.0, 2.0 * p["x"]),
        tol=1e-9,
    )
    yield Identity(
        id="eq74_kummer_m",
        citation='Eq (74) line 3, "k_(2n+2)(x) = 2x e^-x 1F1(-2n; 2; 2x)"',
        tier=DIAGNOSE,
        samples=grid(n=(0, 1, 2, 3), x=X_GRID),
        lhs=lambda p, cfg: k(2 * p["n"] + 2, p["x"]),
        rhs=lambda p, cfg: 2.0
        * p["x"]
        * math.exp(-p["x"])
        * backends.hyp_kummer_m(-2.0 * p["n"], 2.0, 2.0 * p["x"]),
        note="Holds for n = 0 only; the parameter is -n with the sign (-1)^n",
    )
    yield Identity(
        id="eq74_kummer_m_corrected",
        citation='Eq (74) line 3, "k_(2n+2)(x) = 2x e^-x 1F1(-2n; 2; 2x)", as (-1)^n 1F1(-n; 2; 2x)',
        tier=ASSERT,
        samples=grid(n=(0, 1, 2, 3), x=X_GRID),
        lhs=lambda p, cfg: k(2 * p["n"] + 2, p["x"]),
        rhs=lambda p, cfg: (-1.0) ** p["n"]
        * 2.0
        * p["x"]
        * math.exp(-p["x"])
        * backends.hyp_kummer_m(-p["n"], 2.0, 2.0 * p["x"]),
        tol=1e-10,
    )


def _t_forms() -> Iterator[Identity]:
    yield Identity(
        id="eq76_k_nu",
        citation='Eq (76) line 1, "k_nu(x) = (2/pi) int [cos(xt) cos(nu atan t) + sin(xt) sin(nu atan t)]/(1+t^2)"',
        tier=ASSERT,
        samples=grid(nu=(0.5, 1.5, 3.0), x=X_GRID),
        lhs=lambda p, cfg: plain_t_form(Kernel.COS, p["nu"], p["x"], cfg),
        rhs=lambda p, cfg: bateman_k_tricomi(p["nu"], p["x"]).value,
        tol=1e-8,
    )
    yield Identity(
        id="eq76_k_gen",
        citation='Eq (76) line 2, "k_(nu,alpha,beta)(x) = (2/pi) int t^beta [...]/(1+t^2)^(alpha/2+beta/2+1)"',
        tier=ASSERT,
        samples=grid(alpha=(0.5, 1.0, 3.0), x=X_GRID),
        lhs=lambda p, cfg: t_form(Kernel.COS, p["x"], power_weight(p["alpha"], 0.0), cfg=cfg),
        rhs=lambda p, cfg: bateman_k_gen_bessel(p["alpha"], p["x"]).value,
        tol=1e-8,
    )
    yield Identity(
        id="eq76_h_nu",
        citation='Eq (76) line 3, "h_nu(x) = (2/pi) int [sin(xt) cos(nu atan t) - cos(xt) sin(nu atan t)]/(1+t^2)"',
        tier=ASSERT,
        samples=grid(nu=(0, 2, 4), x=X_GRID),
        lhs=lambda p, cfg: plain_t_form(Kernel.SIN, p["nu"], p["x"], cfg),
        rhs=lambda p, cfg: h(p["nu"], p["x"]),
        tol=1e-8,
    )
    yield Identity(
        id="eq76_h_gen",
        citation='Eq (76) line 4, "h_(nu,alpha,beta)(x) = (2/pi) int t^beta [...]/(1+t^2)^(alpha/2+beta/2+1)"',
        tier=ASSERT,
        samples=grid(x=(-1.0, 0.5, 1.0, 2.0)),
        lhs=lambda p, cfg: t_form(Kernel.SIN, p["x"], power_weight(1.0, 1.0), cfg=cfg),
        rhs=lambda p, cfg: 0.5 * p["x"] * math.exp(-abs(p["x"])),
        tol=1e-8,
    )
