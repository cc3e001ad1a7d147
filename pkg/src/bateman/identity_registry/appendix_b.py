"""
Trigonometric integrals of Giuliani and Bateman, the differential equations they satisfy, and
their confluent hypergeometric forms.
"""

from __future__ import annotations

import math
from collections.abc import Iterator

from bateman import backends
from bateman.bateman_core import Kernel
from bateman.giuliani import HALF_PI, bateman_i, giuliani_i, giuliani_u, giuliani_v
from bateman.identity_registry.evaluators import kg, t_form
from bateman.identity_registry.identity import Identity, Sample, Tier, grid
from bateman.quadrature import QuadConfig, integrate_finite

ASSERT, DIAGNOSE = Tier.ASSERT, Tier.DIAGNOSE

# Residual tolerance of the differential equations, whose terms are quadrature-valued
ODE_TOL = 1e-5


def _i(p: Sample, cfg: QuadConfig, derivative: int = 0) -> float:
    return giuliani_i(p["n"], p["alpha"], p["x"], derivative, cfg).value


def _u(p: Sample, cfg: QuadConfig, derivative: int = 0, alpha_shift: float = 0.0) -> float:
    return giuliani_u(p["n"], p["alpha"] + alpha_shift, p["x"], derivative, cfg).value


def _v(p: Sample, cfg: QuadConfig, derivative: int = 0, alpha_shift: float = 0.0) -> float:
    return giuliani_v(p["n"], p["alpha"] + alpha_shift, p["x"], derivative, cfg).value


def _giuliani_ode(p: Sample, cfg: QuadConfig) -> float:
    n, alpha, x = p["n"], p["alpha"], p["x"]
    return (
        4.0 * x * _i(p, cfg, 2)
        - 4.0 * (alpha - 1.0) * _i(p, cfg, 1)
        - (x + 2.0 * n) * _i(p, cfg)
    )


def _first_order_system(p: Sample, cfg: QuadConfig, for_u: bool) -> float:
    own, other = (_u, _v) if for_u else (_v, _u)
    return (
        2.0 * (p["alpha"] - 1.0) * own(p, cfg, 1)
        + 0.5 * p["x"] * own(p, cfg, alpha_shift=-2.0)
        - p["n"] * other(p, cfg)
    )


def _second_order_system(p: Sample, cfg: QuadConfig, for_u: bool) -> float:
    own, other = (_u, _v) if for_u else (_v, _u)
    x = p["x"]
    return (
        2.0 * x * own(p, cfg, 2)
        - 2.0 * (p["alpha"] - 1.0) * own(p, cfg, 1)
        - 0.5 * x * own(p, cfg)
        + p["n"] * other(p, cfg)
    )


def _fourth_order(p: Sample, cfg: QuadConfig, printed: bool) -> float:
    n, alpha, x = p["n"], p["alpha"], p["x"]
    quarter = -0.25 * x * x if printed else 0.25 * x * x
    return (
        4.0 * x * x * _u(p, cfg, 4)
        - 8.0 * (alpha - 2.0) * x * _u(p, cfg, 3)
        - 2.0 * (x * x - 2.0 * (alpha - 1.0) * (alpha - 2.0)) * _u(p, cfg, 2)
        + 2.0 * x * (alpha - 2.0) * _u(p, cfg, 1)
        + (quarter - n * n - 1.0 + alpha) * _u(p, cfg)
    )


def _v_from_u(p: Sample, cfg: QuadConfig) -> float:
    n, alpha, x = p["n"], p["alpha"], p["x"]
    return (
        -2.0 * x * _u(p, cfg, 2) + 2.0 * (alpha - 1.0) * _u(p, cfg, 1) + 0.5 * x * _u(p, cfg)
    ) / n


def _kummer_difference(p: Sample) -> float:
    n, alpha, x = p["n"], p["alpha"], p["x"]
    a_minus, a_plus = 0.5 * (alpha - n + 1.0), 0.5 * (alpha + n + 1.0)
    scale = 2.0**alpha
    first = math.pi * backends.gamma(alpha - 1.0) * math.exp(-0.5 * x)
    first /= scale * backends.gamma(a_minus) * backends.gamma(a_plus)
    second = math.pi**2 * math.cos(0.5 * (alpha - n)) * x**alpha * math.exp(-0.5 * x)
    second /= scale * math.sin(math.pi * alpha) * backends.gamma(alpha)
    return first * backends.hyp_kummer_m(a_minus, 1.0 - alpha, x) - second * (
        backends.hyp_kummer_m(a_plus, alpha + 1.0, x)
    )


def _kummer_sum(p: Sample) -> float:
    n, alpha, x = p["n"], p["alpha"], p["x"]
    scale = 2.0**alpha
    first = math.pi * backends.gamma(alpha - 1.0) * math.exp(-0.5 * x)
    first /= scale * backends.gamma(0.5 * (alpha + n + 1.0)) * backends.gamma(
        0.5 * (alpha - n + 1.0)
    )
    second = math.pi**2 * math.cos(0.5 * (alpha + n)) * x**alpha * math.exp(-0.5 * x)
    second /= scale * math.sin(math.pi * alpha) * backends.gamma(alpha)
    return first * backends.hyp_kummer_m(0.5 * (1.0 - alpha - n), 1.0 - alpha, x) - second * (
        backends.hyp_kummer_m(0.5 * (alpha - n + 1.0), alpha + 1.0, x)
    )


def _kummer_k(nu: float, alpha: float, x: float, negative: bool) -> float:
    """The printed confluent forms of k_{-nu,alpha,0} (negative) and k_{nu,alpha,0}."""
    scale = 2.0**alpha
    tail = math.pi * x ** (alpha + 1.0) * math.exp(-x)
    tail /= scale * math.sin(math.pi * (alpha + 1.0)) * backends.gamma(alpha + 1.0)
    if negative:
        head = backends.gamma(alpha) * math.exp(-x)
        head /= scale * backends.gamma(0.5 * (alpha - nu) + 1.0) * backends.gamma(
            0.5 * (alpha + nu)
        )
        return head * backends.hyp_kummer_m(
            0.5 * (alpha - nu) + 1.0, -alpha, 2.0 * x
        ) - tail * math.cos(0.5 * (alpha - nu + 1.0)) * backends.hyp_kummer_m(
            0.5 * (alpha + nu) + 1.0, alpha + 2.0, 2.0 * x
        )
    head = backends.gamma(alpha) * math.exp(-x)
    head /= scale * backends.gamma(0.5 * (alpha + nu) + 1.0) * backends.gamma(
        0.5 * (alpha - nu) + 1.0
    )
    return head * backends.hyp_kummer_m(
        0.5 * (-alpha - nu), -alpha, 2.0 * x
    ) - tail * math.cos(0.5 * (alpha + nu + 1.0)) * backends.hyp_kummer_m(
        0.5 * (alpha - nu) + 1.0, alpha + 2.0, 2.0 * x
    )


def _infinite_form(alpha: float, x: float, cfg: QuadConfig) -> float:
    # t_form carries a factor 2/pi
    exponent = -0.5 * alpha - 1.0
    return HALF_PI * t_form(Kernel.COS, 0.5 * x, lambda t: (1.0 + t * t) ** exponent, cfg=cfg)


def _bateman_ode(p: Sample, cfg: QuadConfig) -> float:
    n, alpha, beta, x = p["n"], p["alpha"], p["beta"], p["x"]

    def d(order: int) -> float:
        return bateman_i(n, alpha, beta, x, order, cfg).value

    return x * d(3) - (alpha - 1.0) * d(2) - (x + n) * d(1) - beta * d(0)


def _bateman_power_form(m: int, n: float, x: float, cfg: QuadConfig) -> float:
    def integrand(t: float) -> float:
        return t**m * (1.0 - t) ** (n - 1.0) * math.exp(-2.0 * x / t) if t > 0 else 0.0

    integral = integrate_finite(integrand, 0.0, 1.0, cfg).value
    return math.exp(x) * math.sin(math.pi * n) / 2.0 ** (m + 1) * integral


def identities() -> Iterator[Identity]:
    i_grid = grid(n=(0, 1, 2), alpha=(3.0, 4.5), x=(1.0, 2.0, 4.0))
    uv_grid = grid(n=(1, 2), alpha=(3.5, 4.5), x=(1.0, 2.0, 4.0))
    fourth_grid = grid(n=(1, 2), alpha=(5.0, 6.0), x=(1.0, 2.0))

    yield Identity(
        id="B2",
        citation='(B.2), "int_0^(pi/2) cos^(a-1) cos((x/2) tan t + n t) dt = '
        '(pi/2) k_(-n,a-1)(x/2)"',
        tier=ASSERT,
        samples=grid(n=(0, 1, 2), alpha=(1.5, 3.0), x=(0.5, 1.0, 2.0)),
        lhs=lambda p, cfg: _i(p, cfg),
        rhs=lambda p, cfg: HALF_PI * kg(-p["n"], p["alpha"] - 1.0, 0.0, 0.5 * p["x"], cfg),
    )
    yield Identity(
        id="B3",
        citation='(B.3), "4x I\'\' - 4(a-1) I\' - (x+2n) I(x) = 0"',
        tier=ASSERT,
        samples=i_grid,
        lhs=_giuliani_ode,
        rhs=lambda p, cfg: 0.0,
        tol=ODE_TOL,
    )
    yield Identity(
        id="B5",
        citation='(B.5), "int_0^(pi/2) cos^(a-1) cos((x/2) tan t + n t) dt = U_n(a,x) - V_n(a,x)"',
        tier=ASSERT,
        samples=i_grid,
        lhs=lambda p, cfg: _i(p, cfg),
        rhs=lambda p, cfg: _u(p, cfg) - _v(p, cfg),
    )
    yield Identity(
        id="B6_u",
        citation='(B.6) line 1, "2(a-1) U\'_n(a,x) + (x/2) U_n(a-2,x) - n V_n(a,x) = 0"',
        tier=ASSERT,
        samples=uv_grid,
        lhs=lambda p, cfg: _first_order_system(p, cfg, for_u=True),
        rhs=lambda p, cfg: 0.0,
        tol=ODE_TOL,
    )
    yield Identity(
        id="B6_v",
        citation='(B.6) line 2, "2(a-1) V\'_n(a,x) + (x/2) V_n(a-2,x) - n U_n(a,x) = 0"',
        tier=ASSERT,
        samples=uv_grid,
        lhs=lambda p, cfg: _first_order_system(p, cfg, for_u=False),
        rhs=lambda p, cfg: 0.0,
        tol=ODE_TOL,
    )
    yield Identity(
        id="B7_u",
        citation='(B.7) line 1, "2x U\'\' - 2(a-1) U\' - (x/2) U + n V = 0"',
        tier=ASSERT,
        samples=uv_grid,
        lhs=lambda p, cfg: _second_order_system(p, cfg, for_u=True),
        rhs=lambda p, cfg: 0.0,
        tol=ODE_TOL,
    )
    yield Identity(
        id="B7_v",
        citation='(B.7) line 2, "2x V\'\' - 2(a-1) V\' - (x/2) V + n U = 0"',
        tier=ASSERT,
        samples=uv_grid,
        lhs=lambda p, cfg: _second_order_system(p, cfg, for_u=False),
        rhs=lambda p, cfg: 0.0,
        tol=ODE_TOL,
    )
    yield Identity(
        id="B8",
        citation='(B.8) lines 1-3, "4x^2 U\'\'\'\' - 8(a-2) x U\'\'\' - 2[x^2 - 2(a-1)(a-2)] U\'\' '
        '+ 2x(a-2) U\' - (x^2/4 + n^2 + 1 - a) U = 0"',
        tier=DIAGNOSE,
        samples=fourth_grid,
        lhs=lambda p, cfg: _fourth_order(p, cfg, printed=True),
        rhs=lambda p, cfg: 0.0,
        note="The x^2/4 term carries the wrong sign",
    )
    yield Identity(
        id="B8_corrected",
        citation='(B.8) lines 1-3, "4x^2 U\'\'\'\' - 8(a-2) x U\'\'\' - 2[x^2 - 2(a-1)(a-2)] U\'\' '
        '+ 2x(a-2) U\' + (x^2/4 - n^2 - 1 + a) U = 0"',
        tier=ASSERT,
        samples=fourth_grid,
        lhs=lambda p, cfg: _fourth_order(p, cfg, printed=False),
        rhs=lambda p, cfg: 0.0,
        tol=ODE_TOL,
        note="Eliminating V from (B.7) gives +x^2/4 in the last coefficient",
    )
    yield Identity(
        id="B8_v",
        citation='(B.8) line 4, "V_n(a,x) = (1/n)(-2x U\'\' + 2(a-1) U\' + (x/2) U)"',
        tier=ASSERT,
        samples=uv_grid,
        lhs=lambda p, cfg: _v(p, cfg),
        rhs=_v_from_u,
        tol=ODE_TOL,
    )
    yield from _confluent_forms()
    yield Identity(
        id="B13",
        citation='(B.13), "int_0^(pi/2) cos^a t cos((x/2) tan t) dt = '
        'int_0^inf cos(x t/2) / (1+t^2)^(a/2+1) dt"',
        tier=ASSERT,
        samples=grid(alpha=(1.0, 2.0, 3.5), x=(0.5, 1.0, 2.0)),
        lhs=lambda p, cfg: HALF_PI * kg(0.0, p["alpha"], 0.0, 0.5 * p["x"], cfg),
        rhs=lambda p, cfg: _infinite_form(p["alpha"], p["x"], cfg),
        tol=1e-7,
    )
    yield Identity(
        id="B14",
        citation='(B.14), "x I\'\'\' - (a-1) I\'\' - (x+n) I\' - b I(x) = 0"',
        tier=ASSERT,
        samples=grid(n=(0, 1), alpha=(3.0, 4.0), beta=(1.0, 2.0), x=(1.0, 2.0)),
        lhs=_bateman_ode,
        rhs=lambda p, cfg: 0.0,
        tol=ODE_TOL,
    )

    bateman_grid = grid(n=(0, 1, 2), alpha=(1.0, 2.0), beta=(1.0, 2.0), x=(0.5, 1.0, 2.0))
    yield Identity(
        id="B15",
        citation='(B.15), "int_0^(pi/2) cos^a t sin^(b-1) t cos(x tan t + n t) dt = '
        '(pi/2) k_(n,a,b-1)(x)"',
        tier=DIAGNOSE,
        samples=bateman_grid,
        lhs=lambda p, cfg: bateman_i(p["n"], p["alpha"], p["beta"], p["x"], cfg=cfg).value,
        rhs=lambda p, cfg: HALF_PI * kg(p["n"], p["alpha"], p["beta"] - 1.0, p["x"], cfg),
        note="The order on the right side needs the opposite sign",
    )
    yield Identity(
        id="B15_corrected",
        citation='(B.15), "int_0^(pi/2) cos^a t sin^(b-1) t cos(x tan t + n t) dt = '
        '(pi/2) k_(-n,a,b-1)(x)"',
        tier=ASSERT,
        samples=bateman_grid,
        lhs=lambda p, cfg: bateman_i(p["n"], p["alpha"], p["beta"], p["x"], cfg=cfg).value,
        rhs=lambda p, cfg: HALF_PI * kg(-p["n"], p["alpha"], p["beta"] - 1.0, p["x"], cfg),
    )
    yield Identity(
        id="B16_power",
        citation='(B.16) line 1, "int_0^(pi/2) cos^m t cos[x tan t + (m+2n) t] dt = '
        'e^x sin(pi n)/2^(k+1) int_0^1 t^k (1-t)^(n-1) e^(-2x/t) dt"',
        tier=ASSERT,
        samples=grid(m=(1, 2), n=(0.5, 1.5), x=(0.5, 1.0)),
        lhs=lambda p, cfg: HALF_PI * kg(-(p["m"] + 2.0 * p["n"]), p["m"], 0.0, p["x"], cfg),
        rhs=lambda p, cfg: _bateman_power_form(int(p["m"]), p["n"], p["x"], cfg),
        tol=1e-6,
        note="The superscript k is read as m",
    )
    yield Identity(
        id="B16_plain",
        citation='(B.16) line 2, "e^x sin(pi n)/2 int_0^1 (1-t)^(n-1) e^(-2x/t) dt = '
        '(pi/2) k_(-2n)(x)"',
        tier=ASSERT,
        samples=grid(n=(0.5, 1.5, 2.5), x=(0.5, 1.0, 2.0)),
        lhs=lambda p, cfg: _bateman_power_form(0, p["n"], p["x"], cfg),
        rhs=lambda p, cfg: HALF_PI * kg(-2.0 * p["n"], 0.0, 0.0, p["x"], cfg),
        tol=1e-6,
    )


def _confluent_forms() -> Iterator[Identity]:
    kummer_grid = grid(n=(0, 1), alpha=(2.5, 3.5), x=(1.0, 2.0))
    yield Identity(
        id="B9",
        citation='(B.9), "U_n(a,x) - V_n(a,x) = pi G(a-1) e^(-x/2) / (2^a G((a-n+1)/2) '
        'G((a+n+1)/2)) 1F1((a-n+1)/2; 1-a; x) - pi^2 cos((a-n)/2) x^a e^(-x/2) / '
        '(2^a sin(pi a) G(a)) 1F1((a+n+1)/2; a+1; x)"',
        tier=DIAGNOSE,
        samples=kummer_grid,
        lhs=lambda p, cfg: _u(p, cfg) - _v(p, cfg),
        rhs=lambda p, cfg: _kummer_difference(p),
        note="Measured as printed",
    )
    yield Identity(
        id="B10",
        citation='(B.10), "U_n(a,x) + V_n(a,x) = pi G(a-1) e^(-x/2) / (2^a G((a+n+1)/2) '
        'G((a-n+1)/2)) 1F1((1-a-n)/2; 1-a; x) - pi^2 cos((a+n)/2) x^a e^(-x/2) / '
        '(2^a sin(pi a) G(a)) 1F1((a-n+1)/2; a+1; x)"',
        tier=DIAGNOSE,
        samples=kummer_grid,
        lhs=lambda p, cfg: _u(p, cfg) + _v(p, cfg),
        rhs=lambda p, cfg: _kummer_sum(p),
        note="Measured as printed",
    )

    k_grid = grid(nu=(0.5, 1.0), alpha=(1.5, 2.5), x=(0.5, 1.0))
    yield Identity(
        id="B11",
        citation='(B.11), "k_(-v,a,0)(x) = G(a) e^-x / (2^a G((a-v)/2+1) G((a+v)/2)) '
        '1F1((a-v)/2+1; -a; 2x) - pi cos((a-v+1)/2) x^(a+1) e^-x / '
        '(2^a sin[pi(a+1)] G(a+1)) 1F1((a+v)/2+1; a+2; 2x)"',
        tier=DIAGNOSE,
        samples=k_grid,
        lhs=lambda p, cfg: kg(-p["nu"], p["alpha"], 0.0, p["x"], cfg),
        rhs=lambda p, cfg: _kummer_k(p["nu"], p["alpha"], p["x"], negative=True),
        note="Measured as printed",
    )
    yield Identity(
        id="B12",
        citation='(B.12), "k_(v,a,0)(x) = G(a) e^-x / (2^a G((a+v)/2+1) G((a-v)/2+1)) '
        '1F1((-a-v)/2; -a; 2x) - pi cos((a+v+1)/2) x^(a+1) e^-x / '
        '(2^a sin[pi(a+1)] G(a+1)) 1F1((a-v)/2+1; a+2; 2x)"',
        tier=DIAGNOSE,
        samples=k_grid,
        lhs=lambda p, cfg: kg(p["nu"], p["alpha"], 0.0, p["x"], cfg),
        rhs=lambda p, cfg: _kummer_k(p["nu"], p["alpha"], p["x"], negative=False),
        note="Measured as printed",
    )
