"""
Identities of the generalized functions k_{n,k}(x) and h_{n,k}(x), where k is the power of
cos(theta) in the weight: closed forms, recurrences, Bessel and Struve forms and the explicit
S-polynomial form.
"""

from __future__ import annotations

import math
from collections.abc import Iterator

from bateman import backends
from bateman.bateman_core import TWO_OVER_PI
from bateman.constants import MATH
from bateman.generalized import (
    GenParams,
    bateman_k_gen_quadrature,
    havelock_h_gen_quadrature,
    havelock_h_gen_s_form,
    havelock_h_gen_struve,
    s_polynomial,
)
from bateman.identity_registry.evaluators import dhg, hg, k, kg, richardson
from bateman.identity_registry.identity import Identity, Sample, Tier, grid, samples
from bateman.quadrature import QuadConfig

ASSERT, DIAGNOSE = Tier.ASSERT, Tier.DIAGNOSE

X_GRID = (0.5, 1.0, 2.0)

_RECURRENCE_GRID = grid(n=(2, 4), k=(1.0, 2.0), x=X_GRID)


def _h(n: float, power: float, x: float, cfg: QuadConfig) -> float:
    return hg(n, power, 0.0, x, cfg)


def _three_term(p: Sample, cfg: QuadConfig, x_factor: float) -> float:
    n, power, x = p["n"], p["k"], p["x"]
    return (
        (n - power - 2) * _h(n - 2, power, x, cfg)
        + (n + power + 2) * _h(n + 2, power, x, cfg)
        + (2 * n - x_factor * x) * _h(n, power, x, cfg)
    )


def _derivative_rhs(p: Sample, cfg: QuadConfig) -> float:
    n, power, x = p["n"], p["k"], p["x"]
    return (
        (n - power - 2) * _h(n - 2, power, x, cfg)
        - (n + power + 2) * _h(n + 2, power, x, cfg)
        + 2 * power * _h(n, power, x, cfg)
    )


def _shifted_rhs(p: Sample, cfg: QuadConfig, last_order: float) -> float:
    n, power, x = p["n"], p["k"], p["x"]
    return (n - power - 2) * _h(n - 2, power, x, cfg) + (n + power - 2 * x) * _h(
        last_order, power, x, cfg
    )


def _ode_lhs(p: Sample, cfg: QuadConfig) -> float:
    n, power, x = p["n"], p["k"], p["x"]
    return (
        x * dhg(n, power, x, 2, cfg)
        - power * dhg(n, power, x, 1, cfg)
        + (n - x) * _h(n, power, x, cfg)
    )


def _bessel_form(half_power: float, x: float) -> float:
    order = half_power + 0.5
    return (
        2.0
        / (MATH.sqrt_pi * backends.gamma(half_power + 1.0))
        * (0.5 * x) ** order
        * backends.bessel("K", order, x)
    )


def _printed_struve_form(half_power: float, x: float) -> float:
    order = half_power + 0.5
    bracket = backends.bessel("I", order, x) - backends.struve("L", -order, x)
    return 2.0 * backends.gamma(-half_power) / MATH.sqrt_pi * (0.5 * x) ** order * bracket


def _implied_s(m: int, power: int, x: float, cfg: QuadConfig) -> float:
    # S_{m,k} solved from h_{2n,2k} = (1/pi)[k_2n Ei - 2 S_{n-k-1,k}] with n = m + k + 1
    n = m + power + 1
    h_value = havelock_h_gen_quadrature(GenParams(2 * n, 2 * power), x, cfg).value
    return 0.5 * (k(2 * n, x, cfg) * backends.exp_integral_ei(x) - math.pi * h_value)


def identities() -> Iterator[Identity]:
    yield Identity(
        id="eq65_cos2",
        citation='Eq (65) line 1, "int cos^2(theta) cos(x tan theta) d theta = pi (1+x) e^-x / 4 = (pi/2) k_{0,2}(x)"',
        tier=ASSERT,
        samples=grid(x=X_GRID),
        lhs=lambda p, cfg: 0.5 * math.pi * kg(0.0, 2.0, 0.0, p["x"], cfg),
        rhs=lambda p, cfg: 0.25 * math.pi * (1.0 + p["x"]) * math.exp(-p["x"]),
        tol=1e-9,
    )
    yield Identity(
        id="eq65_sin2",
        citation='Eq (65) line 2, "int sin^2(theta) cos(x tan theta) d theta = pi (1-x) e^-x / 4 = (pi/2) k_{0,0,2}(x)"',
        tier=ASSERT,
        samples=grid(x=X_GRID),
        lhs=lambda p, cfg: 0.5 * math.pi * kg(0.0, 0.0, 2.0, p["x"], cfg),
        rhs=lambda p, cfg: 0.25 * math.pi * (1.0 - p["x"]) * math.exp(-p["x"]),
        tol=1e-9,
    )
    yield Identity(
        id="eq65_cos_sin",
        citation='Eq (65) line 3, "int cos(theta) sin(theta) sin(x tan theta) d theta = pi x e^-x / 4 = (pi/2) h_{0,1,1}(x)"',
        tier=ASSERT,
        samples=grid(x=X_GRID),
        lhs=lambda p, cfg: 0.5 * math.pi * hg(0.0, 1.0, 1.0, p["x"], cfg),
        rhs=lambda p, cfg: 0.25 * math.pi * p["x"] * math.exp(-p["x"]),
        tol=1e-9,
    )
    yield from _recurrences()
    yield from _special_forms()


def _recurrences() -> Iterator[Identity]:
    yield Identity(
        id="eq66_three_term",
        citation='Eq (66) line 1, "(n-k-2) h_{n-2,k} + (n+k+2) h_{n+2,k} + (2n-x) h_{n,k} = -8/pi"',
        tier=DIAGNOSE,
        samples=_RECURRENCE_GRID,
        lhs=lambda p, cfg: _three_term(p, cfg, 1.0),
        rhs=lambda p, cfg: -8.0 / math.pi,
        note="The coefficient of h_{n,k} is 2n - 4x",
    )
    yield Identity(
        id="eq66_three_term_corrected",
        citation='Eq (66) line 1, "(n-k-2) h_{n-2,k} + (n+k+2) h_{n+2,k} + (2n-x) h_{n,k} = -8/pi", with 2n-4x',
        tier=ASSERT,
        samples=_RECURRENCE_GRID,
        lhs=lambda p, cfg: _three_term(p, cfg, 4.0),
        rhs=lambda p, cfg: -8.0 / math.pi,
        tol=1e-7,
    )
    yield Identity(
        id="eq66_derivative",
        citation='Eq (66) line 2, "4x h\'_{n,k} = (n-k-2) h_{n-2,k} - (n+k+2) h_{n+2,k} + 2k h_{n,k}"',
        tier=ASSERT,
        samples=_RECURRENCE_GRID,
        lhs=lambda p, cfg: 4.0 * p["x"] * dhg(p["n"], p["k"], p["x"], 1, cfg),
        rhs=_derivative_rhs,
        tol=1e-6,
    )
    yield Identity(
        id="eq66_shifted",
        citation='Eq (66) line 3, "2x h\'_{n,k} - 4/pi = (n-k-2) h_{n-2,k} + (n+k-2x) h_{n+2,k}"',
        tier=DIAGNOSE,
        samples=_RECURRENCE_GRID,
        lhs=lambda p, cfg: 2.0 * p["x"] * dhg(p["n"], p["k"], p["x"], 1, cfg) - 4.0 / math.pi,
        rhs=lambda p, cfg: _shifted_rhs(p, cfg, p["n"] + 2),
        note="The last term carries h_{n,k}, as the sum of lines 1 and 2 shows",
    )
    yield Identity(
        id="eq66_shifted_corrected",
        citation='Eq (66) line 3, "2x h\'_{n,k} - 4/pi = (n-k-2) h_{n-2,k} + (n+k-2x) h_{n+2,k}", with h_{n,k}',
        tier=ASSERT,
        samples=_RECURRENCE_GRID,
        lhs=lambda p, cfg: 2.0 * p["x"] * dhg(p["n"], p["k"], p["x"], 1, cfg) - 4.0 / math.pi,
        rhs=lambda p, cfg: _shifted_rhs(p, cfg, p["n"]),
        tol=1e-6,
    )
    half_grid = grid(k=(0, 1, 2), x=X_GRID)
    yield Identity(
        id="eq66_zero_order",
        citation='Eq (66) line 4, "2 h\'_{0,2k} = 2 h_{0,2k+2} - h_{0,2k} - h_{2,2k+2}"',
        tier=DIAGNOSE,
        samples=half_grid,
        lhs=lambda p, cfg: 2.0 * dhg(0.0, 2 * p["k"], p["x"], 1, cfg),
        rhs=lambda p, cfg: 2.0 * _h(0.0, 2 * p["k"] + 2, p["x"], cfg)
        - _h(0.0, 2 * p["k"], p["x"], cfg)
        - _h(2.0, 2 * p["k"] + 2, p["x"], cfg),
    )
    yield Identity(
        id="eq66_ode",
        citation='Eq (66) line 5, "x h\'\'_{n,k} - k h\'_{n,k} + (n-x) h_{n,k} = -2/pi"',
        tier=ASSERT,
        samples=_RECURRENCE_GRID,
        lhs=_ode_lhs,
        rhs=lambda p, cfg: -TWO_OVER_PI,
        tol=1e-5,
    )

    def k_gen_derivative(power: float, x: float, cfg: QuadConfig) -> float:
        return richardson(lambda y: kg(0.0, power, 0.0, y, cfg), x)

    yield Identity(
        id="eq67_zero_order",
        citation='Eq (67), "2 k\'_{0,2k} = 2 k_{0,2k+2} - k_{0,2k} - k_{2,2k+2}"',
        tier=DIAGNOSE,
        samples=half_grid,
        lhs=lambda p, cfg: 2.0 * k_gen_derivative(2 * p["k"], p["x"], cfg),
        rhs=lambda p, cfg: 2.0 * kg(0.0, 2 * p["k"] + 2, 0.0, p["x"], cfg)
        - kg(0.0, 2 * p["k"], 0.0, p["x"], cfg)
        - kg(2.0, 2 * p["k"] + 2, 0.0, p["x"], cfg),
    )


def _special_forms() -> Iterator[Identity]:
    yield Identity(
        id="eq68_bessel",
        citation='Eq (68) line 2, "k_{0,2k}(x) = 2 / (sqrt(pi) Gamma(k+1)) (x/2)^(k+1/2) K_(k+1/2)(x)"',
        tier=ASSERT,
        samples=grid(k=(0.0, 0.5, 1.0, 2.0), x=X_GRID),
        lhs=lambda p, cfg: bateman_k_gen_quadrature(GenParams(0.0, 2 * p["k"]), p["x"], cfg).value,
        rhs=lambda p, cfg: _bessel_form(p["k"], p["x"]),
        tol=1e-9,
    )
    yield Identity(
        id="eq68_struve",
        citation='Eq (68) line 4, "h_{0,2k}(x) = 2 Gamma(-k) / sqrt(pi) (x/2)^(k+1/2) [I_(k+1/2)(x) - L_(-k-1/2)(x)]"',
        tier=DIAGNOSE,
        samples=grid(k=(0.25, 1.0, 1.5), x=X_GRID),
        lhs=lambda p, cfg: havelock_h_gen_quadrature(GenParams(0.0, 2 * p["k"]), p["x"], cfg).value,
        rhs=lambda p, cfg: _printed_struve_form(p["k"], p["x"]),
        note="The prefactor is Gamma(-k) / sqrt(pi), and integer k needs the limit",
    )
    yield Identity(
        id="eq68_struve_corrected",
        citation='Eq (68) line 4, "h_{0,2k}(x) = 2 Gamma(-k) / sqrt(pi) (x/2)^(k+1/2) [...]", without the 2, limit at integer k',
        tier=ASSERT,
        samples=grid(k=(0.0, 0.25, 1.0, 1.5, 2.0), x=X_GRID),
        lhs=lambda p, cfg: havelock_h_gen_quadrature(GenParams(0.0, 2 * p["k"]), p["x"], cfg).value,
        rhs=lambda p, cfg: havelock_h_gen_struve(2 * p["k"], p["x"]).value,
        tol=1e-7,
    )
    yield Identity(
        id="eq69_s_form",
        citation='Eq (69), "h_{2n,2k}(x) = (1/pi) [k_2n(x) li(e^x) - 2 S_{n-k-1,k}(x)]; n >= k+1"',
        tier=DIAGNOSE,
        samples=tuple(
            {**pair, "x": x}
            for pair in samples(
                {"n": 4, "k": 1}, {"n": 5, "k": 1}, {"n": 6, "k": 2}, {"n": 7, "k": 2}
            )
            for x in X_GRID
        ),
        lhs=lambda p, cfg: hg(2 * p["n"], 2 * p["k"], 0.0, p["x"], cfg),
        rhs=lambda p, cfg: havelock_h_gen_s_form(int(p["n"]), int(p["k"]), p["x"]).value,
        note="Compared as printed, with the tabulated S polynomials",
    )
    yield Identity(
        id="eq70_s_polynomials",
        citation='Eq (70), "S_{2,1}(x) = (2 + x + x^2)/6, ..., S_{5,1}(x) = (18 - 9x^2 + 31x^3 - 16x^4 + 2x^5)/180"',
        tier=DIAGNOSE,
        samples=grid(m=(2, 3, 4, 5), x=X_GRID),
        lhs=lambda p, cfg: s_polynomial(int(p["m"]), 1, p["x"]),
        rhs=lambda p, cfg: _implied_s(int(p["m"]), 1, p["x"], cfg),
        note="S solved from the explicit form with h by quadrature; S_{5,1} is printed twice",
    )
    yield Identity(
        id="eq71_s_polynomials",
        citation='Eq (71), "S_{3,2}(x) = (16 + 7x + 3x^2 + x^3)/48, ..., S_{6,2}(x) = (268 + ... + 2x^6)/2520"',
        tier=DIAGNOSE,
        samples=grid(m=(3, 4, 5, 6), x=X_GRID),
        lhs=lambda p, cfg: s_polynomial(int(p["m"]), 2, p["x"]),
        rhs=lambda p, cfg: _implied_s(int(p["m"]), 2, p["x"], cfg),
        note="Right side is S solved from the explicit form with h by quadrature",
    )
