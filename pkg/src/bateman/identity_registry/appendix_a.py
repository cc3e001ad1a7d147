"""
Finite and infinite integrals involving the Bateman and Bateman-integral functions.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterator

from bateman import backends
from bateman.bateman_core import laguerre_form
from bateman.bateman_integral import bessel_integral_ji, ki
from bateman.identity_registry.evaluators import k, theta_integral
from bateman.identity_registry.identity import Evaluator, Identity, Tier, grid, samples
from bateman.quadrature import QuadConfig, integrate_finite, integrate_semiinf_decay

ASSERT, DIAGNOSE = Tier.ASSERT, Tier.DIAGNOSE

X_GRID = (0.5, 1.0, 2.0)


def _finite(f: Callable[[float], float], a: float, b: float, cfg: QuadConfig) -> float:
    return integrate_finite(f, a, b, cfg).value


def _half_line(f: Callable[[float], float], cfg: QuadConfig) -> float:
    return integrate_semiinf_decay(f, cfg).value


def _ki(n: int, t: float) -> float:
    return ki(n, t).value


def _j(nu: float, t: float) -> float:
    return backends.bessel("J", nu, t)


def _weighted_k(n: int, alpha: float, beta: float, cfg: QuadConfig) -> float:
    def integrand(t: float) -> float:
        return (1.0 - t) ** (beta - 1.0) * math.exp(alpha * t) * laguerre_form(n, alpha * t)

    return _finite(integrand, 0.0, 1.0, cfg)


def _weighted_k_printed(n: int, alpha: float, beta: float) -> float:
    scale = (-1.0) ** (n - 1) * math.factorial(n - 1) * backends.gamma(beta)
    scale /= backends.gamma(beta + n + 1.0)
    return scale * backends.laguerre(n - 1, beta + 1.0, 2.0 * alpha)


def _convolution(m: int, n: int, x: float, cfg: QuadConfig) -> float:
    return _finite(lambda t: laguerre_form(m, t) * laguerre_form(n, x - t), 0.0, x, cfg)


def _bessel_minus_k(n: int, x: float, cfg: QuadConfig) -> float:
    def integrand(t: float) -> float:
        if t < 1e-8:
            if n == 0:
                return 1.0
            # k_2n(t)/t -> 2 (-1)^(n+1)
            return (0.5 if n == 1 else 0.0) - 2.0 * (-1.0) ** (n + 1)
        return (_j(n, t) - laguerre_form(n, t)) / t

    return _finite(integrand, 0.0, x, cfg)


def _bessel_minus_k_rhs(n: int, x: float, cfg: QuadConfig) -> float:
    offset = math.log(2.0) if n == 0 else (-1.0) ** n / n
    return bessel_integral_ji(n, x, cfg).value - ki(n, x, cfg).value + offset


def _hankel_k(n: int, a: float, cfg: QuadConfig, over_t: bool) -> float:
    def integrand(t: float) -> float:
        value = _j(0, 2.0 * math.sqrt(a * t)) * laguerre_form(n, t)
        if over_t:
            # k_2n(t)/t -> 2 (-1)^(n+1) as t -> 0
            return value / t if t > 0 else 2.0 * (-1.0) ** (n + 1)
        return value

    return _half_line(integrand, cfg)


def _hankel_k_rhs(n: int, a: float) -> float:
    bracket = (n - 1) * _ki(n - 1, a) - 2 * n * _ki(n, a) + (n + 1) * _ki(n + 1, a)
    return 0.5 * (-1.0) ** (n - 1) * bracket


def _bessel_j1_k(n: int, x: float, cfg: QuadConfig) -> float:
    def integrand(t: float) -> float:
        if t <= 0:
            return 0.0
        return math.exp(-t) * _j(1, 2.0**1.5 * math.sqrt(x * t)) * laguerre_form(n, t) / t

    return _half_line(integrand, cfg)


def _power_bessel(n: int, a: float, x: float, cfg: QuadConfig) -> float:
    def integrand(t: float) -> float:
        return math.exp(-a * t) * t ** (n + 0.5) * _j(1, 2.0 * math.sqrt(x * t))

    return _half_line(integrand, cfg)


def _power_bessel_rhs(n: int, a: float, x: float) -> float:
    y = x / (2.0 * a)
    scale = (-1.0) ** n * math.factorial(n + 1) * math.exp(-y) / (a ** (n + 1) * math.sqrt(x))
    return scale * k(2 * n + 2, y)


def _mixed_order_bessel(n: int, x: float, cfg: QuadConfig) -> float:
    def integrand(t: float) -> float:
        if t <= 0:
            return 0.0
        bessel = _j(2 - n, 4.0 * math.sqrt(x * t))
        return t ** (0.5 * n - 1.0) * math.exp(-t) * bessel * laguerre_form(n, t) / t

    return _half_line(integrand, cfg)


def _bessel_product(
    lam: float, nu: float, a: float, b: float, x: float, n: int, cfg: QuadConfig
) -> float:
    def integrand(t: float) -> float:
        if t <= 0:
            return 0.0
        r = math.sqrt(t * t + x * x)
        bessels = _j(lam, a * r) * _j(nu, a * r)
        return math.exp(-b * t * t) * bessels / (t * r ** (lam + nu)) * laguerre_form(
            n + 1, b * t * t
        )

    return _half_line(integrand, cfg)


def _hermite_integral(n: int, x: float, cfg: QuadConfig) -> float:
    def integrand(theta: float) -> float:
        return backends.hermite(2 * n, math.sqrt(x) * math.cos(theta)) * math.sin(theta) ** 2

    return theta_integral(integrand, cfg, upper=math.pi)


def _hermite_rhs(n: int, x: float) -> float:
    scale = math.pi * math.factorial(2 * n) * math.exp(0.5 * x) / (2.0 * x * math.factorial(n))
    return scale * k(2 * n + 2, 0.5 * x)


def _ki_convolution(
    kernel: Callable[[float], float], n: int, x: float, cfg: QuadConfig
) -> float:
    return _finite(lambda t: kernel(x - t) * _ki(n, t), 0.0, x, cfg)


def _laplace_ki0(a: float, b: float, cfg: QuadConfig) -> float:
    return _half_line(lambda t: math.exp(-a * t) * _ki(0, b * t) if t > 0 else 0.0, cfg)


def _frullani_ki2(a: float, b: float, cfg: QuadConfig) -> float:
    def integrand(t: float) -> float:
        if t <= 0:
            return 2.0 * (a - b)
        return (_ki(1, a * t) - _ki(1, b * t)) / t

    return _half_line(integrand, cfg)


def _hankel_ki(n: int, a: float, cfg: QuadConfig) -> float:
    def integrand(t: float) -> float:
        return _j(0, 2.0 * math.sqrt(a * t)) * _ki(n, t) if t > 0 else 0.0

    return _half_line(integrand, cfg)


def identities() -> Iterator[Identity]:
    weighted = grid(n=(1, 2, 3), alpha=(0.5, 1.0), beta=(1.0, 2.5))
    yield Identity(
        id="A1",
        citation='(A.1), "int_0^1 (1-t)^(b-1) e^(a t) k_2n(a t) dt = '
        '(-1)^(n-1) (n-1)! G(b) / G(b+n+1) L_(n-1)^(b+1)(2a)"',
        tier=DIAGNOSE,
        samples=weighted,
        lhs=lambda p, cfg: _weighted_k(int(p["n"]), p["alpha"], p["beta"], cfg),
        rhs=lambda p, cfg: _weighted_k_printed(int(p["n"]), p["alpha"], p["beta"]),
        note="The printed right side lacks a factor 2a",
    )
    yield Identity(
        id="A1_corrected",
        citation='(A.1), "int_0^1 (1-t)^(b-1) e^(a t) k_2n(a t) dt = '
        '2a (-1)^(n-1) (n-1)! G(b) / G(b+n+1) L_(n-1)^(b+1)(2a)"',
        tier=ASSERT,
        samples=weighted,
        lhs=lambda p, cfg: _weighted_k(int(p["n"]), p["alpha"], p["beta"], cfg),
        rhs=lambda p, cfg: 2.0
        * p["alpha"]
        * _weighted_k_printed(int(p["n"]), p["alpha"], p["beta"]),
        note="Printed right side multiplied by 2a",
    )
    yield Identity(
        id="A2",
        citation='(A.2), "int_0^x k_2m(t) k_2n(x-t) dt = '
        '(1/2) [k_(2m+2n-2)(x) + 2 k_(2m+2n)(x) + k_(2m+2n+2)(x)]"',
        tier=ASSERT,
        samples=grid(m=(1, 2), n=(1, 2), x=X_GRID),
        lhs=lambda p, cfg: _convolution(int(p["m"]), int(p["n"]), p["x"], cfg),
        rhs=lambda p, cfg: 0.5
        * (
            k(2 * (p["m"] + p["n"]) - 2, p["x"], cfg)
            + 2.0 * k(2 * (p["m"] + p["n"]), p["x"], cfg)
            + k(2 * (p["m"] + p["n"]) + 2, p["x"], cfg)
        ),
    )
    yield Identity(
        id="A3",
        citation='(A.3), "int_0^x (J_0(t) - k_0(t))/t dt = Ji_0(x) - ki_0(x) + ln 2; '
        'int_0^x (J_n(t) - k_2n(t))/t dt = Ji_n(x) - ki_2n(x) + (-1)^n/n"',
        tier=ASSERT,
        samples=grid(n=(0, 1, 2, 3), x=X_GRID),
        lhs=lambda p, cfg: _bessel_minus_k(int(p["n"]), p["x"], cfg),
        rhs=lambda p, cfg: _bessel_minus_k_rhs(int(p["n"]), p["x"], cfg),
    )
    yield Identity(
        id="A4",
        citation='(A.4), "int_0^inf J_0(2 sqrt(a t)) k_2n(t) dt = ((-1)^(n-1)/2) '
        '[(n-1) ki_(2n-2)(a) - 2n ki_2n(a) + (n+1) ki_(2n+2)(a)]"',
        tier=ASSERT,
        samples=grid(n=(1, 2, 3), a=X_GRID),
        lhs=lambda p, cfg: _hankel_k(int(p["n"]), p["a"], cfg, over_t=False),
        rhs=lambda p, cfg: _hankel_k_rhs(int(p["n"]), p["a"]),
    )
    yield Identity(
        id="A5",
        citation='(A.5), "int_0^inf J_0(2 sqrt(a t)) k_2n(t) dt/t = (-1)^n ki_2n(a)"',
        tier=ASSERT,
        samples=grid(n=(1, 2, 3), a=X_GRID),
        lhs=lambda p, cfg: _hankel_k(int(p["n"]), p["a"], cfg, over_t=True),
        rhs=lambda p, cfg: (-1.0) ** p["n"] * _ki(int(p["n"]), p["a"]),
    )
    yield Identity(
        id="A6",
        citation='(A.6), "int_0^inf e^-t J_1(2^(3/2) sqrt(x t)) k_2n(t) dt/t = '
        '(-1)^(n-1) x^(n-1/2) e^-x / (sqrt 2 n!)"',
        tier=DIAGNOSE,
        samples=grid(n=(1, 2), x=X_GRID),
        lhs=lambda p, cfg: _bessel_j1_k(int(p["n"]), p["x"], cfg),
        rhs=lambda p, cfg: (-1.0) ** (p["n"] - 1)
        * p["x"] ** (p["n"] - 0.5)
        * math.exp(-p["x"])
        / (math.sqrt(2.0) * math.factorial(int(p["n"]))),
        note="Measured as printed",
    )
    yield Identity(
        id="A7",
        citation='(A.7), "int_0^inf e^(-a t) t^(n+1/2) J_1(2 sqrt(x t)) dt = '
        '(-1)^n G(n+2) e^(-x/2a) / (a^(n+1) sqrt x) k_(2n+2)(x/2a)"',
        tier=ASSERT,
        samples=grid(n=(0, 1, 2), a=(1.0, 2.0), x=X_GRID),
        lhs=lambda p, cfg: _power_bessel(int(p["n"]), p["a"], p["x"], cfg),
        rhs=lambda p, cfg: _power_bessel_rhs(int(p["n"]), p["a"], p["x"]),
    )
    yield Identity(
        id="A8",
        citation='(A.8), "int_0^x (J_n(t) - k_2n(t))/t dt = Ji_n(x) - ki_2n(x) + (-1)^n/n"',
        tier=ASSERT,
        samples=grid(n=(1, 2, 3), x=X_GRID),
        lhs=lambda p, cfg: _bessel_minus_k(int(p["n"]), p["x"], cfg),
        rhs=lambda p, cfg: _bessel_minus_k_rhs(int(p["n"]), p["x"], cfg),
    )
    yield Identity(
        id="A9",
        citation='(A.9), "int_0^inf t^(n/2-1) e^-t J_(2-n)(4 sqrt(x t)) k_2n(t) dt/t = '
        'x^(n/2-1) e^-x k_2n(x) / 2"',
        tier=DIAGNOSE,
        samples=grid(n=(1, 2), x=X_GRID),
        lhs=lambda p, cfg: _mixed_order_bessel(int(p["n"]), p["x"], cfg),
        rhs=lambda p, cfg: 0.5
        * p["x"] ** (0.5 * p["n"] - 1.0)
        * math.exp(-p["x"])
        * k(2 * p["n"], p["x"], cfg),
        note="Measured as printed",
    )
    yield Identity(
        id="A10",
        citation='(A.10), "int_0^inf e^(-b t^2) J_l(a r) J_v(a r) / (t r^(l+v)) '
        'k_(2n+2)(b t^2) dt = (-1)^n J_l(a x) J_v(a x) / ((2n+2) x^(l+v)), r = sqrt(t^2+x^2)"',
        tier=DIAGNOSE,
        samples=samples({"lam": 0.0, "nu": 0.0, "a": 1.0, "b": 1.0, "x": 1.0, "n": 0}),
        lhs=lambda p, cfg: _bessel_product(
            p["lam"], p["nu"], p["a"], p["b"], p["x"], int(p["n"]), cfg
        ),
        rhs=lambda p, cfg: (-1.0) ** p["n"]
        * _j(p["lam"], p["a"] * p["x"])
        * _j(p["nu"], p["a"] * p["x"])
        / ((2 * p["n"] + 2) * p["x"] ** (p["lam"] + p["nu"])),
        note="Measured as printed at one sample",
    )
    yield Identity(
        id="A11",
        citation='(A.11), "int_0^pi H_2n(sqrt x cos t) sin^2 t dt = '
        'pi (2n)! e^(x/2) / (2 x n!) k_(2n+2)(x/2)"',
        tier=ASSERT,
        samples=grid(n=(0, 1, 2, 3), x=X_GRID),
        lhs=lambda p, cfg: _hermite_integral(int(p["n"]), p["x"], cfg),
        rhs=lambda p, cfg: _hermite_rhs(int(p["n"]), p["x"]),
        note="H_n are the physicists' Hermite polynomials",
    )
    yield from _ki_convolutions()
    yield Identity(
        id="A18",
        citation='(A.18), "int_0^inf e^(-a t) ki_0(b t) dt = (1/a) ln(b/(a+b))"',
        tier=ASSERT,
        samples=grid(a=X_GRID, b=X_GRID),
        lhs=lambda p, cfg: _laplace_ki0(p["a"], p["b"], cfg),
        rhs=lambda p, cfg: math.log(p["b"] / (p["a"] + p["b"])) / p["a"],
    )
    yield Identity(
        id="A19",
        citation='(A.19), "int_0^inf (ki_2(a t) - ki_2(b t))/t dt = 2 ln(a/b)"',
        tier=ASSERT,
        samples=grid(a=X_GRID, b=(1.0, 3.0)),
        lhs=lambda p, cfg: _frullani_ki2(p["a"], p["b"], cfg),
        rhs=lambda p, cfg: 2.0 * math.log(p["a"] / p["b"]),
    )
    yield Identity(
        id="A20",
        citation='(A.20), "int_0^inf J_0(2 sqrt(a t)) ki_2n(t) dt = (-1)^n k_2n(a)/a"',
        tier=ASSERT,
        samples=grid(n=(1, 2, 3), a=X_GRID),
        lhs=lambda p, cfg: _hankel_ki(int(p["n"]), p["a"], cfg),
        rhs=lambda p, cfg: (-1.0) ** p["n"] * k(2 * p["n"], p["a"], cfg) / p["a"],
    )


def _ki_convolutions() -> Iterator[Identity]:
    x_grid = grid(x=X_GRID)

    def conv(kernel: Callable[[float], float], n: int = 1) -> Evaluator:
        return lambda p, cfg: _ki_convolution(kernel, n, p["x"], cfg)

    yield Identity(
        id="A12_sin_conv",
        citation='(A.12), "int_0^x sin(x-t) ki_2(t) dt = cos x - sin x - e^-x"',
        tier=ASSERT,
        samples=x_grid,
        lhs=conv(math.sin),
        rhs=lambda p, cfg: math.cos(p["x"]) - math.sin(p["x"]) - math.exp(-p["x"]),
    )
    yield Identity(
        id="A13",
        citation='(A.13), "int_0^x cos(x-t) ki_2(t) dt = cos x - sin x + e^-x"',
        tier=DIAGNOSE,
        samples=x_grid,
        lhs=conv(math.cos),
        rhs=lambda p, cfg: math.cos(p["x"]) - math.sin(p["x"]) + math.exp(-p["x"]),
        note="The printed signs of cos x and e^-x are reversed",
    )
    yield Identity(
        id="A13_corrected",
        citation='(A.13), "int_0^x cos(x-t) ki_2(t) dt = e^-x - cos x - sin x"',
        tier=ASSERT,
        samples=x_grid,
        lhs=conv(math.cos),
        rhs=lambda p, cfg: math.exp(-p["x"]) - math.cos(p["x"]) - math.sin(p["x"]),
    )
    yield Identity(
        id="A14",
        citation='(A.14), "int_0^x sinh(x-t) ki_2(t) dt = e^-x (1+x) - cosh x"',
        tier=ASSERT,
        samples=x_grid,
        lhs=conv(math.sinh),
        rhs=lambda p, cfg: math.exp(-p["x"]) * (1.0 + p["x"]) - math.cosh(p["x"]),
    )
    yield Identity(
        id="A15",
        citation='(A.15), "int_0^x cosh(x-t) ki_2(t) dt = -x e^-x - sinh x"',
        tier=ASSERT,
        samples=x_grid,
        lhs=conv(math.cosh),
        rhs=lambda p, cfg: -p["x"] * math.exp(-p["x"]) - math.sinh(p["x"]),
    )
    yield Identity(
        id="A16",
        citation='(A.16), "int_0^x e^(x-t) ki_2(t) dt = -2 sinh x"',
        tier=ASSERT,
        samples=x_grid,
        lhs=conv(math.exp),
        rhs=lambda p, cfg: -2.0 * math.sinh(p["x"]),
    )
    yield Identity(
        id="A17",
        citation='(A.17), "int_0^x (x-t) e^(x-t) ki_4(t) dt = sinh x - x cosh x"',
        tier=ASSERT,
        samples=x_grid,
        lhs=conv(lambda u: u * math.exp(u), n=2),
        rhs=lambda p, cfg: math.sinh(p["x"]) - p["x"] * math.cosh(p["x"]),
    )
