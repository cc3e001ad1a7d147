"""
Identities of the Bateman-integral functions ki_2n(x) and the Bessel-integral functions Ji_n(x).
"""

from __future__ import annotations

import math
from collections.abc import Iterator

from bateman import backends
from bateman.bateman_core import laguerre_form
from bateman.bateman_integral import (
    bessel_integral_ji,
    ki,
    ki_by_definition,
    ki_laguerre_sum,
    ki_sequence,
    ki_special_zero,
)
from bateman.identity_registry.evaluators import dh, dk, h, k, richardson
from bateman.identity_registry.identity import Identity, Tier, grid
from bateman.quadrature import QuadConfig, integrate_finite

ASSERT, DIAGNOSE = Tier.ASSERT, Tier.DIAGNOSE

X_GRID = (0.5, 1.0, 2.0)

# Terms of the bilinear ki series
BILINEAR_TERMS = 400

# ki_2n near zero is compared with its limit at this argument
_NEAR_ZERO = 1e-7


def _ki(n: int, x: float, cfg: QuadConfig) -> float:
    return ki(n, x, cfg).value


def _dki(n: int, x: float) -> float:
    return richardson(lambda y: ki(n, y).value, x)


def _from_zero(n: int, x: float, cfg: QuadConfig) -> float:
    head = integrate_finite(lambda t: laguerre_form(n, t) / t, 0.0, x, cfg).value
    return head + ki_special_zero(n)


def _doubled_argument_form(n: int, x: float, cfg: QuadConfig) -> float:
    # The printed sign (-1)^k is read as (-1)^m
    bracket = math.fsum(
        (-1.0) ** m
        * math.comb(n, m)
        * (m * k(2 * m, 2 * x, cfg) + (m + 1) * k(2 * m + 2, 2 * x, cfg) - 2.0 * k(0, 2 * x, cfg))
        for m in range(1, n + 1)
    )
    return (n * k(2 * n, x, cfg) - 2.0 * bracket) / (n * x)


def _exponential_form(n: int, x: float, cfg: QuadConfig) -> float:
    # The printed k_2k is read as k_2m
    total = math.fsum(m * k(2 * m, x, cfg) for m in range(1, n + 1))
    return (-1.0) ** (n - 1) * math.exp(x) / 2.0 ** (n + 1) * total


def _laguerre_inversion(n: int, x: float, cfg: QuadConfig) -> float:
    total = math.fsum(
        (-1.0) ** m * math.comb(n, m) * m * _ki(m, x, cfg) for m in range(1, n + 1)
    )
    return math.exp(x) / 2.0**n * total


def _bilinear_sum(x: float, y: float) -> float:
    ki_x = ki_sequence(BILINEAR_TERMS, x)
    ki_y = ki_sequence(BILINEAR_TERMS, y)
    return math.fsum(
        (-1.0) ** m * m * ki_x[m] * ki_y[m] for m in range(1, BILINEAR_TERMS + 1)
    )


def _bessel_mixed(n: int, x: float, cfg: QuadConfig) -> tuple[float, float]:
    def ji(order: int) -> float:
        return bessel_integral_ji(order, x, cfg).value

    ki_below, ki_above = _ki(n - 1, x, cfg), _ki(n + 1, x, cfg)
    lhs = (n + 1) * (ji(n + 1) * ki_below - ji(n - 1) * ki_above)
    ki_prime = k(2 * n, x, cfg) / x
    ji_prime = backends.bessel("J", n, x) / x
    rhs = 2.0 * x * ji(n - 1) * ki_prime - 2.0 * n * ji_prime * ki_below
    return lhs, rhs


def _wronskian(n: int, x: float, cfg: QuadConfig) -> float:
    return 0.5 * math.pi * (
        dk(2 * n, x, cfg=cfg) * h(2 * n, x, cfg) - dh(2 * n, x, cfg=cfg) * k(2 * n, x, cfg)
    )


def _cross_products(n: int, x: float, cfg: QuadConfig) -> float:
    kn, hn = k(2 * n, x, cfg), h(2 * n, x, cfg)
    above = kn * h(2 * n + 2, x, cfg) - k(2 * n + 2, x, cfg) * hn
    below = kn * h(2 * n - 2, x, cfg) - k(2 * n - 2, x, cfg) * hn
    return math.pi / (8.0 * x) * ((2 * n + 2) * above - (2 * n - 2) * below)


def identities() -> Iterator[Identity]:
    yield Identity(
        id="eq81_ji_derivative",
        citation='Eq (81) line 3, "Ji_nu(x) = -int_x^inf J_nu(t)/t dt"',
        tier=ASSERT,
        samples=grid(n=(0, 1, 2, 3), x=(0.5, 2.0, 7.0)),
        lhs=lambda p, cfg: richardson(
            lambda y: bessel_integral_ji(int(p["n"]), y, cfg).value, p["x"]
        ),
        rhs=lambda p, cfg: backends.bessel("J", p["n"], p["x"]) / p["x"],
        tol=1e-7,
        note="Checked through Ji'_n(x) = J_n(x)/x",
    )
    yield Identity(
        id="eq82_definition",
        citation='Eq (82), "ki_2n(x) = -int_x^inf k_2n(t)/t dt"',
        tier=ASSERT,
        samples=grid(n=range(5), x=X_GRID),
        lhs=lambda p, cfg: _ki(int(p["n"]), p["x"], cfg),
        rhs=lambda p, cfg: ki_by_definition(int(p["n"]), p["x"], cfg).value,
        tol=1e-9,
    )
    yield Identity(
        id="eq83_from_zero",
        citation='Eq (83) line 1, "ki_2n(x) = int_0^x k_2n(t)/t dt + ki_2n(0)"',
        tier=ASSERT,
        samples=grid(n=range(1, 6), x=X_GRID),
        lhs=lambda p, cfg: _ki(int(p["n"]), p["x"], cfg),
        rhs=lambda p, cfg: _from_zero(int(p["n"]), p["x"], cfg),
        tol=1e-9,
    )
    yield Identity(
        id="eq83_zero_values",
        citation='Eq (83) lines 2-3, "ki_2n(0) = 0; n = 2k, ki_2n(0) = -2/n; n = 2k+1"',
        tier=ASSERT,
        samples=grid(n=range(1, 7)),
        lhs=lambda p, cfg: ki_by_definition(int(p["n"]), _NEAR_ZERO, cfg).value,
        rhs=lambda p, cfg: -2.0 / p["n"] if p["n"] % 2 else 0.0,
        tol=1e-5,
        note="The defining tail integral is taken from x = 1e-7",
    )
    yield from _series_forms()
    yield from _recurrences()
    yield from _srivastava_forms()


def _series_forms() -> Iterator[Identity]:
    series_grid = grid(n=range(1, 5), x=X_GRID)
    yield Identity(
        id="eq84_laguerre",
        citation='Eq (84) line 1, "ki_2n(x) = (e^-x / n) sum (-2)^k C(n,k) L_(k-1)(x)"',
        tier=ASSERT,
        samples=series_grid,
        lhs=lambda p, cfg: ki_laguerre_sum(int(p["n"]), p["x"]),
        rhs=lambda p, cfg: ki_by_definition(int(p["n"]), p["x"], cfg).value,
        tol=1e-9,
    )
    yield Identity(
        id="eq84_doubled_argument",
        citation='Eq (84) line 2, "ki_2n(x) = (1/(nx)) [n k_2n(x) - 2 sum (-1)^k C(n,m) [m k_2m(2x) + (m+1) k_(2m+2)(2x) - 2 k_0(2x)]]"',
        tier=DIAGNOSE,
        samples=series_grid,
        lhs=lambda p, cfg: _ki(int(p["n"]), p["x"], cfg),
        rhs=lambda p, cfg: _doubled_argument_form(int(p["n"]), p["x"], cfg),
        note="The sign index k is read as m",
    )
    yield Identity(
        id="eq84_exponential",
        citation='Eq (84) line 3, "ki_2n(x) = (-1)^(n-1) e^x / 2^(n+1) [sum m k_2k(x)]"',
        tier=DIAGNOSE,
        samples=series_grid,
        lhs=lambda p, cfg: _ki(int(p["n"]), p["x"], cfg),
        rhs=lambda p, cfg: _exponential_form(int(p["n"]), p["x"], cfg),
        note="The summand index k is read as m",
    )
    yield Identity(
        id="eq84_laguerre_inversion",
        citation='Eq (84) line 4, "L_(n-1)(x) = (e^x / 2^n) sum (-1)^m C(n,m) m ki_2m(x)"',
        tier=ASSERT,
        samples=series_grid,
        lhs=lambda p, cfg: backends.laguerre(int(p["n"]) - 1, 0.0, p["x"]),
        rhs=lambda p, cfg: _laguerre_inversion(int(p["n"]), p["x"], cfg),
        tol=1e-9,
    )
    yield Identity(
        id="eq84_ki2",
        citation='Eq (84) line 5, "ki_2(x) = -2 k_0(x)"',
        tier=ASSERT,
        samples=grid(x=(0.1, 0.5, 1.0, 2.0, 5.0)),
        lhs=lambda p, cfg: ki_by_definition(1, p["x"], cfg).value,
        rhs=lambda p, cfg: -2.0 * k(0, p["x"], cfg),
        tol=1e-9,
    )


def _recurrences() -> Iterator[Identity]:
    recurrence_grid = grid(n=range(1, 5), x=X_GRID)

    def neighbours(n: int, x: float, cfg: QuadConfig) -> float:
        return 0.5 * ((n - 1) * _ki(n - 1, x, cfg) - (n + 1) * _ki(n + 1, x, cfg))

    yield Identity(
        id="eq85_k_from_ki",
        citation='Eq (85) line 1, "k_2n(x) = [(n-1) ki_(2n-2)(x) - (n+1) ki_(2n+2)(x)] / 2"',
        tier=ASSERT,
        samples=recurrence_grid,
        lhs=lambda p, cfg: k(2 * p["n"], p["x"], cfg),
        rhs=lambda p, cfg: neighbours(int(p["n"]), p["x"], cfg),
        tol=1e-9,
    )
    yield Identity(
        id="eq85_partial_sum",
        citation='Eq (85) line 2, "n ki_2n(x) + (n+1) ki_(2n+2)(x) = -2 sum_(k=0..n) ki_2k(x)"',
        tier=DIAGNOSE,
        samples=recurrence_grid,
        lhs=lambda p, cfg: p["n"] * _ki(int(p["n"]), p["x"], cfg)
        + (p["n"] + 1) * _ki(int(p["n"]) + 1, p["x"], cfg),
        rhs=lambda p, cfg: -2.0
        * math.fsum(_ki(j, p["x"], cfg) for j in range(int(p["n"]) + 1)),
    )
    yield Identity(
        id="eq85_derivative_neighbours",
        citation='Eq (85) line 3, "x ki\'_2n(x) = [(n-1) ki_(2n-2)(x) - (n+1) ki_(2n+2)(x)] / 2"',
        tier=ASSERT,
        samples=recurrence_grid,
        lhs=lambda p, cfg: p["x"] * _dki(int(p["n"]), p["x"]),
        rhs=lambda p, cfg: neighbours(int(p["n"]), p["x"], cfg),
        tol=1e-7,
    )
    yield Identity(
        id="eq85_derivative",
        citation='Eq (85) line 4, "x ki\'_2n(x) = k_2n(x)"',
        tier=ASSERT,
        samples=grid(n=range(5), x=X_GRID),
        lhs=lambda p, cfg: p["x"] * _dki(int(p["n"]), p["x"]),
        rhs=lambda p, cfg: k(2 * p["n"], p["x"], cfg),
        tol=1e-7,
    )


def _srivastava_forms() -> Iterator[Identity]:
    yield Identity(
        id="eq86_bessel_integral",
        citation='Eq (86) line 1, "(n+1)[Ji_(n+1) ki_(2n-2) - Ji_(n-1) ki_(2n+2)] = 2x Ji_(n-1) ki\'_2n - 2n Ji\'_n ki_(2n-2)"',
        tier=DIAGNOSE,
        samples=grid(n=(1, 2, 3), x=X_GRID),
        lhs=lambda p, cfg: _bessel_mixed(int(p["n"]), p["x"], cfg)[0],
        rhs=lambda p, cfg: _bessel_mixed(int(p["n"]), p["x"], cfg)[1],
    )
    yield Identity(
        id="eq86_bilinear",
        citation='Eq (86) line 2, "sum (-1)^m m ki_2m(x) ki_2m(y) = J_0(2 sqrt(xy))"',
        tier=DIAGNOSE,
        samples=grid(x=(0.5, 1.0), y=(0.5, 2.0)),
        lhs=lambda p, cfg: _bilinear_sum(p["x"], p["y"]),
        rhs=lambda p, cfg: backends.bessel("J", 0, 2.0 * math.sqrt(p["x"] * p["y"])),
        note="Summed over the first 400 terms",
    )
    yield Identity(
        id="eq88_wronskian",
        citation='Eq (88) line 1, "ki_2n(x) = (pi/2) [k\'_2n(x) h_2n(x) - h\'_2n(x) k_2n(x)]"',
        tier=ASSERT,
        samples=grid(n=range(1, 4), x=X_GRID),
        lhs=lambda p, cfg: _ki(int(p["n"]), p["x"], cfg),
        rhs=lambda p, cfg: _wronskian(int(p["n"]), p["x"], cfg),
        tol=1e-6,
    )
    yield Identity(
        id="eq88_cross_products",
        citation='Eq (88) line 2, "ki_2n(x) = (pi/(8x)) [(2n+2)[k_2n h_(2n+2) - k_(2n+2) h_2n] - (2n-2)[k_2n h_(2n-2) - k_(2n-2) h_2n]]"',
        tier=ASSERT,
        samples=grid(n=range(1, 4), x=X_GRID),
        lhs=lambda p, cfg: _ki(int(p["n"]), p["x"], cfg),
        rhs=lambda p, cfg: _cross_products(int(p["n"]), p["x"], cfg),
        tol=1e-8,
    )
