"""
Generating functions, series and orthogonality integrals of the even-order Bateman functions.

Series with geometric convergence are summed directly. The series whose terms decay only like
n^(-3/4) are Euler-accelerated along the alternation of k_2n in n.
"""

from __future__ import annotations

import cmath
import math
from collections.abc import Callable, Iterator

import numpy as np

from bateman import backends
from bateman.bateman_core import even_order_sequence, laguerre_form
from bateman.identity_registry.evaluators import alternating_sum, k
from bateman.identity_registry.identity import Identity, Tier, grid, samples
from bateman.quadrature import (
    QuadConfig,
    euler_sum,
    integrate_pv,
    integrate_semiinf_decay,
)

ASSERT, DIAGNOSE = Tier.ASSERT, Tier.DIAGNOSE

X_GRID = (0.5, 1.0, 2.0)

# Terms of the slowly convergent sums
SLOW_TERMS = 2000
UNITY_TERMS = 10_000

# Terms of the geometrically convergent sums in t
GEOMETRIC_TERMS = 200
FACTORIAL_TERMS = 60

# Offset of the symmetric average taken at the removable singularities of the full-line formula
_FULL_LINE_EPS = 1e-4

# The odd-order products k_(2k+1) k_(2m+1) / x decay like e^(-|x|); the tails beyond 40 vanish
_PV_HALF_WIDTH = 40.0


def _power_series(t: float, x: float, laguerre_alpha: float) -> tuple[float, float]:
    # (sum (-1)^n t^n k_2n(x), (1-t)^(alpha+1) e^-x sum t^n L_n^(alpha)(2x))
    ks = even_order_sequence(GEOMETRIC_TERMS, x)
    powers = t ** np.arange(GEOMETRIC_TERMS + 1)
    lhs = float(np.sum((-1.0) ** np.arange(GEOMETRIC_TERMS + 1) * powers * ks))
    laguerre = np.array(
        [backends.laguerre(n, laguerre_alpha, 2.0 * x) for n in range(GEOMETRIC_TERMS + 1)]
    )
    rhs = (1.0 - t) ** (laguerre_alpha + 1.0) * math.exp(-x) * float(np.sum(powers * laguerre))
    return lhs, rhs


def _factorial_series(
    x: float, coefficient: Callable[[int], float], index: Callable[[int], int]
) -> float:
    ks = even_order_sequence(2 * FACTORIAL_TERMS + 2, x)
    return math.fsum(coefficient(n) * ks[index(n)] for n in range(FACTORIAL_TERMS))


def _i1_sum(t: float, x: float) -> float:
    return _factorial_series(
        x,
        lambda n: math.exp(n * math.log(0.5 * t) - math.lgamma(n + 1.0)),
        lambda n: n + 1,
    )


def _quarter_sums(x: float) -> tuple[float, float]:
    # sum (-1)^n k_(4n+2)(x) and sum (-1)^n k_4n(x)
    ks = even_order_sequence(2 * SLOW_TERMS + 1, x)
    signs = (-1.0) ** np.arange(SLOW_TERMS)
    return alternating_sum(signs * ks[1::2][:SLOW_TERMS]), alternating_sum(
        signs * ks[0::2][:SLOW_TERMS]
    )


def _imaginary_series(t: float, x: float) -> complex:
    # sum (i t)^n k_2n(x) = sum (-1)^n t^2n k_4n + i sum (-1)^n t^(2n+1) k_(4n+2)
    ks = even_order_sequence(GEOMETRIC_TERMS, x)
    return complex(np.sum((1j * t) ** np.arange(GEOMETRIC_TERMS + 1) * ks))


def _shabde(t: complex, x: float) -> complex:
    # sum (n+1) t^n k_(2n+2)(x) = 2x e^(-x + 2xt/(1+t)) / (1+t)^2
    return 2.0 * x * cmath.exp(-x + 2.0 * x * t / (1.0 + t)) / (1.0 + t) ** 2


def _shabde_series(t: complex, x: float) -> complex:
    ks = even_order_sequence(GEOMETRIC_TERMS, x)
    n = np.arange(GEOMETRIC_TERMS)
    return complex(np.sum((n + 1) * t**n * ks[1 : GEOMETRIC_TERMS + 1]))


def _kelvin_parts(t: float, x: float) -> tuple[float, float, float]:
    z = 2.0**1.5 * math.sqrt(x * t)
    ber_p, bei_p = backends.kelvin_ber_bei_prime(z)
    return math.sqrt(2.0 * x / t), ber_p, bei_p


def _kelvin_cos_series(t: float, x: float, index_step: int) -> float:
    # sum (-1)^n t^2n / (2n)! k_(2 step n + 2)
    return _factorial_series(
        x,
        lambda n: (-1.0) ** n * math.exp(2 * n * math.log(t) - math.lgamma(2 * n + 1.0)),
        lambda n: index_step * n + 1,
    )


def _kelvin_sin_series(t: float, x: float) -> float:
    # sum (-1)^(n+1) t^(2n+1) / (2n+1)! k_(4n+4)
    return _factorial_series(
        x,
        lambda n: -((-1.0) ** n) * math.exp((2 * n + 1) * math.log(t) - math.lgamma(2 * n + 2)),
        lambda n: 2 * n + 2,
    )


def _bessel_j_series(t: float, x: float) -> float:
    # sum (-1)^n t^n / n! k_(2n+2)
    return _factorial_series(
        x,
        lambda n: (-1.0) ** n * math.exp(n * math.log(t) - math.lgamma(n + 1.0)),
        lambda n: n + 1,
    )


def _fourier_sine_series(theta: float, x: float) -> float:
    ks = even_order_sequence(SLOW_TERMS, x)
    phase = np.exp(2j * theta * np.arange(SLOW_TERMS + 1))
    return euler_sum(list(ks * phase), -cmath.exp(2j * theta), 40).imag


def _unity_series(x: float) -> float:
    return alternating_sum(even_order_sequence(UNITY_TERMS, x))


def _full_line_closed(k_: int, m: int) -> float:
    def g(d: float) -> float:
        return math.sin(-math.pi * d) / (math.pi * (d + 1.0) * d * (d - 1.0))

    d = float(k_ - m)
    return 0.5 * (g(d + _FULL_LINE_EPS) + g(d - _FULL_LINE_EPS))


def _full_line_numeric(k_: int, m: int, cfg: QuadConfig) -> float:
    positive = integrate_semiinf_decay(lambda x: k(2 * k_, x) * k(2 * m, x), cfg)
    negative = integrate_semiinf_decay(lambda y: k(2 * k_, -y) * k(2 * m, -y), cfg)
    return positive.value + negative.value


def _odd_pv(k_: int, m: int, cfg: QuadConfig) -> float:
    def integrand(x: float) -> float:
        return k(2 * k_ + 1, x) * k(2 * m + 1, x) / x

    return integrate_pv(integrand, 0.0, -_PV_HALF_WIDTH, _PV_HALF_WIDTH, cfg).value


def _orthogonality(n: int, j: int, cfg: QuadConfig) -> float:
    return integrate_semiinf_decay(
        lambda x: laguerre_form(n, x) * laguerre_form(n + j, x), cfg
    ).value


def _over_x(n: int, j: int, cfg: QuadConfig) -> float:
    return integrate_semiinf_decay(lambda x: k(n, x) * k(2 * j, x) / x, cfg).value


def _over_x_closed(n: int, j: int) -> float:
    return 4.0 * math.sin(0.5 * math.pi * (2 * j - n)) / (math.pi * n * (2 * j - n))


def identities() -> Iterator[Identity]:
    yield Identity(
        id="eq30_laguerre",
        citation='Eq (30) line 1, "sum (-1)^n t^n k_2n(x) = (1-t)^(alpha+1) e^-x sum t^n L_n^(alpha)(2x)"',
        tier=ASSERT,
        samples=grid(alpha=(0.0, 1.0), t=(0.3, 0.6), x=X_GRID),
        lhs=lambda p, cfg: _power_series(p["t"], p["x"], p["alpha"])[0],
        rhs=lambda p, cfg: _power_series(p["t"], p["x"], p["alpha"])[1],
        tol=1e-9,
    )
    yield Identity(
        id="eq30_bessel_i",
        citation='Eq (30) line 2, "sum t^n/(2^n n!) k_(2n+2)(x) = 2 e^-(x+t/2) sqrt(x/t) I_1(2 sqrt(xt))"',
        tier=ASSERT,
        samples=grid(t=(0.5, 1.0, 2.0), x=X_GRID),
        lhs=lambda p, cfg: _i1_sum(p["t"], p["x"]),
        rhs=lambda p, cfg: 2.0
        * math.exp(-(p["x"] + 0.5 * p["t"]))
        * math.sqrt(p["x"] / p["t"])
        * backends.bessel("I", 1, 2.0 * math.sqrt(p["x"] * p["t"])),
        tol=1e-10,
    )
    yield Identity(
        id="eq30_sine",
        citation='Eq (30) line 3, "sum (-1)^n k_(4n+2)(x) = sin x"',
        tier=ASSERT,
        samples=grid(x=X_GRID),
        lhs=lambda p, cfg: _quarter_sums(p["x"])[0],
        rhs=lambda p, cfg: math.sin(p["x"]),
        tol=1e-5,
    )
    yield Identity(
        id="eq30_cosine",
        citation='Eq (30) line 4, "sum (-1)^n k_4n(x) = cos x"',
        tier=ASSERT,
        samples=grid(x=X_GRID),
        lhs=lambda p, cfg: _quarter_sums(p["x"])[1],
        rhs=lambda p, cfg: math.cos(p["x"]),
        tol=1e-5,
    )
    yield from _shabde_identities()
    yield from _kelvin_identities()
    yield from _shastri_identities()
    yield from _orthogonality_identities()


def _shabde_identities() -> Iterator[Identity]:
    shabde_grid = grid(t=(-0.3, 0.3, 0.6), x=X_GRID)
    yield Identity(
        id="eq31_line1",
        citation='Eq (31) line 1, "sum (n+1) t^n k_(2n+2)(x) = 2x e^(-x+2xt/(1+t)) / (1+t)^2"',
        tier=ASSERT,
        samples=shabde_grid,
        lhs=lambda p, cfg: _shabde_series(p["t"], p["x"]).real,
        rhs=lambda p, cfg: _shabde(p["t"], p["x"]).real,
        tol=1e-9,
    )

    def printed_line2(t: float, x: float) -> float:
        ks = even_order_sequence(GEOMETRIC_TERMS + 1, x)
        n = np.arange(GEOMETRIC_TERMS)
        return float(np.sum((-1.0) ** n * (2 * n + 1) * t ** (2 * n) * ks[n + 1]))

    yield Identity(
        id="eq31_line2",
        citation='Eq (31) line 2, "sum (-1)^n (2n+1) t^2n k_(2n+2)(x) = 2x e^(...)/(1+t^2)^2 [...]"',
        tier=DIAGNOSE,
        samples=shabde_grid,
        lhs=lambda p, cfg: printed_line2(p["t"], p["x"]),
        rhs=lambda p, cfg: _shabde(1j * p["t"], p["x"]).real,
        note="The even part of the line 1 series at it carries k_(4n+2)",
    )
    yield Identity(
        id="eq31_line2_corrected",
        citation='Eq (31) line 2, "sum (-1)^n (2n+1) t^2n k_(2n+2)(x)", with k_(4n+2)',
        tier=ASSERT,
        samples=shabde_grid,
        lhs=lambda p, cfg: _shabde_series(1j * p["t"], p["x"]).real,
        rhs=lambda p, cfg: _shabde_closed_real(p["t"], p["x"]),
        tol=1e-9,
    )
    yield Identity(
        id="eq31_line3",
        citation='Eq (31) line 3, "sum (-1)^n (2n+2) t^(2n+1) k_(4n+4)(x) = 2x e^(...)/(1+t^2)^2 [...]"',
        tier=ASSERT,
        samples=shabde_grid,
        lhs=lambda p, cfg: _shabde_series(1j * p["t"], p["x"]).imag,
        rhs=lambda p, cfg: _shabde_closed_imag(p["t"], p["x"]),
        tol=1e-9,
    )


def _shabde_closed_real(t: float, x: float) -> float:
    q = 1.0 + t * t
    phi = 2.0 * x * t / q
    prefactor = 2.0 * x * math.exp(-x + 2.0 * x * t * t / q) / (q * q)
    return prefactor * ((1.0 - t * t) * math.cos(phi) + 2.0 * t * math.sin(phi))


def _shabde_closed_imag(t: float, x: float) -> float:
    q = 1.0 + t * t
    phi = 2.0 * x * t / q
    prefactor = 2.0 * x * math.exp(-x + 2.0 * x * t * t / q) / (q * q)
    return prefactor * ((1.0 - t * t) * math.sin(phi) - 2.0 * t * math.cos(phi))


def _kelvin_identities() -> Iterator[Identity]:
    kelvin_grid = grid(t=(0.2, 0.5), x=X_GRID)

    def j1_rhs(t: float, x: float, shift: float) -> float:
        z = 2.0**1.5 * math.sqrt(x * t)
        return math.sqrt(2.0 * x / t) * math.exp(shift * t - x) * backends.bessel("J", 1, z)

    def cos_rhs(t: float, x: float, damped: bool) -> float:
        root, ber_p, bei_p = _kelvin_parts(t, x)
        decay = math.exp(-x) if damped else 1.0
        return root * decay * (-math.sin(t) * ber_p + math.cos(t) * bei_p)

    def sin_rhs(t: float, x: float, damped: bool) -> float:
        root, ber_p, bei_p = _kelvin_parts(t, x)
        decay = math.exp(-x) if damped else 1.0
        return root * decay * (math.cos(t) * ber_p + math.sin(t) * bei_p)

    yield Identity(
        id="eq32_bessel_j",
        citation='Eq (32) line 1, "sum (-1)^n t^n/n! k_(2n+2)(x) = sqrt(2x/t) e^-(x+t) J_1(2^(3/2) sqrt(xt))"',
        tier=DIAGNOSE,
        samples=kelvin_grid,
        lhs=lambda p, cfg: _bessel_j_series(p["t"], p["x"]),
        rhs=lambda p, cfg: j1_rhs(p["t"], p["x"], -1.0),
        note="The exponent is t - x",
    )
    yield Identity(
        id="eq32_bessel_j_corrected",
        citation='Eq (32) line 1, "... = sqrt(2x/t) e^-(x+t) J_1(2^(3/2) sqrt(xt))", with e^(t-x)',
        tier=ASSERT,
        samples=kelvin_grid,
        lhs=lambda p, cfg: _bessel_j_series(p["t"], p["x"]),
        rhs=lambda p, cfg: j1_rhs(p["t"], p["x"], 1.0),
        tol=1e-10,
    )
    yield Identity(
        id="eq32_kelvin_cos",
        citation='Eq (32) line 2, "sum (-1)^n t^2n/(2n)! k_(2n+2)(x) = sqrt(2x/t) [-sin t ber\' + cos t bei\']"',
        tier=DIAGNOSE,
        samples=kelvin_grid,
        lhs=lambda p, cfg: _kelvin_cos_series(p["t"], p["x"], 1),
        rhs=lambda p, cfg: cos_rhs(p["t"], p["x"], damped=False),
        note="Needs k_(4n+2) on the left and a factor e^-x on the right",
    )
    yield Identity(
        id="eq32_kelvin_cos_corrected",
        citation='Eq (32) line 2, "... = sqrt(2x/t) [-sin t ber\' + cos t bei\']", with k_(4n+2) and e^-x',
        tier=ASSERT,
        samples=kelvin_grid,
        lhs=lambda p, cfg: _kelvin_cos_series(p["t"], p["x"], 2),
        rhs=lambda p, cfg: cos_rhs(p["t"], p["x"], damped=True),
        tol=1e-10,
    )
    yield Identity(
        id="eq32_kelvin_sin",
        citation='Eq (32) line 3, "sum (-1)^(n+1) t^(2n+1)/(2n+1)! k_(4n+4)(x) = sqrt(2x/t) [cos t ber\' + sin t bei\']"',
        tier=DIAGNOSE,
        samples=kelvin_grid,
        lhs=lambda p, cfg: _kelvin_sin_series(p["t"], p["x"]),
        rhs=lambda p, cfg: sin_rhs(p["t"], p["x"], damped=False),
        note="Needs a factor e^-x on the right",
    )
    yield Identity(
        id="eq32_kelvin_sin_corrected",
        citation='Eq (32) line 3, "... = sqrt(2x/t) [cos t ber\' + sin t bei\']", with e^-x',
        tier=ASSERT,
        samples=kelvin_grid,
        lhs=lambda p, cfg: _kelvin_sin_series(p["t"], p["x"]),
        rhs=lambda p, cfg: sin_rhs(p["t"], p["x"], damped=True),
        tol=1e-10,
    )


def _shastri_rhs(t: float, x: float) -> complex:
    q = 1.0 + t * t
    return cmath.exp(x * (t * t - 1.0) / q + 2j * x * t / q)


def _shastri_identities() -> Iterator[Identity]:
    shastri_grid = grid(t=(-0.6, -0.3, 0.3, 0.6), x=X_GRID)
    yield Identity(
        id="eq33_sine",
        citation='Eq (33) line 1, "sum (-1)^n t^(2n+1) k_(4n+2)(x) = e^(x(t^2-1)/(1+t^2)) sin(2xt/(1+t^2))"',
        tier=ASSERT,
        samples=shastri_grid,
        lhs=lambda p, cfg: _imaginary_series(p["t"], p["x"]).imag,
        rhs=lambda p, cfg: _shastri_rhs(p["t"], p["x"]).imag,
        tol=1e-10,
    )
    yield Identity(
        id="eq33_cosine",
        citation='Eq (33) line 2, "sum (-1)^n t^2n k_4n(x) = e^(x(t^2-1)/(1+t^2)) cos(2xt/(1+t^2))"',
        tier=ASSERT,
        samples=shastri_grid,
        lhs=lambda p, cfg: _imaginary_series(p["t"], p["x"]).real,
        rhs=lambda p, cfg: _shastri_rhs(p["t"], p["x"]).real,
        tol=1e-10,
    )
    yield Identity(
        id="eq33_sine_limit",
        citation='Eq (33) line 3, "sum (-1)^n k_(4n+2)(x) = sin x"',
        tier=ASSERT,
        samples=grid(x=X_GRID),
        lhs=lambda p, cfg: _quarter_sums(p["x"])[0],
        rhs=lambda p, cfg: math.sin(p["x"]),
        tol=1e-5,
    )
    yield Identity(
        id="eq33_cosine_limit",
        citation='Eq (33) line 3, "sum (-1)^n k_4n(x) = cos x"',
        tier=ASSERT,
        samples=grid(x=X_GRID),
        lhs=lambda p, cfg: _quarter_sums(p["x"])[1],
        rhs=lambda p, cfg: math.cos(p["x"]),
        tol=1e-5,
    )
    fourier_grid = grid(theta=(0.3, 0.6, 1.0), x=X_GRID)
    yield Identity(
        id="eq34_sine",
        citation='Eq (34) line 1, "sum k_2n(x) sin(2n theta) = sin(x tan theta)"',
        tier=ASSERT,
        samples=fourier_grid,
        lhs=lambda p, cfg: _fourier_sine_series(p["theta"], p["x"]),
        rhs=lambda p, cfg: math.sin(p["x"] * math.tan(p["theta"])),
        tol=1e-5,
    )
    yield Identity(
        id="eq34_line2_duplicate",
        citation='Eq (34) line 2, "sum k_2n(x) sin(2n theta) = sin(x tan theta)"',
        tier=DIAGNOSE,
        samples=fourier_grid,
        lhs=lambda p, cfg: _fourier_sine_series(p["theta"], p["x"]),
        rhs=lambda p, cfg: math.sin(p["x"] * math.tan(p["theta"])),
        note="Printed twice; the intended second relation is not known",
    )
    yield Identity(
        id="eq34_sum_unity",
        citation='Eq (34) line 3, "sum k_2n(x) = 1"',
        tier=ASSERT,
        samples=grid(x=X_GRID),
        lhs=lambda p, cfg: _unity_series(p["x"]),
        rhs=lambda p, cfg: 1.0,
        tol=1e-3,
        note="10^4 terms, Euler-accelerated",
    )


def _orthogonality_identities() -> Iterator[Identity]:
    yield Identity(
        id="eq35_orth_diag",
        citation='Eq (35) line 1, "int [k_2n(x)]^2 dx = 1; n > 0, 1/2; n = 0"',
        tier=ASSERT,
        samples=grid(n=range(5)),
        lhs=lambda p, cfg: _orthogonality(int(p["n"]), 0, cfg),
        rhs=lambda p, cfg: 1.0 if p["n"] > 0 else 0.5,
        tol=1e-8,
    )
    yield Identity(
        id="eq35_orth_offdiag",
        citation='Eq (35) line 2, "int k_2n(x) k_(2n+2k)(x) dx = 0; k > 0, 1/2; k = 0"',
        tier=DIAGNOSE,
        samples=grid(n=(0, 1, 2), k=(0, 1, 2)),
        lhs=lambda p, cfg: _orthogonality(int(p["n"]), int(p["k"]), cfg),
        rhs=lambda p, cfg: 0.0 if p["k"] > 0 else 0.5,
        note="Neighbouring orders overlap by 1/2, and the diagonal is 1 for n > 0",
    )
    yield Identity(
        id="eq35_orth_offdiag_corrected",
        citation='Eq (35) line 2, "int k_2n(x) k_(2n+2k)(x) dx = 0; k > 0", with 1/2 at k = 1',
        tier=ASSERT,
        samples=grid(n=(0, 1, 2, 3), k=(1, 2, 3)),
        lhs=lambda p, cfg: _orthogonality(int(p["n"]), int(p["k"]), cfg),
        rhs=lambda p, cfg: 0.5 if p["k"] == 1 else 0.0,
        tol=1e-8,
    )
    yield Identity(
        id="eq35_orth_over_x",
        citation='Eq (35) line 3, "int k_n(x) k_2k(x)/x dx = 4 sin[pi(2k-n)/2] / (pi n (2k-n)); k > 0"',
        tier=ASSERT,
        samples=samples(
            {"n": 1, "k": 1}, {"n": 3, "k": 1}, {"n": 1, "k": 2}, {"n": 3, "k": 2}
        ),
        lhs=lambda p, cfg: _over_x(int(p["n"]), int(p["k"]), cfg),
        rhs=lambda p, cfg: _over_x_closed(int(p["n"]), int(p["k"])),
        tol=1e-8,
    )
    yield Identity(
        id="eq35_orth_over_x_diagonal",
        citation='Eq (35) line 3, "int k_n(x) k_2k(x)/x dx = 4 sin[pi(2k-n)/2] / (pi n (2k-n))", n = 2k',
        tier=DIAGNOSE,
        samples=samples({"n": 2, "k": 1}, {"n": 4, "k": 2}),
        lhs=lambda p, cfg: _over_x(int(p["n"]), int(p["k"]), cfg),
        rhs=lambda p, cfg: _over_x_closed(int(p["n"]), int(p["k"])),
        note="The printed formula is 0/0 on the diagonal n = 2k",
    )
    yield Identity(
        id="eq36_fullline",
        citation='Eq (36) line 1, "int k_2k(x) k_2m(x) dx = sin[pi(m-k)] / (pi (k-m+1)(k-m)(k-m-1))"',
        tier=ASSERT,
        samples=samples(
            {"k": 0, "m": 0},
            {"k": 0, "m": 1},
            {"k": 0, "m": 2},
            {"k": 1, "m": 1},
            {"k": 1, "m": 2},
            {"k": 2, "m": 2},
        ),
        lhs=lambda p, cfg: _full_line_numeric(int(p["k"]), int(p["m"]), cfg),
        rhs=lambda p, cfg: _full_line_closed(int(p["k"]), int(p["m"])),
        tol=1e-6,
        note="The right side is taken as its limit at k - m in {-1, 0, 1}",
    )
    yield Identity(
        id="eq36_pv",
        citation='Eq (36) line 2, "PV int k_(2k+1)(x) k_(2m+1)(x) dx/x = 0; k != m, 2/(pi(2k+1)); k = m"',
        tier=DIAGNOSE,
        samples=samples({"k": 0, "m": 0}, {"k": 0, "m": 1}, {"k": 1, "m": 1}),
        lhs=lambda p, cfg: _odd_pv(int(p["k"]), int(p["m"]), cfg),
        rhs=lambda p, cfg: 2.0 / (math.pi * (2 * p["k"] + 1)) if p["k"] == p["m"] else 0.0,
        note="At k = m = 0 the principal value is 2",
    )
    yield Identity(
        id="eq36_pv_corrected",
        citation='Eq (36) line 2, "PV int k_(2k+1)(x) k_(2m+1)(x) dx/x = 2/(pi(2k+1)); k = m", value 2 at k = 0',
        tier=ASSERT,
        samples=samples({"k": 0, "m": 0}),
        lhs=lambda p, cfg: _odd_pv(int(p["k"]), int(p["m"]), cfg),
        rhs=lambda p, cfg: 2.0,
        tol=1e-6,
    )
