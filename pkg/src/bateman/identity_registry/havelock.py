"""
Identities of the Havelock functions h_n(x): logarithmic-integral closed forms, values and
bounds, recurrences, mixed Bateman-Havelock relations and series in h_n(nx) and k_n(nx).
"""

from __future__ import annotations

import math
from collections.abc import Iterator

from numpy.polynomial import Polynomial

from bateman import backends
from bateman.bateman_core import TWO_OVER_PI, Kernel
from bateman.constants import MATH
from bateman.identity_registry.evaluators import (
    dh,
    dk,
    h,
    k,
    t_form,
    theta_integral,
    truncation_length,
)
from bateman.identity_registry.identity import Identity, Sample, Tier, grid
from bateman.quadrature import QuadConfig, integrate_semiinf_periodic

ASSERT, DIAGNOSE = Tier.ASSERT, Tier.DIAGNOSE

X_GRID = (0.5, 1.0, 2.0)

# h_2m(x) as printed: [P(x) e^-x li(e^x) - Q(x)] / d, coefficients in increasing powers of x
_LI_FORMS: dict[int, tuple[tuple[float, ...], tuple[float, ...], float]] = {
    1: ((0.0, 1.0), (1.0,), 1.0),
    2: ((0.0, -1.0, 1.0), (0.0, 1.0), 1.0),
    3: ((0.0, 3.0, -6.0, 2.0), (1.0, -4.0, 2.0), 3.0),
    4: ((0.0, -3.0, 9.0, -6.0, 1.0), (0.0, 5.0, -5.0, 1.0), 3.0),
    5: ((0.0, 15.0, -60.0, 60.0, -20.0, 2.0), (3.0, -28.0, 44.0, -18.0, 2.0), 15.0),
    6: (
        (0.0, -45.0, 225.0, -300.0, 150.0, -30.0, 2.0),
        (0.0, 93.0, -198.0, 124.0, -28.0, 2.0),
        45.0,
    ),
}

# Decay of h_n is checked against its leading term 2/(pi x) this far out
_FAR_X = 400.0

_SERIES_EPS = 1e-12


def li_exp(x: float) -> float:
    """li(e^x) = Ei(x)."""
    return backends.exp_integral_ei(x)


def _printed_li_form(m: int, x: float) -> float:
    if m == 0:
        return 0.5 * (math.exp(x) * li_exp(-x) - math.exp(-x) * li_exp(x))
    p, q, d = _LI_FORMS[m]
    return (Polynomial(p)(x) * math.exp(-x) * li_exp(x) - Polynomial(q)(x)) / d


def _corrected_li_form(m: int, x: float) -> float:
    scale = -TWO_OVER_PI if m == 0 else TWO_OVER_PI
    return scale * _printed_li_form(m, x)


def _li_series(x: float, printed: bool) -> float:
    # gamma + ln z + sum z^n / (n! n); as printed z = e^x, but the series only sums to Ei in x
    z = math.exp(x) if printed else x
    total = MATH.euler_gamma + math.log(abs(z))
    n = 1
    term = z
    while True:
        total += term / n
        if abs(term) < _SERIES_EPS * abs(total) and n > z:
            return total
        n += 1
        term *= z / n


def _havelock_t_form_h1(x: float, cfg: QuadConfig) -> float:
    def sin_weight(t: float) -> float:
        return (1.0 + t * t) ** -1.5

    def cos_weight(t: float) -> float:
        return t * (1.0 + t * t) ** -1.5

    return t_form(Kernel.SIN, x, sin_weight, cfg=cfg) - t_form(Kernel.COS, x, cos_weight, cfg=cfg)


def _havelock_t_form_h0(x: float, cfg: QuadConfig) -> float:
    return t_form(Kernel.SIN, x, lambda t: 1.0 / (1.0 + t * t), cfg=cfg)


def _zero_value(n: int) -> float:
    return theta_integral(lambda theta: TWO_OVER_PI * math.sin(-n * theta))


def identities() -> Iterator[Identity]:
    li_rows = (
        ("eq47", "Eq (47)", range(4)),
        ("eq48", "Eq (48)", range(4, 7)),
    )
    for prefix, label, orders in li_rows:
        for m in orders:
            yield Identity(
                id=f"{prefix}_h{2 * m}",
                citation=f'{label}, "h_{2 * m}(x) in terms of li(e^x)", as printed',
                tier=DIAGNOSE,
                samples=grid(x=(0.5, 1.0, 2.0, 5.0)),
                lhs=lambda p, cfg, m=m: h(2 * m, p["x"], cfg),
                rhs=lambda p, cfg, m=m: _printed_li_form(m, p["x"]),
                note="Missing the factor 2/pi (and the sign for h_0)",
            )
            yield Identity(
                id=f"{prefix}_h{2 * m}_corrected",
                citation=f'{label}, "h_{2 * m}(x) in terms of li(e^x)", times {"-" if m == 0 else ""}2/pi',
                tier=ASSERT,
                samples=grid(x=(0.5, 1.0, 2.0, 5.0)),
                lhs=lambda p, cfg, m=m: h(2 * m, p["x"], cfg),
                rhs=lambda p, cfg, m=m: _corrected_li_form(m, p["x"]),
                tol=1e-9,
            )
    yield Identity(
        id="eq49_li_series",
        citation='Eq (49), "li(z) = gamma + ln z + sum z^n/(n! n), z = e^x"',
        tier=DIAGNOSE,
        samples=grid(x=(0.5, 1.0, 2.0)),
        lhs=lambda p, cfg: _li_series(p["x"], printed=True),
        rhs=lambda p, cfg: li_exp(p["x"]),
        note="The power series runs in ln z = x, not in z",
    )
    yield Identity(
        id="eq49_li_series_corrected",
        citation='Eq (49), "li(z) = gamma + ln z + sum z^n/(n! n)", with (ln z)^n',
        tier=ASSERT,
        samples=grid(x=(-1.0, 0.5, 1.0, 2.0, 5.0)),
        lhs=lambda p, cfg: _li_series(p["x"], printed=False),
        rhs=lambda p, cfg: li_exp(p["x"]),
        tol=1e-10,
    )
    yield from _srivastava_identities()
    yield from _recurrences()
    yield from _mixed_identities()
    yield from _scaled_series()


def _srivastava_identities() -> Iterator[Identity]:
    yield Identity(
        id="eq50_bound",
        citation='Eq (50) line 1, "|h_n(x)| <= 1"',
        tier=ASSERT,
        samples=grid(n=range(7), x=(0.1, 0.5, 1.0, 2.0, 5.0)),
        lhs=lambda p, cfg: max(0.0, abs(h(p["n"], p["x"], cfg)) - 1.0),
        rhs=lambda p, cfg: 0.0,
        tol=1e-12,
    )
    yield Identity(
        id="eq50_zero",
        citation='Eq (50) line 2, "h_n(0) = (2/(pi n)) [cos(pi n/2) - 1]"',
        tier=ASSERT,
        samples=grid(n=range(1, 9)),
        lhs=lambda p, cfg: _zero_value(int(p["n"])),
        rhs=lambda p, cfg: 2.0 / (math.pi * p["n"]) * (math.cos(0.5 * math.pi * p["n"]) - 1.0),
        tol=1e-12,
    )
    yield Identity(
        id="eq50_zero_even",
        citation='Eq (50) line 3, "h_2n(0) = [1 - (-1)^n] / (pi n)"',
        tier=DIAGNOSE,
        samples=grid(n=range(1, 5)),
        lhs=lambda p, cfg: _zero_value(2 * int(p["n"])),
        rhs=lambda p, cfg: (1.0 - (-1.0) ** p["n"]) / (math.pi * p["n"]),
        note="Sign flipped; h_2(0) = -2/pi",
    )
    yield Identity(
        id="eq50_zero_even_corrected",
        citation='Eq (50) line 3, "h_2n(0) = [1 - (-1)^n] / (pi n)", negated',
        tier=ASSERT,
        samples=grid(n=range(1, 5)),
        lhs=lambda p, cfg: _zero_value(2 * int(p["n"])),
        rhs=lambda p, cfg: -(1.0 - (-1.0) ** p["n"]) / (math.pi * p["n"]),
        tol=1e-12,
    )
    yield Identity(
        id="eq50_zero_quarter",
        citation='Eq (50) line 4, "h_4n(0) = 0"',
        tier=ASSERT,
        samples=grid(n=range(1, 4)),
        lhs=lambda p, cfg: h(4 * p["n"], 0.0, cfg),
        rhs=lambda p, cfg: 0.0,
        tol=1e-12,
    )
    yield Identity(
        id="eq50_decay",
        citation='Eq (50) line 5, "lim h_n(x) = 0 as x -> inf"',
        tier=ASSERT,
        samples=grid(n=(0, 2, 4)),
        lhs=lambda p, cfg: h(p["n"], _FAR_X, cfg),
        rhs=lambda p, cfg: TWO_OVER_PI / _FAR_X,
        tol=1e-4,
        note="Compared with the leading term 2/(pi x) at x = 400",
    )
    yield Identity(
        id="eq50_decay_derivative",
        citation='Eq (50) line 5, "lim h\'_n(x) = 0 as x -> inf"',
        tier=ASSERT,
        samples=grid(n=(0, 2, 4)),
        lhs=lambda p, cfg: dh(p["n"], _FAR_X, cfg=cfg),
        rhs=lambda p, cfg: 0.0,
        tol=1e-4,
    )
    yield Identity(
        id="eq51_h0",
        citation='Eq (51) line 1, "h_0(x) = (2/pi) int sin(xt)/(1+t^2) dt"',
        tier=ASSERT,
        samples=grid(x=X_GRID),
        lhs=lambda p, cfg: h(0, p["x"], cfg),
        rhs=lambda p, cfg: _havelock_t_form_h0(p["x"], cfg),
        tol=1e-8,
    )
    yield Identity(
        id="eq51_h1",
        citation='Eq (51) line 4, "h_1(x) = (2/pi) int [sin(xt) - t cos(xt)] / (1+t^2)^(3/2) dt"',
        tier=ASSERT,
        samples=grid(x=X_GRID),
        lhs=lambda p, cfg: h(1, p["x"], cfg),
        rhs=lambda p, cfg: _havelock_t_form_h1(p["x"], cfg),
        tol=1e-8,
    )


def _recurrences() -> Iterator[Identity]:
    recurrence_grid = grid(n=(2, 3, 4), x=X_GRID)
    yield Identity(
        id="eq52_three_term",
        citation='Eq (52) line 1, "(2n-4x) h_n + (n-2) h_(n-2) + (n+2) h_(n+2) = -8/pi"',
        tier=ASSERT,
        samples=recurrence_grid,
        lhs=lambda p, cfg: (2 * p["n"] - 4 * p["x"]) * h(p["n"], p["x"], cfg)
        + (p["n"] - 2) * h(p["n"] - 2, p["x"], cfg)
        + (p["n"] + 2) * h(p["n"] + 2, p["x"], cfg),
        rhs=lambda p, cfg: -8.0 / math.pi,
        tol=1e-7,
    )
    yield Identity(
        id="eq52_derivative",
        citation='Eq (52) line 2, "4x h\'_n = (n-2) h_(n-2) - (n+2) h_(n+2)"',
        tier=ASSERT,
        samples=recurrence_grid,
        lhs=lambda p, cfg: 4 * p["x"] * dh(p["n"], p["x"], cfg=cfg),
        rhs=lambda p, cfg: (p["n"] - 2) * h(p["n"] - 2, p["x"], cfg)
        - (p["n"] + 2) * h(p["n"] + 2, p["x"], cfg),
        tol=1e-6,
    )
    yield Identity(
        id="eq52_adjacent",
        citation='Eq (52) line 3, "h\'_(n-1) + h\'_(n+1) = h_(n-1) - h_(n+1)"',
        tier=ASSERT,
        samples=recurrence_grid,
        lhs=lambda p, cfg: dh(p["n"] - 1, p["x"], cfg=cfg) + dh(p["n"] + 1, p["x"], cfg=cfg),
        rhs=lambda p, cfg: h(p["n"] - 1, p["x"], cfg) - h(p["n"] + 1, p["x"], cfg),
        tol=1e-6,
    )
    yield Identity(
        id="eq52_ode",
        citation='Eq (52) line 4, "x h\'\'_n = (x-n) h_n - 2/pi"',
        tier=ASSERT,
        samples=recurrence_grid,
        lhs=lambda p, cfg: p["x"] * dh(p["n"], p["x"], 2, cfg),
        rhs=lambda p, cfg: (p["x"] - p["n"]) * h(p["n"], p["x"], cfg) - TWO_OVER_PI,
        tol=1e-5,
    )


def _mixed_identities() -> Iterator[Identity]:
    mixed_grid = grid(n=(2, 4), x=X_GRID)

    def cross(p: Sample, cfg: QuadConfig, sign: float) -> float:
        n, x = p["n"], p["x"]
        kn, hn = k(n, x, cfg), h(n, x, cfg)
        below = kn * h(n - 2, x, cfg) + sign * k(n - 2, x, cfg) * hn
        above = kn * h(n + 2, x, cfg) + sign * k(n + 2, x, cfg) * hn
        return (n - 2) * below + (n + 2) * above

    yield Identity(
        id="eq58_cross",
        citation='Eq (58) line 1, "(n-2)[k_n h_(n-2) - k_(n-2) h_n] + (n+2)[k_n h_(n+2) - k_(n+2) h_n] = -(8/pi) k_n"',
        tier=ASSERT,
        samples=mixed_grid,
        lhs=lambda p, cfg: cross(p, cfg, -1.0),
        rhs=lambda p, cfg: -8.0 / math.pi * k(p["n"], p["x"], cfg),
        tol=1e-7,
    )
    yield Identity(
        id="eq58_derivative",
        citation='Eq (58) line 2, "4x[k_n h\'_(n-2) + k\'_(n-2) h_n] = (n-2)[k_n h_(n-2) + k_(n-2) h_n] + (n+2)[k_n h_(n+2) + k_(n+2) h_n]"',
        tier=DIAGNOSE,
        samples=mixed_grid,
        lhs=lambda p, cfg: 4
        * p["x"]
        * (
            k(p["n"], p["x"], cfg) * dh(p["n"] - 2, p["x"], cfg=cfg)
            + dk(p["n"] - 2, p["x"], cfg=cfg) * h(p["n"], p["x"], cfg)
        ),
        rhs=lambda p, cfg: cross(p, cfg, 1.0),
        note="Does not follow from the separate k and h recurrences",
    )
    yield Identity(
        id="eq58_wronskian",
        citation='Eq (58) line 3, "k_n h\'\'_n - k\'\'_n h_n = -(2/(pi x)) k_n"',
        tier=ASSERT,
        samples=mixed_grid,
        lhs=lambda p, cfg: k(p["n"], p["x"], cfg) * dh(p["n"], p["x"], 2, cfg)
        - dk(p["n"], p["x"], 2, cfg) * h(p["n"], p["x"], cfg),
        rhs=lambda p, cfg: -TWO_OVER_PI / p["x"] * k(p["n"], p["x"], cfg),
        tol=1e-5,
    )


def _sine_series(t: float, alpha: float) -> float:
    n_terms = truncation_length(t, _SERIES_EPS)
    return TWO_OVER_PI * math.fsum(t**n * math.sin(n * alpha) for n in range(1, n_terms + 1))


def _poisson_sine(t: float, phi: float) -> float:
    return t * math.sin(phi) / (1.0 - 2.0 * t * math.cos(phi) + t * t)


def _poisson_cosine(t: float, phi: float) -> float:
    return (1.0 - t * math.cos(phi)) / (1.0 - 2.0 * t * math.cos(phi) + t * t)


def _scaled_sum(fn: str, t: float, x: float, cfg: QuadConfig) -> float:
    evaluate = h if fn == "h" else k
    n_terms = truncation_length(t, _SERIES_EPS)
    return math.fsum(t**n * evaluate(n, n * x, cfg) for n in range(1, n_terms + 1))


def _poisson_theta_integral(t: float, x: float, cfg: QuadConfig, cosine: bool) -> float:
    # (2/pi) int_0^(pi/2) P(x tan theta - theta) d theta, taken over u = tan theta in periods 2 pi/x
    if cosine:

        def integrand(u: float) -> float:
            return (_poisson_cosine(t, x * u - math.atan(u)) - 1.0) / (1.0 + u * u)

        mean = 0.5 * math.pi
    else:

        def integrand(u: float) -> float:
            return _poisson_sine(t, x * u - math.atan(u)) / (1.0 + u * u)

        mean = 0.0
    result = integrate_semiinf_periodic(integrand, 2.0 * math.pi / x, cfg, mean)
    return TWO_OVER_PI * result.value


def _scaled_series() -> Iterator[Identity]:
    yield Identity(
        id="eq60_sine_series",
        citation='Eq (60), "(2/pi) sum t^n sin(n alpha) = (2/pi) t sin(alpha) / (1 - 2t cos(alpha) + t^2)"',
        tier=ASSERT,
        samples=grid(t=(-0.5, 0.3, 0.8), alpha=(0.4, 1.3, 2.5)),
        lhs=lambda p, cfg: _sine_series(p["t"], p["alpha"]),
        rhs=lambda p, cfg: TWO_OVER_PI * _poisson_sine(p["t"], p["alpha"]),
        tol=1e-10,
    )
    scaled_grid = grid(t=(0.3, 0.5), x=(0.5, 1.0))
    yield Identity(
        id="eq61_h_series",
        citation='Eq (61), "sum t^n h_n(nx) = (2/pi) int t sin(x tan - theta) / (1 - 2t cos(...) + t^2) d theta"',
        tier=ASSERT,
        samples=scaled_grid,
        lhs=lambda p, cfg: _scaled_sum("h", p["t"], p["x"], cfg),
        rhs=lambda p, cfg: _poisson_theta_integral(p["t"], p["x"], cfg, cosine=False),
        tol=1e-6,
    )
    yield Identity(
        id="eq62_k_series",
        citation='Eq (62), "sum t^n k_n(nx) = (2/pi) int [1 - t cos(...)] / (1 - 2t cos(...) + t^2) d theta"',
        tier=DIAGNOSE,
        samples=scaled_grid,
        lhs=lambda p, cfg: _scaled_sum("k", p["t"], p["x"], cfg),
        rhs=lambda p, cfg: _poisson_theta_integral(p["t"], p["x"], cfg, cosine=True),
        note="The right side includes the n = 0 term, k_0(0) = 1",
    )
    yield Identity(
        id="eq62_k_series_corrected",
        citation='Eq (62), "sum t^n k_n(nx) = (2/pi) int [1 - t cos(...)] / (1 - 2t cos(...) + t^2) d theta", minus 1',
        tier=ASSERT,
        samples=scaled_grid,
        lhs=lambda p, cfg: _scaled_sum("k", p["t"], p["x"], cfg),
        rhs=lambda p, cfg: _poisson_theta_integral(p["t"], p["x"], cfg, cosine=True) - 1.0,
        tol=1e-6,
    )
