"""
Integral representations of the special functions the package takes from scipy, checked
against direct quadrature of the representing integrals.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterator

from bateman import backends
from bateman.bateman_core import Kernel
from bateman.identity_registry.evaluators import t_form, theta_integral
from bateman.identity_registry.identity import Identity, Sample, Tier, grid
from bateman.quadrature import QuadConfig, integrate_finite, integrate_semiinf_decay

ASSERT, DIAGNOSE = Tier.ASSERT, Tier.DIAGNOSE


def _unit(f: Callable[[float], float], cfg: QuadConfig) -> float:
    return integrate_finite(f, 0.0, 1.0, cfg).value


def _half_line(f: Callable[[float], float], cfg: QuadConfig) -> float:
    return integrate_semiinf_decay(f, cfg).value


def _euler_integral(p: Sample, cfg: QuadConfig) -> float:
    a, b, c, z = p["a"], p["b"], p["c"], p["z"]
    return _unit(lambda t: t ** (b - 1.0) * (1.0 - t) ** (c - b - 1.0) / (1.0 - z * t) ** a, cfg)


def _gauss_printed(p: Sample, cfg: QuadConfig) -> float:
    scale = backends.gamma(p["c"]) / (backends.gamma(p["a"]) * backends.gamma(p["b"]))
    return scale * _euler_integral(p, cfg)


def _gauss_corrected(p: Sample, cfg: QuadConfig) -> float:
    scale = backends.gamma(p["c"]) / (backends.gamma(p["b"]) * backends.gamma(p["c"] - p["b"]))
    return scale * _euler_integral(p, cfg)


def _kummer_integral(p: Sample, cfg: QuadConfig) -> float:
    a, b, x = p["a"], p["b"], p["x"]
    integral = _unit(lambda t: t ** (a - 1.0) * math.exp(x * t) * (1.0 - t) ** (b - a - 1.0), cfg)
    return backends.gamma(b) / (backends.gamma(a) * backends.gamma(b - a)) * integral


def _tricomi_integral(p: Sample, cfg: QuadConfig) -> float:
    a, b, x = p["a"], p["b"], p["x"]

    def integrand(t: float) -> float:
        if t <= 0:
            return 0.0
        return t ** (a - 1.0) * math.exp(-x * t) * (1.0 + t) ** (b - a - 1.0)

    return _half_line(integrand, cfg) / backends.gamma(a)


def _whittaker_m_integral(p: Sample, cfg: QuadConfig) -> float:
    kappa, mu, x = p["kappa"], p["mu"], p["x"]
    integral = _unit(
        lambda t: t ** (mu - kappa - 0.5) * math.exp(x * t) * (1.0 - t) ** (mu + kappa - 0.5), cfg
    )
    scale = backends.gamma(1.0 + 2.0 * mu) * x ** (mu + 0.5) * math.exp(-0.5 * x)
    scale /= backends.gamma(mu + kappa + 0.5) * backends.gamma(mu - kappa + 0.5)
    return scale * integral


def _whittaker_w_confluent(p: Sample) -> float:
    kappa, mu, x = p["kappa"], p["mu"], p["x"]
    u = backends.tricomi_u(mu - kappa + 0.5, 1.0 + 2.0 * mu, x)
    return x ** (mu + 0.5) * math.exp(-0.5 * x) * u


def _schlaefli_tail(nu: float, x: float, cfg: QuadConfig) -> float:
    return _half_line(lambda t: math.exp(-x * math.sinh(t) - nu * t), cfg)


def _bessel_j_integral(p: Sample, cfg: QuadConfig) -> float:
    nu, x = p["nu"], p["x"]
    head = theta_integral(lambda t: math.cos(x * math.sin(t) - nu * t), cfg, upper=math.pi)
    tail = _schlaefli_tail(nu, x, cfg)
    return (head - math.sin(math.pi * nu) * tail) / math.pi


def _bessel_y_integral(p: Sample, cfg: QuadConfig, printed: bool) -> float:
    nu, x = p["nu"], p["x"]
    head = theta_integral(lambda t: math.sin(x * math.sin(t) - nu * t), cfg, upper=math.pi)
    cos_pi_nu = math.cos(math.pi * nu)

    # as printed the bracket sits under an extra e^(-nu t)
    def printed_integrand(t: float) -> float:
        kernel = -x * math.sinh(t)
        return math.exp(kernel) + math.exp(kernel - 2.0 * nu * t) * cos_pi_nu

    def schlaefli_integrand(t: float) -> float:
        kernel = -x * math.sinh(t)
        return math.exp(kernel + nu * t) + math.exp(kernel - nu * t) * cos_pi_nu

    if printed:
        tail = _half_line(printed_integrand, cfg)
        return (head - math.sin(math.pi * nu) * tail) / math.pi
    return (head - _half_line(schlaefli_integrand, cfg)) / math.pi


def _bessel_i_integral(p: Sample, cfg: QuadConfig) -> float:
    nu, x = p["nu"], p["x"]
    head = theta_integral(
        lambda t: math.exp(x * math.cos(t)) * math.cos(nu * t), cfg, upper=math.pi
    )
    tail = _half_line(lambda t: math.exp(-x * math.cosh(t) - nu * t), cfg)
    return (head - math.sin(math.pi * nu) * tail) / math.pi


def _basset_integral(p: Sample, cfg: QuadConfig, printed: bool) -> float:
    nu, x = p["nu"], p["x"]
    exponent = -nu - 0.5
    # t_form carries a factor 2/pi
    integral = 0.5 * math.pi * t_form(
        Kernel.COS, x, lambda t: (1.0 + t * t) ** exponent, cfg=cfg
    )
    power = (2.0 * x) ** nu if printed else (2.0 / x) ** nu
    return backends.gamma(nu + 0.5) * power / math.sqrt(math.pi) * integral


def _bessel_k_cosh(p: Sample, cfg: QuadConfig) -> float:
    nu, x = p["nu"], p["x"]

    def integrand(t: float) -> float:
        kernel = -x * math.cosh(t)
        return 0.5 * (math.exp(kernel + nu * t) + math.exp(kernel - nu * t))

    return _half_line(integrand, cfg)


def _struve_scale(nu: float, x: float) -> float:
    return 2.0 * (0.5 * x) ** nu / (backends.gamma(nu + 0.5) * math.sqrt(math.pi))


def _struve_h_integral(p: Sample, cfg: QuadConfig) -> float:
    nu, x = p["nu"], p["x"]
    integral = _unit(lambda t: (1.0 - t * t) ** (nu - 0.5) * math.sin(x * t), cfg)
    return _struve_scale(nu, x) * integral


def _struve_l_integral(p: Sample, cfg: QuadConfig) -> float:
    nu, x = p["nu"], p["x"]
    integral = theta_integral(
        lambda t: math.sin(t) ** (2.0 * nu) * math.sinh(x * math.cos(t)), cfg
    )
    return _struve_scale(nu, x) * integral


def identities() -> Iterator[Identity]:
    gauss_grid = grid(a=(0.5, 1.0), b=(1.5,), c=(3.0,), z=(-0.5, 0.25, 0.5))
    yield Identity(
        id="C1",
        citation='(C.1), "2F1(a,b;c;x) = G(c)/(G(a) G(b)) int_0^1 t^(b-1) (1-t)^(c-b-1) '
        '/ (1-xt)^a dt"',
        tier=DIAGNOSE,
        samples=gauss_grid,
        lhs=lambda p, cfg: backends.hyp_gauss_2f1(p["a"], p["b"], p["c"], p["z"]),
        rhs=_gauss_printed,
        note="The prefactor should read G(c)/(G(b) G(c-b))",
    )
    yield Identity(
        id="C1_corrected",
        citation='(C.1), "2F1(a,b;c;x) = G(c)/(G(b) G(c-b)) int_0^1 t^(b-1) (1-t)^(c-b-1) '
        '/ (1-xt)^a dt"',
        tier=ASSERT,
        samples=gauss_grid,
        lhs=lambda p, cfg: backends.hyp_gauss_2f1(p["a"], p["b"], p["c"], p["z"]),
        rhs=_gauss_corrected,
    )
    yield Identity(
        id="C2",
        citation='(C.2), "M(a,b,x) = G(b)/(G(a) G(b-a)) int_0^1 t^(a-1) e^(xt) (1-t)^(b-a-1) dt"',
        tier=ASSERT,
        samples=grid(a=(0.5, 1.5), b=(2.5,), x=(-1.0, 0.5, 2.0)),
        lhs=lambda p, cfg: backends.hyp_kummer_m(p["a"], p["b"], p["x"]),
        rhs=_kummer_integral,
    )
    yield Identity(
        id="C3",
        citation='(C.3), "U(a,b,x) = 1/G(a) int_0^inf t^(a-1) e^(-xt) (1+t)^(b-a-1) dt"',
        tier=ASSERT,
        samples=grid(a=(0.5, 1.5), b=(0.5, 2.5), x=(0.5, 2.0)),
        lhs=lambda p, cfg: backends.tricomi_u(p["a"], p["b"], p["x"]),
        rhs=_tricomi_integral,
    )
    whittaker_grid = grid(kappa=(-0.25, 0.25), mu=(0.5, 1.0), x=(0.5, 2.0))
    yield Identity(
        id="C4",
        citation='(C.4), "M_(k,m)(x) = G(1+2m) x^(m+1/2) e^(-x/2) / (G(m+k+1/2) G(m-k+1/2)) '
        'int_0^1 t^(m-k-1/2) e^(xt) (1-t)^(m+k-1/2) dt"',
        tier=ASSERT,
        samples=whittaker_grid,
        lhs=lambda p, cfg: backends.whittaker_m(p["kappa"], p["mu"], p["x"]),
        rhs=_whittaker_m_integral,
    )
    yield Identity(
        id="C5",
        citation='(C.5), "W_(k,m)(x) = x^(m+1/2) e^(-x/2) / G(m-k+1/2) int_0^inf t^(m-k-1/2) '
        'e^(-xt) (1+t)^(m+k-1/2) dt = x^(m+1/2) e^(-x/2) U(m-k+1/2, 1+2m, x)"',
        tier=ASSERT,
        samples=whittaker_grid,
        lhs=lambda p, cfg: backends.whittaker_w(p["kappa"], p["mu"], p["x"], cfg),
        rhs=lambda p, cfg: _whittaker_w_confluent(p),
    )
    yield from _bessel_representations()
    struve_grid = grid(nu=(0.0, 0.5, 1.5), x=(0.5, 2.0, 5.0))
    yield Identity(
        id="C10",
        citation='(C.10), "H_v(x) = 2 (x/2)^v / (G(v+1/2) sqrt pi) int_0^1 (1-t^2)^(v-1/2) '
        'sin(xt) dt"',
        tier=ASSERT,
        samples=struve_grid,
        lhs=lambda p, cfg: backends.struve("H", p["nu"], p["x"]),
        rhs=_struve_h_integral,
    )
    yield Identity(
        id="C11",
        citation='(C.11), "L_v(x) = 2 (x/2)^v / (G(v+1/2) sqrt pi) int_0^(pi/2) sin^(2v) t '
        'sinh(x cos t) dt"',
        tier=ASSERT,
        samples=struve_grid,
        lhs=lambda p, cfg: backends.struve("L", p["nu"], p["x"]),
        rhs=_struve_l_integral,
    )


def _bessel_representations() -> Iterator[Identity]:
    jy_grid = grid(nu=(0.5, 1.0, 1.5, 2.0), x=(0.5, 2.0, 5.0))
    yield Identity(
        id="C6",
        citation='(C.6), "J_v(x) = (1/pi) int_0^pi cos(x sin t - v t) dt - sin(pi v)/pi '
        'int_0^inf e^(-x sinh t - v t) dt"',
        tier=ASSERT,
        samples=jy_grid,
        lhs=lambda p, cfg: backends.bessel("J", p["nu"], p["x"]),
        rhs=_bessel_j_integral,
    )
    yield Identity(
        id="C7",
        citation='(C.7), "Y_v(x) = (1/pi) int_0^pi sin(x sin t - v t) dt - sin(pi v)/pi '
        'int_0^inf e^(-x sinh t - v t) [e^(v t) + e^(-v t) cos(pi v)] dt"',
        tier=DIAGNOSE,
        samples=jy_grid,
        lhs=lambda p, cfg: backends.bessel("Y", p["nu"], p["x"]),
        rhs=lambda p, cfg: _bessel_y_integral(p, cfg, printed=True),
        note="Neither the factor sin(pi v) nor the e^(-v t) in front of the bracket belongs there",
    )
    yield Identity(
        id="C7_corrected",
        citation='(C.7), "Y_v(x) = (1/pi) int_0^pi sin(x sin t - v t) dt - (1/pi) '
        'int_0^inf e^(-x sinh t) [e^(v t) + e^(-v t) cos(pi v)] dt"',
        tier=ASSERT,
        samples=jy_grid,
        lhs=lambda p, cfg: backends.bessel("Y", p["nu"], p["x"]),
        rhs=lambda p, cfg: _bessel_y_integral(p, cfg, printed=False),
    )
    yield Identity(
        id="C8",
        citation='(C.8), "I_v(x) = (1/pi) int_0^pi e^(x cos t) cos(v t) dt - sin(pi v)/pi '
        'int_0^inf e^(-x cosh t - v t) dt"',
        tier=ASSERT,
        samples=grid(nu=(0.5, 1.3, 2.0), x=(0.5, 2.0, 5.0)),
        lhs=lambda p, cfg: backends.bessel("I", p["nu"], p["x"]),
        rhs=_bessel_i_integral,
    )
    k_grid = grid(nu=(0.5, 1.5, 2.0), x=(0.5, 2.0))
    yield Identity(
        id="C9",
        citation='(C.9) first form, "K_v(x) = G(v+1/2) (2x)^v / sqrt pi int_0^inf cos(xt) '
        '/ (1+t^2)^(v+1/2) dt"',
        tier=DIAGNOSE,
        samples=k_grid,
        lhs=lambda p, cfg: backends.bessel("K", p["nu"], p["x"]),
        rhs=lambda p, cfg: _basset_integral(p, cfg, printed=True),
        note="The power should read (2/x)^v",
    )
    yield Identity(
        id="C9_corrected",
        citation='(C.9) first form, "K_v(x) = G(v+1/2) (2/x)^v / sqrt pi int_0^inf cos(xt) '
        '/ (1+t^2)^(v+1/2) dt"',
        tier=ASSERT,
        samples=k_grid,
        lhs=lambda p, cfg: backends.bessel("K", p["nu"], p["x"]),
        rhs=lambda p, cfg: _basset_integral(p, cfg, printed=False),
        tol=1e-7,
    )
    yield Identity(
        id="C9_cosh",
        citation='(C.9) second form, "K_v(x) = int_0^inf e^(-x cosh t) cosh(v t) dt"',
        tier=ASSERT,
        samples=k_grid,
        lhs=lambda p, cfg: backends.bessel("K", p["nu"], p["x"]),
        rhs=_bessel_k_cosh,
    )
