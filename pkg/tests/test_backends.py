import math
from collections.abc import Callable

import pytest
from scipy import special

from bateman import backends, errors


def test_gamma_poles() -> None:
    assert backends.gamma(5.0) == pytest.approx(24.0)
    for pole in (0.0, -1.0, -3.0):
        with pytest.raises(errors.PoleError):
            backends.gamma(pole)
    assert backends.rgamma(-2.0) == 0.0


def test_exponential_integrals() -> None:
    assert backends.exp_integral_ei(1.5) == pytest.approx(special.expi(1.5), rel=1e-14)
    assert backends.exp_integral_ei(-1.5) == pytest.approx(-special.exp1(1.5), rel=1e-14)
    assert backends.exp_integral_e1(2.0) == pytest.approx(special.exp1(2.0), rel=1e-14)
    with pytest.raises(errors.SingularError):
        backends.exp_integral_ei(0.0)
    with pytest.raises(errors.DomainError):
        backends.exp_integral_e1(0.0)


@pytest.mark.parametrize(
    "kind, nu, x, oracle",
    [
        ("J", 2.0, 1.3, special.jv),
        ("J", 1.5, 1.3, special.jv),
        ("Y", 0.5, 2.0, special.yv),
        ("I", 0.3, 1.0, special.iv),
        ("K", 1.7, 0.4, special.kv),
    ],
)
def test_bessel_matches_scipy(
    kind: str, nu: float, x: float, oracle: Callable[[float, float], float]
) -> None:
    assert backends.bessel(kind, nu, x) == pytest.approx(oracle(nu, x), rel=1e-14)


def test_bessel_guards() -> None:
    with pytest.raises(errors.UnsupportedOrderError):
        backends.bessel("J", 0.3, 1.0)
    with pytest.raises(errors.DomainError):
        backends.bessel("K", 1.0, 0.0)
    with pytest.raises(errors.DomainError):
        backends.bessel("I", 0.5, -1.0)
    # integer orders are fine on the negative axis
    assert backends.bessel("J", 1, -2.0) == pytest.approx(-special.jv(1, 2.0))


def test_struve_guards() -> None:
    assert backends.struve("H", 0.5, 0.0) == 0.0
    assert backends.struve("L", -1.0, 0.0) == pytest.approx(2.0 / math.pi)
    assert backends.struve("L", 0.5, 2.0) == pytest.approx(special.modstruve(0.5, 2.0))
    with pytest.raises(errors.UnsupportedError):
        backends.struve("H", 0.0, 41.0)
    with pytest.raises(errors.DomainError):
        backends.struve("H", -1.5, 0.0)


@pytest.mark.parametrize("alpha", [-1.5, -2.5, 0.0, 1.5])
def test_laguerre_degree_two(alpha: float) -> None:
    x = 0.7
    expected = 0.5 * (x * x - 2.0 * (alpha + 2.0) * x + (alpha + 1.0) * (alpha + 2.0))
    assert backends.laguerre(2, alpha, x) == pytest.approx(expected, abs=1e-14)


def test_hermite_physicists_convention() -> None:
    x = 0.8
    assert backends.hermite(2, x) == pytest.approx(4.0 * x * x - 2.0)
    with pytest.raises(errors.DomainError):
        backends.hermite(-1, x)


def test_kummer_terminating_series_at_negative_b() -> None:
    x = 1.0
    # M(-2, -3, x) = 1 + 2x/3 + x^2/6
    assert backends.hyp_kummer_m(-2.0, -3.0, x) == pytest.approx(1.0 + 2.0 / 3.0 + 1.0 / 6.0)
    with pytest.raises(errors.ParameterPoleError):
        backends.hyp_kummer_m(1.0, -2.0, x)
    assert backends.hyp_kummer_m(0.5, 1.5, 2.0) == pytest.approx(special.hyp1f1(0.5, 1.5, 2.0))


def test_gauss_hypergeometric() -> None:
    assert backends.hyp_gauss_2f1(1.0, 2.0, 1.5, 0.3) == pytest.approx(
        special.hyp2f1(1.0, 2.0, 1.5, 0.3)
    )
    with pytest.raises(errors.ParameterPoleError):
        backends.hyp_gauss_2f1(1.0, 2.0, -1.0, 0.3)
    with pytest.raises(errors.DomainError):
        backends.hyp_gauss_2f1(1.0, 2.0, 1.5, 1.5)


def test_tricomi_u() -> None:
    assert backends.tricomi_u(0.4, 2.0, 1.2) == pytest.approx(special.hyperu(0.4, 2.0, 1.2))
    with pytest.raises(errors.DomainError):
        backends.tricomi_u(0.4, 2.0, 0.0)


@pytest.mark.parametrize("a, x", [(-0.5, 1.0), (-1.5, 0.4), (0.3, 2.0)])
def test_tricomi_u_with_zero_b(a: float, x: float) -> None:
    value = backends.tricomi_u(a, 0.0, x)
    assert math.isfinite(value)
    assert value == pytest.approx(x * special.hyperu(1.0 + a, 2.0, x), rel=1e-12)


def test_tricomi_u_zero_b_polynomial_case() -> None:
    # U(-1, 0, x) = x
    assert backends.tricomi_u(-1.0, 0.0, 3.0) == pytest.approx(3.0, rel=1e-12)


@pytest.mark.parametrize("kappa, mu, x", [(0.25, 0.75, 1.0), (-0.5, 0.3, 2.5)])
def test_whittaker_functions(kappa: float, mu: float, x: float) -> None:
    prefactor = x ** (mu + 0.5) * math.exp(-0.5 * x)
    w = prefactor * special.hyperu(mu - kappa + 0.5, 1.0 + 2.0 * mu, x)
    m = prefactor * special.hyp1f1(mu - kappa + 0.5, 1.0 + 2.0 * mu, x)
    assert backends.whittaker_w(kappa, mu, x) == pytest.approx(w, rel=1e-7)
    assert backends.whittaker_m(kappa, mu, x) == pytest.approx(m, rel=1e-12)


def test_kelvin_functions() -> None:
    ber, bei = backends.kelvin_ber_bei(1.0)
    assert (ber, bei) == pytest.approx((special.ber(1.0), special.bei(1.0)))
    with pytest.raises(errors.UnsupportedError):
        backends.kelvin_ber_bei(25.0)
