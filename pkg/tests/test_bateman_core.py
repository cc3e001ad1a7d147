import math
from collections.abc import Callable

import numpy as np
import pytest
from scipy import integrate, special

from bateman import errors
from bateman.bateman_core import (
    FunctionId,
    Order,
    OrderClass,
    bateman_k,
    bateman_k_bessel,
    bateman_k_quadrature,
    bateman_k_tricomi,
    classify_order,
    derivative_nu,
    derivative_x,
    even_order_sequence,
    havelock_h,
    havelock_h_quadrature,
    laguerre_form,
    special_value_at_zero,
)
from bateman.quadrature import Method, QuadConfig

ARGUMENTS = [0.25, 0.5, 1.0, 2.0, 4.0, 8.0]


def _qawf(f: Callable[[float], float], x: float, weight: str) -> float:
    result = integrate.quad(f, 0.0, np.inf, weight=weight, wvar=x, epsabs=1e-12, limlst=100)
    return float(result[0])


def fourier_oracle(nu: float, x: float, sine: bool) -> float:
    """(2/pi) int_0^inf kernel(x t - nu atan t) / (1 + t^2) dt through QUADPACK's QAWF."""

    def cos_part(t: float) -> float:
        return math.cos(nu * math.atan(t)) / (1.0 + t * t)

    def sin_part(t: float) -> float:
        return math.sin(nu * math.atan(t)) / (1.0 + t * t)

    # cos(xt - p) = cos(xt) cos(p) + sin(xt) sin(p)
    # sin(xt - p) = sin(xt) cos(p) - cos(xt) sin(p)
    if sine:
        value = _qawf(cos_part, x, "sin") - _qawf(sin_part, x, "cos")
    else:
        value = _qawf(cos_part, x, "cos") + _qawf(sin_part, x, "sin")
    return 2.0 / math.pi * value


def tricomi_oracle(nu: float, x: float) -> float:
    return (
        2.0 * x * math.exp(-x) * special.hyperu(1.0 - nu / 2.0, 2.0, 2.0 * x)
        / special.gamma(1.0 + nu / 2.0)
    )


@pytest.mark.parametrize(
    "nu, kind",
    [
        (0.0, OrderClass.EVEN_INT),
        (-4.0, OrderClass.EVEN_INT),
        (3.0 + 1e-13, OrderClass.ODD_INT),
        (2.5, OrderClass.HALF_INT),
        (-0.5, OrderClass.HALF_INT),
        (1.3, OrderClass.GENERAL),
    ],
)
def test_classify_order(nu: float, kind: OrderClass) -> None:
    assert classify_order(nu).kind is kind


def test_order_snaps_and_negates() -> None:
    order = classify_order(2.0 - 1e-13)
    assert order.value == 2.0
    assert order.n == 2
    assert (-order).value == -2.0
    with pytest.raises(errors.DomainError):
        Order.of(1.5).n
    with pytest.raises(errors.DomainError):
        classify_order(math.nan)


def test_k0_is_exponential() -> None:
    result = bateman_k(0, 1.0)
    assert result.value == pytest.approx(0.367879441171442, rel=1e-14)
    assert result.method is Method.CLOSED


@pytest.mark.parametrize("x", ARGUMENTS)
def test_low_even_orders_match_polynomials(x: float) -> None:
    assert bateman_k(2, x).value == pytest.approx(2.0 * x * math.exp(-x), rel=1e-12)
    assert bateman_k(4, x).value == pytest.approx(
        (2.0 * x * x - 2.0 * x) * math.exp(-x), rel=1e-12, abs=1e-300
    )


@pytest.mark.parametrize("m", range(7))
@pytest.mark.parametrize("x", ARGUMENTS)
def test_even_orders_match_tricomi_form(m: int, x: float) -> None:
    assert laguerre_form(m, x) == pytest.approx(tricomi_oracle(2.0 * m, x), rel=1e-9, abs=1e-14)


def test_even_order_sequence_matches_laguerre_form() -> None:
    x = 1.7
    values = even_order_sequence(8, x)
    expected = [laguerre_form(m, x) for m in range(9)]
    assert values == pytest.approx(expected, rel=1e-12, abs=1e-14)


def test_k1_bessel_form() -> None:
    expected = 2.0 / math.pi * (special.kv(1, 1.0) + special.kv(0, 1.0))
    assert bateman_k(1, 1.0).value == pytest.approx(expected, rel=1e-13)
    assert bateman_k(1, 1.0).value == pytest.approx(0.6512185259, abs=1e-9)
    minus = 2.0 / math.pi * 2.0 * (special.kv(1, 2.0) - special.kv(0, 2.0))
    assert bateman_k_bessel(-1, 2.0).value == pytest.approx(minus, rel=1e-13)


def test_bessel_form_rejects_other_orders() -> None:
    with pytest.raises(errors.UnsupportedOrderError):
        bateman_k_bessel(3, 1.0)


@pytest.mark.parametrize("n", [3, 5, 7])
@pytest.mark.parametrize("x", [0.5, 2.0, 6.0])
def test_odd_order_recurrence_matches_tricomi_form(n: int, x: float) -> None:
    result = bateman_k(n, x)
    assert result.method is Method.RECURRENCE
    assert result.value == pytest.approx(tricomi_oracle(n, x), abs=1e-9)


@pytest.mark.parametrize("nu", [0.5, 1.3, 2.7, -0.7, -2.5])
@pytest.mark.parametrize("x", [0.5, 1.0, 3.0])
def test_general_orders_match_tricomi_form(nu: float, x: float, cfg: QuadConfig) -> None:
    result = bateman_k(nu, x, cfg)
    assert result.method is Method.QUAD_OSC
    assert result.value == pytest.approx(tricomi_oracle(nu, x), abs=1e-8)
    assert bateman_k_tricomi(nu, x).value == pytest.approx(tricomi_oracle(nu, x), rel=1e-12)


@pytest.mark.parametrize("nu", [0.0, 1.0, 1.3, -2.5])
@pytest.mark.parametrize("x", [0.5, 2.0])
def test_defining_integral_matches_fourier_oracle(nu: float, x: float, cfg: QuadConfig) -> None:
    assert bateman_k_quadrature(nu, x, cfg).value == pytest.approx(
        fourier_oracle(nu, x, sine=False), abs=1e-7
    )
    assert havelock_h_quadrature(nu, x, cfg).value == pytest.approx(
        fourier_oracle(nu, x, sine=True), abs=1e-7
    )


def test_negative_even_orders_vanish_for_positive_x() -> None:
    assert bateman_k(-2, 1.5).value == 0.0
    assert bateman_k(-4, 0.1).value == 0.0


@pytest.mark.parametrize("nu, x", [(-4, 1.0), (-6, 2.0), (-8, 0.3)])
def test_higher_negative_even_orders_vanish(nu: int, x: float) -> None:
    result = bateman_k(nu, x)
    assert result.value == 0.0
    assert result.method is Method.CLOSED
    assert result.evals == 0


@pytest.mark.parametrize("n", [4, 6])
def test_positive_even_orders_vanish_on_negative_axis(n: int) -> None:
    assert bateman_k(n, -1.5).value == 0.0


@pytest.mark.parametrize("nu", [0.0, 1.0, 2.0, 3.0, 0.5, 1.3, -1.0, -2.5])
@pytest.mark.parametrize("x", [0.5, 1.5, 4.0])
def test_reflection_symmetries_are_exact(nu: float, x: float) -> None:
    assert bateman_k(nu, -x).value == bateman_k(-nu, x).value
    assert havelock_h(nu, -x).value == -havelock_h(-nu, x).value


@pytest.mark.parametrize("n", range(1, 13))
def test_special_values_at_zero(n: int) -> None:
    k_expected = 2.0 / (math.pi * n) * math.sin(0.5 * math.pi * n)
    h_expected = 2.0 / (math.pi * n) * (math.cos(0.5 * math.pi * n) - 1.0)
    assert bateman_k(n, 0.0).value == pytest.approx(k_expected, abs=1e-12)
    assert havelock_h(n, 0.0).value == pytest.approx(h_expected, abs=1e-12)


def test_special_value_examples() -> None:
    assert havelock_h(2, 0.0).value == pytest.approx(-2.0 / math.pi, abs=1e-15)
    assert havelock_h(6, 0.0).value == pytest.approx(-2.0 / (3.0 * math.pi), abs=1e-15)
    assert havelock_h(4, 0.0).value == 0.0
    assert bateman_k(2, 0.0).value == 0.0
    assert special_value_at_zero(FunctionId.BATEMAN_K, 0.0) == 1.0
    assert special_value_at_zero(FunctionId.HAVELOCK_H, 0.0) == 0.0
    with pytest.raises(errors.UnsupportedError):
        special_value_at_zero(FunctionId.KI, 1.0)


def test_h2_closed_form() -> None:
    expected = (2.0 * math.exp(-1.0) * special.expi(1.0) - 2.0) / math.pi
    assert havelock_h(2, 1.0).value == pytest.approx(expected, rel=1e-12)
    assert havelock_h(2, 1.0).value == pytest.approx(-0.1927844569, abs=1e-9)


@pytest.mark.parametrize("n", [0, 2, 4, 6])
@pytest.mark.parametrize("x", [0.5, 2.0, 5.0])
def test_havelock_closed_forms_match_quadrature(n: int, x: float, cfg: QuadConfig) -> None:
    closed = havelock_h(n, x, cfg)
    assert closed.method is Method.CLOSED
    assert closed.value == pytest.approx(havelock_h_quadrature(n, x, cfg).value, abs=1e-7)


def test_havelock_large_argument_uses_quadrature(cfg: QuadConfig) -> None:
    result = havelock_h(2, 30.0, cfg)
    assert result.method is Method.QUAD_OSC
    assert result.value == pytest.approx(fourier_oracle(2.0, 30.0, sine=True), abs=1e-7)


def test_non_finite_argument_rejected() -> None:
    with pytest.raises(errors.DomainError):
        bateman_k(0, math.inf)
    with pytest.raises(errors.DomainError):
        havelock_h(0, math.nan)


def test_x_derivative_of_k0(cfg: QuadConfig) -> None:
    first = derivative_x(FunctionId.BATEMAN_K, 0, 1.0, 1, cfg)
    second = derivative_x(FunctionId.BATEMAN_K, 0, 1.0, 2, cfg)
    assert first.value == pytest.approx(-math.exp(-1.0), abs=1e-7)
    assert second.value == pytest.approx(math.exp(-1.0), abs=1e-6)


def test_x_derivative_of_ki_is_k_over_x(cfg: QuadConfig) -> None:
    result = derivative_x(FunctionId.KI, 2, 1.5, 1, cfg)
    assert result.value == pytest.approx(2.0 * math.exp(-1.5), rel=1e-12)


def test_x_derivative_guards(cfg: QuadConfig) -> None:
    with pytest.raises(errors.UnsupportedOrderError):
        derivative_x(FunctionId.BATEMAN_K, 0, 1.0, 3, cfg)
    with pytest.raises(errors.DomainError):
        derivative_x(FunctionId.BATEMAN_K, 0, 0.0, 1, cfg)


@pytest.mark.parametrize("nu, x", [(1.3, 1.0), (0.5, 2.0), (-0.7, 0.5)])
def test_order_derivative_matches_finite_difference(
    nu: float, x: float, cfg: QuadConfig
) -> None:
    h = 1e-4
    expected = (bateman_k_tricomi(nu + h, x).value - bateman_k_tricomi(nu - h, x).value) / (2 * h)
    result = derivative_nu(FunctionId.BATEMAN_K, nu, x, 1, cfg)
    assert result.value == pytest.approx(expected, abs=1e-6)
