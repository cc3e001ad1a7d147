import math

import pytest

from bateman import errors
from bateman.bateman_core import bateman_k, havelock_h
from bateman.generalized import (
    GenParams,
    bateman_k_gen,
    bateman_k_gen_bessel,
    bateman_k_gen_quadrature,
    h_gen_even_limit,
    havelock_h_gen,
    havelock_h_gen_quadrature,
    havelock_h_gen_s_form,
    havelock_h_gen_struve,
    s_polynomial,
)
from bateman.quadrature import Method, QuadConfig


def test_gen_params_validation() -> None:
    with pytest.raises(ValueError):
        GenParams(0.0, -1.0, 0.0)
    with pytest.raises(errors.DomainError):
        GenParams(0.0, 30.0, 30.0)
    assert GenParams(1, 2, 3).weight_params() == (2.0, 3.0)
    assert GenParams(1.5).is_plain


@pytest.mark.parametrize("nu, x", [(1.3, 0.7), (2.0, -1.5), (0.0, 2.0)])
def test_plain_parameters_delegate(nu: float, x: float, cfg: QuadConfig) -> None:
    p = GenParams(nu)
    assert bateman_k_gen(p, x, cfg) == bateman_k(nu, x, cfg)
    assert havelock_h_gen(p, x, cfg) == havelock_h(nu, x, cfg)


@pytest.mark.parametrize("x", [0.5, 1.0, 3.0, -2.0])
def test_elementary_values_match_quadrature(x: float, cfg: QuadConfig) -> None:
    decay = math.exp(-abs(x))
    cases = [
        (bateman_k_gen, bateman_k_gen_quadrature, GenParams(0, 2, 0), 0.5 * (1 + abs(x)) * decay),
        (bateman_k_gen, bateman_k_gen_quadrature, GenParams(0, 0, 2), 0.5 * (1 - abs(x)) * decay),
        (havelock_h_gen, havelock_h_gen_quadrature, GenParams(0, 1, 1), 0.5 * x * decay),
    ]
    for evaluate, quadrature, p, expected in cases:
        result = evaluate(p, x, cfg)
        assert result.method is Method.CLOSED
        assert result.value == pytest.approx(expected, rel=1e-14)
        assert quadrature(p, x, cfg).value == pytest.approx(expected, abs=1e-8)


@pytest.mark.parametrize("alpha", [0.5, 1.5, 3.0])
@pytest.mark.parametrize("x", [0.5, 2.0])
def test_bessel_form_matches_quadrature(alpha: float, x: float, cfg: QuadConfig) -> None:
    p = GenParams(0, alpha, 0)
    expected = bateman_k_gen_quadrature(p, x, cfg).value
    assert bateman_k_gen_bessel(alpha, x).value == pytest.approx(expected, abs=1e-8)
    assert bateman_k_gen_bessel(alpha, -x).value == bateman_k_gen_bessel(alpha, x).value


def test_bessel_form_at_zero_alpha_is_k0() -> None:
    # K_1/2(x) = sqrt(pi / (2x)) e^-x
    assert bateman_k_gen_bessel(0.0, 1.3).value == pytest.approx(math.exp(-1.3), rel=1e-13)


@pytest.mark.parametrize("nu, alpha, beta", [(1.0, 1.0, 0.5), (0.5, 2.0, 1.0), (-1.5, 0.5, 2.0)])
def test_general_parameters_use_quadrature(
    nu: float, alpha: float, beta: float, cfg: QuadConfig
) -> None:
    p = GenParams(nu, alpha, beta)
    result = bateman_k_gen(p, 1.2, cfg)
    assert result.method is Method.QUAD_OSC
    assert result.value == pytest.approx(bateman_k_gen_quadrature(p, 1.2, cfg).value)
    assert math.isfinite(havelock_h_gen(p, 1.2, cfg).value)


@pytest.mark.parametrize("alpha", [1.0, 3.0, 5.0])
@pytest.mark.parametrize("x", [0.5, 2.0])
def test_struve_form_matches_quadrature(alpha: float, x: float, cfg: QuadConfig) -> None:
    expected = havelock_h_gen_quadrature(GenParams(0, alpha, 0), x, cfg).value
    assert havelock_h_gen_struve(alpha, x).value == pytest.approx(expected, abs=1e-7)
    assert havelock_h_gen_struve(alpha, -x).value == -havelock_h_gen_struve(alpha, x).value


@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("x", [0.5, 2.0])
def test_even_limit_matches_quadrature(k: int, x: float, cfg: QuadConfig) -> None:
    result = h_gen_even_limit(k, x)
    assert result.method is Method.SERIES_LIMIT
    expected = havelock_h_gen_quadrature(GenParams(0, 2 * k, 0), x, cfg).value
    assert result.value == pytest.approx(expected, abs=1e-7)


@pytest.mark.parametrize("alpha, x", [(2.0, 1.0), (4.0, 2.5)])
def test_even_power_havelock_dispatches_to_limit(alpha: float, x: float, cfg: QuadConfig) -> None:
    p = GenParams(0, alpha, 0)
    result = havelock_h_gen(p, x, cfg)
    assert result.method is Method.SERIES_LIMIT
    assert result.value == pytest.approx(havelock_h_gen_quadrature(p, x, cfg).value, abs=1e-6)


def test_even_power_havelock_quadrature_and_symmetry(cfg: QuadConfig) -> None:
    p = GenParams(0, 2.0, 0)
    assert havelock_h_gen(p, 10.0, cfg).method is Method.QUAD_OSC
    assert havelock_h_gen(p, -1.0, cfg).value == -havelock_h_gen(p, 1.0, cfg).value


def test_s_polynomials() -> None:
    # S_{2,1}(x) = (2 + x + x^2) / 6
    assert s_polynomial(2, 1, 2.0) == pytest.approx(8.0 / 6.0)
    with pytest.raises(errors.UnsupportedPairError):
        s_polynomial(9, 9, 1.0)


def test_s_form_guards() -> None:
    with pytest.raises(errors.DomainError):
        havelock_h_gen_s_form(1, 1, 1.0)
    with pytest.raises(errors.DomainError):
        havelock_h_gen_s_form(3, 1, 0.0)
    with pytest.raises(errors.UnsupportedPairError):
        havelock_h_gen_s_form(12, 1, 1.0)
    assert math.isfinite(havelock_h_gen_s_form(4, 1, 1.0).value)
