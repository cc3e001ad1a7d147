import math

import numpy as np
import pytest
from scipy import integrate, special

from bateman import errors
from bateman.bateman_integral import (
    bessel_integral_ji,
    ki,
    ki_by_definition,
    ki_laguerre_sum,
    ki_sequence,
    ki_special_zero,
)
from bateman.quadrature import Method, QuadConfig


@pytest.mark.parametrize("x", [0.1, 1.0, 3.0])
def test_ki0_is_minus_e1(x: float) -> None:
    assert ki(0, x).value == pytest.approx(-special.exp1(x), rel=1e-14)


def test_low_indices() -> None:
    assert ki(1, 1.0).value == pytest.approx(-0.7357588823, abs=1e-10)
    assert ki(1, 2.5).value == pytest.approx(-2.0 * math.exp(-2.5), rel=1e-14)
    # ki_4(x) = -2 x e^-x
    assert ki_laguerre_sum(2, 1.5) == pytest.approx(-3.0 * math.exp(-1.5), rel=1e-13)
    assert ki(2, 1.5).method is Method.CLOSED


@pytest.mark.parametrize("n", range(0, 6))
@pytest.mark.parametrize("x", [0.5, 2.0])
def test_closed_form_matches_defining_integral(n: int, x: float, cfg: QuadConfig) -> None:
    assert ki(n, x).value == pytest.approx(ki_by_definition(n, x, cfg).value, abs=1e-9)


@pytest.mark.parametrize("x", [0.3, 1.0, 5.0])
def test_sequence_matches_closed_form(x: float) -> None:
    values = ki_sequence(8, x)
    assert len(values) == 9
    expected = [ki(n, x).value for n in range(9)]
    assert list(values) == pytest.approx(expected, rel=1e-10, abs=1e-14)


@pytest.mark.parametrize("n, expected", [(1, -2.0), (2, 0.0), (3, -2.0 / 3.0), (4, 0.0)])
def test_special_values_at_zero(n: int, expected: float) -> None:
    assert ki_special_zero(n) == pytest.approx(expected)
    assert ki(n, 1e-10).value == pytest.approx(expected)
    assert ki(n, 1e-6).value == pytest.approx(expected, abs=1e-4)


def test_ki_guards() -> None:
    with pytest.raises(errors.DomainError):
        ki(1, 0.0)
    with pytest.raises(errors.DomainError):
        ki(-1, 1.0)
    with pytest.raises(errors.DomainError):
        ki_special_zero(0)
    with pytest.raises(errors.DomainError):
        ki_sequence(-1, 1.0)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_ji_differences_match_bessel_integral(n: int, cfg: QuadConfig) -> None:
    a, b = 0.7, 2.4
    expected, _ = integrate.quad(lambda t: special.jv(n, t) / t, a, b, epsabs=1e-13)
    difference = bessel_integral_ji(n, b, cfg).value - bessel_integral_ji(n, a, cfg).value
    assert difference == pytest.approx(expected, abs=1e-9)


def test_ji_large_argument_vanishes(cfg: QuadConfig) -> None:
    # -int_x^inf J_n(t)/t dt is O(x^-3/2) for large x
    for n in (0, 1, 2):
        assert abs(bessel_integral_ji(n, 60.0, cfg).value) < 0.01


def test_ji0_logarithmic_behaviour(cfg: QuadConfig) -> None:
    x = 1e-3
    expected = np.euler_gamma + math.log(0.5 * x)
    assert bessel_integral_ji(0, x, cfg).value == pytest.approx(expected, abs=1e-6)


def test_ji_small_argument_limit(cfg: QuadConfig) -> None:
    assert bessel_integral_ji(1, 1e-6, cfg).value == pytest.approx(-1.0, abs=1e-5)
    assert bessel_integral_ji(2, 1e-6, cfg).value == pytest.approx(-0.5, abs=1e-5)
