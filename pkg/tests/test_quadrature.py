import math

import pytest
from scipy import special

from bateman import errors
from bateman.bateman_core import bateman_k
from bateman.quadrature import (
    EvalResult,
    Method,
    QuadConfig,
    closed,
    combine,
    derivative_richardson,
    euler_sum,
    integrate_finite,
    integrate_pv,
    integrate_semiinf_decay,
    integrate_semiinf_oscillatory,
    richardson_extrapolate,
)


def test_quad_config_rejects_non_positive_abs_tol() -> None:
    with pytest.raises(ValueError):
        QuadConfig(abs_tol=0.0)


def test_quad_config_evolve_keeps_other_fields() -> None:
    cfg = QuadConfig(max_subdivisions=50).evolve(abs_tol=1e-6)
    assert cfg.abs_tol == 1e-6
    assert cfg.max_subdivisions == 50


def test_check_raises_for_non_converged_result() -> None:
    result = EvalResult(1.0, 0.5, Method.QUAD_OSC, 10, converged=False)
    with pytest.raises(errors.NonConvergedError):
        result.check()
    assert closed(2.0).check().value == 2.0


def test_scaled_scales_error_by_magnitude() -> None:
    result = EvalResult(2.0, 0.1, Method.QUAD_FINITE).scaled(-3.0, 1.0)
    assert result.value == -5.0
    assert result.err_est == pytest.approx(0.3)


def test_combine_is_converged_only_if_all_terms_are() -> None:
    good = closed(1.0)
    bad = EvalResult(2.0, 0.0, Method.QUAD_OSC, converged=False)
    total = combine([(2.0, good), (0.5, bad)], offset=1.0)
    assert total.value == 4.0
    assert not total.converged
    assert total.method is Method.CLOSED


def test_integrate_finite(cfg: QuadConfig) -> None:
    result = integrate_finite(math.sin, 0.0, math.pi, cfg)
    assert result.value == pytest.approx(2.0, abs=1e-12)
    assert result.converged
    assert result.method is Method.QUAD_FINITE


@pytest.mark.parametrize("a, b", [(1.0, 1.0), (2.0, 1.0), (0.0, math.inf)])
def test_integrate_finite_rejects_bad_bounds(a: float, b: float, cfg: QuadConfig) -> None:
    with pytest.raises(errors.InvalidBoundsError):
        integrate_finite(math.sin, a, b, cfg)


@pytest.mark.parametrize("omega", [0.5, 1.0, 3.0])
def test_oscillatory_matches_laplace_integral(omega: float, cfg: QuadConfig) -> None:
    # int_0^inf cos(w t) / (1 + t^2) dt = (pi / 2) e^-w
    def envelope_pair(t: float) -> tuple[float, float]:
        return 1.0 / (1.0 + t * t), 0.0

    result = integrate_semiinf_oscillatory(envelope_pair, omega, cfg)
    assert result.value == pytest.approx(0.5 * math.pi * math.exp(-omega), abs=1e-8)
    assert result.method is Method.QUAD_OSC


def test_oscillatory_slowly_decaying_sine(cfg: QuadConfig) -> None:
    # int_0^inf sin(t) / t dt = pi / 2
    def envelope_pair(t: float) -> tuple[float, float]:
        return 0.0, 1.0 if t == 0 else 1.0 / t

    result = integrate_semiinf_oscillatory(envelope_pair, 1.0, cfg)
    assert result.value == pytest.approx(0.5 * math.pi, abs=1e-8)


def test_oscillatory_rejects_zero_frequency(cfg: QuadConfig) -> None:
    with pytest.raises(errors.OmegaZeroError):
        integrate_semiinf_oscillatory(lambda t: (1.0, 0.0), 0.0, cfg)


def test_decay_integral(cfg: QuadConfig) -> None:
    result = integrate_semiinf_decay(lambda t: math.exp(-t), cfg)
    assert result.value == pytest.approx(1.0, abs=1e-10)
    assert result.method is Method.QUAD_DECAY

    shifted = integrate_semiinf_decay(lambda t: math.exp(-t), cfg, a=2.0)
    assert shifted.value == pytest.approx(math.exp(-2.0), abs=1e-10)


def test_decay_integral_detects_growth(cfg: QuadConfig) -> None:
    with pytest.raises(errors.DivergentIntegralError):
        integrate_semiinf_decay(lambda t: t, cfg)


def test_principal_value(cfg: QuadConfig) -> None:
    result = integrate_pv(lambda t: 1.0 / t, 0.0, -1.0, 2.0, cfg)
    assert result.value == pytest.approx(math.log(2.0), abs=1e-8)
    assert result.method is Method.PV


def test_principal_value_needs_interior_pole(cfg: QuadConfig) -> None:
    with pytest.raises(errors.InvalidBoundsError):
        integrate_pv(lambda t: 1.0 / t, 0.0, 0.0, 1.0, cfg)


def test_principal_value_with_logarithmic_regular_part(cfg: QuadConfig) -> None:
    # PV int_-1^2 (1/t + ln|t|) dt = ln 2 + (2 ln 2 - 3)
    def f(t: float) -> float:
        return 1.0 / t + math.log(abs(t))

    result = integrate_pv(f, 0.0, -1.0, 2.0, cfg)
    assert result.value == pytest.approx(3.0 * math.log(2.0) - 3.0, abs=1e-9)


def test_principal_value_of_exponential_over_t(cfg: QuadConfig) -> None:
    result = integrate_pv(lambda t: math.exp(t) / t, 0.0, -1.0, 1.0, cfg)
    expected = special.expi(1.0) + special.exp1(1.0)
    assert result.value == pytest.approx(expected, abs=1e-9)


def test_principal_value_of_odd_integrand_vanishes(cfg: QuadConfig) -> None:
    result = integrate_pv(lambda t: 1.0 / t, 0.0, -1.0, 1.0, cfg)
    assert abs(result.value) <= max(result.err_est, 1e-12)


def test_principal_value_of_squared_k1_over_x(cfg: QuadConfig) -> None:
    def f(x: float) -> float:
        return bateman_k(1, x).value ** 2 / x

    result = integrate_pv(f, 0.0, -40.0, 40.0, cfg)
    assert result.value == pytest.approx(2.0, abs=1e-8)
    assert result.method is Method.PV


def test_richardson_removes_leading_error_term() -> None:
    # f(h) = 1 + h^2 at h = 1 and 1/2
    diagonal = richardson_extrapolate([2.0, 1.25], 2.0, [2])
    assert diagonal[-1] == pytest.approx(1.0, abs=1e-15)


def test_richardson_needs_two_values() -> None:
    with pytest.raises(ValueError):
        richardson_extrapolate([1.0], 2.0, [2])


def test_euler_sum_of_alternating_harmonic_series() -> None:
    terms = [(-1.0) ** n / (n + 1) for n in range(60)]
    assert euler_sum(terms, -1.0, 30).real == pytest.approx(math.log(2.0), abs=1e-7)


@pytest.mark.parametrize(
    "order, expected",
    [(1, math.cos(1.0)), (2, -math.sin(1.0))],
)
def test_derivative_richardson(order: int, expected: float) -> None:
    result = derivative_richardson(math.sin, 1.0, order)
    assert result.value == pytest.approx(expected, abs=1e-7)
    assert result.method is Method.RICHARDSON


def test_derivative_richardson_order_three_unsupported() -> None:
    with pytest.raises(ValueError):
        derivative_richardson(math.sin, 1.0, 3)
