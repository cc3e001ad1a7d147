import math

import pytest

from bateman import errors
from bateman.generalized import GenParams, bateman_k_gen
from bateman.giuliani import bateman_i, giuliani_i, giuliani_u, giuliani_v
from bateman.quadrature import QuadConfig


@pytest.mark.parametrize("n, alpha, x", [(0, 3.0, 2.0), (1, 3.0, 2.0), (2, 4.5, 1.0)])
def test_i_is_a_scaled_generalized_bateman_function(
    n: int, alpha: float, x: float, cfg: QuadConfig
) -> None:
    expected = 0.5 * math.pi * bateman_k_gen(GenParams(-n, alpha - 1.0, 0.0), 0.5 * x, cfg).value
    assert giuliani_i(n, alpha, x, cfg=cfg).value == pytest.approx(expected, abs=1e-8)


def test_u_and_v_of_order_zero(cfg: QuadConfig) -> None:
    # U_0(3, x) = (pi/2) k_{0,2,0}(x/2) = (pi/4) (1 + x/2) e^(-x/2); V_0 vanishes
    x = 2.0
    assert giuliani_u(0, 3.0, x, cfg=cfg).value == pytest.approx(
        0.25 * math.pi * 2.0 * math.exp(-1.0), abs=1e-8
    )
    assert giuliani_v(0, 3.0, x, cfg=cfg).value == pytest.approx(0.0, abs=1e-10)


def test_u_derivative(cfg: QuadConfig) -> None:
    # d/dx (pi/4) (1 + x/2) e^(-x/2) = -(pi/16) x e^(-x/2)
    x = 2.0
    assert giuliani_u(0, 3.0, x, derivative=1, cfg=cfg).value == pytest.approx(
        -math.pi / 8.0 * math.exp(-1.0), abs=1e-8
    )


def test_bateman_i(cfg: QuadConfig) -> None:
    # (pi/2) k_{0,2,0}(1) = (pi/2) e^-1
    assert bateman_i(0, 2.0, 1.0, 1.0, cfg=cfg).value == pytest.approx(
        0.5 * math.pi * math.exp(-1.0), abs=1e-8
    )


def test_guards(cfg: QuadConfig) -> None:
    with pytest.raises(errors.DomainError):
        giuliani_i(0, 1.0, 1.0, cfg=cfg)
    with pytest.raises(errors.UnsupportedOrderError):
        giuliani_u(0, 3.0, 1.0, derivative=5, cfg=cfg)
    with pytest.raises(errors.DomainError):
        giuliani_v(0, 3.0, 0.0, cfg=cfg)
    with pytest.raises(errors.DomainError):
        bateman_i(0, 2.0, 0.5, 1.0, cfg=cfg)
    with pytest.raises(errors.UnsupportedOrderError):
        bateman_i(0, 2.0, 1.0, 1.0, derivative=4, cfg=cfg)
