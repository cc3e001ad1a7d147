import math

import pytest

from bateman import errors
from bateman.bateman_core import Kernel
from bateman.quadrature import QuadConfig
from bateman.transforms import (
    TRANSFORMS,
    compare,
    get_transform,
    initial_final_value_check,
    laplace_closed,
    laplace_numeric,
    laplace_numeric_trig,
    list_transforms,
)

TOL = 1e-6


def test_registry_lists_in_order() -> None:
    ids = [entry.id for entry in list_transforms()]
    assert ids == list(TRANSFORMS)
    assert ids[0] == "eq37_k0"
    assert len(list_transforms(verified=True)) >= 22
    assert all(not e.verified for e in list_transforms(verified=False))


@pytest.mark.parametrize(
    "line",
    [
        "Eq (37) line 1",
        "Eq (37) line 2",
        "Eq (40) line 1",
        "Eq (40) line 2",
        "Eq (40) line 3",
        "Eq (40) line 4",
        "Eq (43) line 1",
        "Eq (43) line 3",
        "Eq (43) line 4",
        "Eq (44) line 1",
        "Eq (44) line 3",
        "Eq (53)",
        "Eq (54)",
        "Eq (56)",
        "Eq (72) line 1",
        "Eq (72) line 2",
        "Eq (87) line 1",
        "Eq (87) line 2",
        "Eq (87) line 3",
        "Eq (87) line 4",
    ],
)
def test_every_asserted_line_has_a_verified_entry(line: str) -> None:
    assert any(e.citation.startswith(line) for e in list_transforms(verified=True))


@pytest.mark.parametrize(
    "transform_id", ["eq43_struve_corrected", "eq43_k0k1_corrected", "eq43_k1sq_corrected"]
)
def test_whittaker_type_transforms_match_numeric(transform_id: str, cfg: QuadConfig) -> None:
    for s in (0.5, 2.0, 10.0):
        assert compare(transform_id, s, cfg=cfg).residual <= TOL


def test_unknown_transform() -> None:
    with pytest.raises(errors.UnknownIdError):
        get_transform("eq99_nothing")
    with pytest.raises(errors.UnknownIdError):
        laplace_closed("eq99_nothing", 1.0)


def test_closed_form_values() -> None:
    assert laplace_closed("eq37_k0", 1.0) == 0.5
    assert laplace_closed("eq53_h0", 2.0) == pytest.approx(2.0 * math.log(2.0) / (3.0 * math.pi))
    assert laplace_closed("eq53_h0", 1.0) == pytest.approx(1.0 / math.pi)
    assert laplace_closed("eq87_ki0", 1.0) == 0.0
    assert laplace_closed("eq87_ki0_corrected", 1.0) == pytest.approx(-math.log(2.0))
    assert laplace_closed("eq37_k2n2", 2.0, (1,)) == pytest.approx(-2.0 / 27.0)


def test_closed_form_domain() -> None:
    with pytest.raises(errors.DomainError):
        laplace_closed("eq37_k0", -1.0)
    with pytest.raises(errors.DomainError):
        laplace_closed("eq53_h0", 0.0)


@pytest.mark.parametrize(
    "transform_id, s",
    [("eq37_k0", 1.0), ("eq40_k2", 2.0), ("eq53_h0", 2.0), ("eq87_ki2", 0.5)],
)
def test_numeric_matches_closed_form(transform_id: str, s: float, cfg: QuadConfig) -> None:
    comparison = compare(transform_id, s, cfg=cfg)
    assert comparison.residual <= TOL
    assert comparison.numeric.converged


def test_printed_ki0_transform_is_off(cfg: QuadConfig) -> None:
    comparison = compare("eq87_ki0", 1.0, cfg=cfg)
    assert comparison.numeric.value == pytest.approx(-math.log(2.0), abs=TOL)
    assert comparison.residual > 0.5


def test_laplace_numeric_of_exponential(cfg: QuadConfig) -> None:
    assert laplace_numeric(lambda t: math.exp(-t), 2.0, cfg).value == pytest.approx(
        1.0 / 3.0, abs=1e-10
    )
    with pytest.raises(errors.DomainError):
        laplace_numeric(lambda t: 1.0, math.inf, cfg)


def test_t_form_matches_time_domain_transform(cfg: QuadConfig) -> None:
    # L{k_0}(s) = 1/(s+1) through either route
    assert laplace_numeric_trig(Kernel.COS, 0.0, 2.0, cfg).value == pytest.approx(
        1.0 / 3.0, abs=1e-8
    )
    with pytest.raises(errors.DomainError):
        laplace_numeric_trig(Kernel.SIN, 0.0, 0.0, cfg)


@pytest.mark.parametrize(
    "transform_id, params", [("eq37_k0", None), ("eq87_ki2", None), ("eq87_ki2n", (3,))]
)
def test_initial_and_final_values(transform_id: str, params: tuple[float, ...] | None) -> None:
    assert initial_final_value_check(transform_id, params).passed


def test_limits_need_registered_data() -> None:
    with pytest.raises(errors.UnknownIdError):
        initial_final_value_check("eq54_h1")


@pytest.mark.slow
@pytest.mark.parametrize("transform_id", [e.id for e in list_transforms(verified=True)])
def test_verified_transforms_hold_over_their_samples(transform_id: str, cfg: QuadConfig) -> None:
    entry = get_transform(transform_id)
    for params in entry.params:
        for s in entry.s_samples():
            assert compare(transform_id, s, params, cfg).residual <= TOL
