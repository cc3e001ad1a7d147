"""
Laplace-transform identities: every registered transform pair, the operational rules applied
to the even-order Bateman functions, and the initial and final value theorems.
"""

from __future__ import annotations

import math
from collections.abc import Iterator

from bateman.identity_registry.evaluators import k, richardson
from bateman.identity_registry.identity import Identity, Sample, Tier, grid
from bateman.quadrature import QuadConfig, RealFunction
from bateman.transforms import (
    LIMIT_TOL,
    TransformEntry,
    compare,
    initial_final_value_check,
    laplace_closed,
    laplace_numeric,
    list_transforms,
)

ASSERT, DIAGNOSE = Tier.ASSERT, Tier.DIAGNOSE

TRANSFORM_TOL = 1e-6


def _transform_samples(entry: TransformEntry) -> tuple[dict[str, float], ...]:
    return tuple(
        {"s": s, **dict(zip(entry.param_names, params))}
        for params in entry.params
        for s in entry.s_samples()
    )


def _params(entry: TransformEntry, p: Sample) -> tuple[float, ...]:
    return tuple(p[name] for name in entry.param_names)


def _transform_identity(entry: TransformEntry) -> Identity:
    return Identity(
        id=entry.id,
        citation=entry.citation,
        tier=ASSERT if entry.verified else DIAGNOSE,
        samples=_transform_samples(entry),
        lhs=lambda p, cfg: compare(entry.id, p["s"], _params(entry, p), cfg).numeric.value,
        rhs=lambda p, cfg: laplace_closed(entry.id, p["s"], _params(entry, p)),
        tol=TRANSFORM_TOL,
        note=f"L{{{entry.subject}}} = {entry.formula}",
    )


def _even_transform(n: int, s: float) -> float:
    # L{k_(2n+2)(t)}
    return laplace_closed("eq37_k2n2", s, (n,))


def _limit_deviation(transform_id: str, params: tuple[float, ...] | None) -> float:
    report = initial_final_value_check(transform_id, params)
    return max(
        abs(report.initial - report.expected_initial), abs(report.final - report.expected_final)
    )


def _numeric(f: RealFunction, s: float, cfg: QuadConfig) -> float:
    return laplace_numeric(f, s, cfg).value


def identities() -> Iterator[Identity]:
    for entry in list_transforms():
        yield _transform_identity(entry)

    yield Identity(
        id="eq39_scaling",
        citation='Eq (39) line 2, "L{f(at)} = (1/a) F(s/a)"',
        tier=ASSERT,
        samples=grid(a=(0.5, 2.0), n=(0, 1), s=(1.0, 3.0)),
        lhs=lambda p, cfg: _numeric(
            lambda t: k(2 * p["n"] + 2, p["a"] * t), p["s"], cfg
        ),
        rhs=lambda p, cfg: _even_transform(int(p["n"]), p["s"] / p["a"]) / p["a"],
        tol=TRANSFORM_TOL,
        note="f = k_(2n+2)",
    )
    yield Identity(
        id="eq39_shift",
        citation='Eq (39) line 3, "L{e^(+-at) f(t)} = F(s -+ a)"',
        tier=ASSERT,
        samples=grid(sign=(-1.0, 1.0), n=(0, 1), s=(1.0, 3.0)),
        lhs=lambda p, cfg: _numeric(
            lambda t: math.exp(0.5 * p["sign"] * t) * k(2 * p["n"] + 2, t), p["s"], cfg
        ),
        rhs=lambda p, cfg: _even_transform(int(p["n"]), p["s"] - 0.5 * p["sign"]),
        tol=TRANSFORM_TOL,
        note="f = k_(2n+2), a = 1/2",
    )
    yield Identity(
        id="eq39_power",
        citation='Eq (39) line 4, "L{t^n f(t)} = (-1)^n d^n F(s)/ds^n"',
        tier=ASSERT,
        samples=grid(power=(1, 2), n=(0, 1), s=(1.0, 3.0)),
        lhs=lambda p, cfg: _numeric(
            lambda t: t ** p["power"] * k(2 * p["n"] + 2, t), p["s"], cfg
        ),
        rhs=lambda p, cfg: (-1.0) ** p["power"]
        * richardson(lambda s: _even_transform(int(p["n"]), s), p["s"], int(p["power"])),
        tol=1e-6,
        note="f = k_(2n+2); the derivative of F is taken numerically",
    )
    yield Identity(
        id="eq41_limits_k0",
        citation='Eq (41) lines 1-2, "k_0(t -> +0) = lim s/(s+1) = 1, k_0(t -> inf) = 0"',
        tier=ASSERT,
        samples=({},),
        lhs=lambda p, cfg: _limit_deviation("eq37_k0", None),
        rhs=lambda p, cfg: 0.0,
        tol=LIMIT_TOL,
    )
    yield Identity(
        id="eq41_limits_k2n2",
        citation='Eq (41) lines 3-4, "k_(2n+2)(t -> +0) = 0, k_(2n+2)(t -> inf) = 0"',
        tier=ASSERT,
        samples=grid(n=(0, 1, 2)),
        lhs=lambda p, cfg: _limit_deviation("eq37_k2n2", (p["n"],)),
        rhs=lambda p, cfg: 0.0,
        tol=LIMIT_TOL,
    )
    yield Identity(
        id="eq57_limits",
        citation='Eq (57), "h_0(t -> +0) = lim 2 s ln(s)/(s^2-1) = 0, h_0(t -> inf) = 0"',
        tier=ASSERT,
        samples=({},),
        lhs=lambda p, cfg: _limit_deviation("eq53_h0", None),
        rhs=lambda p, cfg: 0.0,
        tol=LIMIT_TOL,
    )
