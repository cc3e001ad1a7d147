"""
Numerical integration and differentiation kernels.
"""

from __future__ import annotations

import enum
import itertools
import logging
import math
from collections.abc import Callable, Sequence
from typing import Any

import attrs
import numpy as np
from scipy import integrate

from bateman import errors

logger = logging.getLogger(__name__)

RealFunction = Callable[[float], float]
EnvelopePair = Callable[[float], tuple[float, float]]

# Number of half-period panels summed before the first accelerated estimate
_INITIAL_PANELS = 8

# Tail panels of the decay integrator double in length at most this many times
_MAX_DOUBLINGS = 60

# Step levels of the derivative extrapolation
_DERIVATIVE_LEVELS = 7


class Method(enum.Enum):
    """How a value was obtained."""

    CLOSED = enum.auto()
    QUAD_FINITE = enum.auto()
    QUAD_OSC = enum.auto()
    QUAD_DECAY = enum.auto()
    SERIES = enum.auto()
    PV = enum.auto()
    SERIES_LIMIT = enum.auto()
    RECURRENCE = enum.auto()
    RICHARDSON = enum.auto()


@attrs.frozen
class QuadConfig:
    """Tolerances and budgets shared by all kernels.

    Attributes:
        abs_tol: Target absolute error.
        rel_tol: Target relative error.
        max_subdivisions: Subinterval budget of a single adaptive finite integration.
        max_oscillation_periods: Budget of oscillation periods for semi-infinite integrals.
        acceleration_depth: Maximum number of averaging passes of the Euler transformation.
    """

    abs_tol: float = attrs.field(default=1e-10, validator=attrs.validators.gt(0.0))
    rel_tol: float = attrs.field(default=1e-10, validator=attrs.validators.ge(0.0))
    max_subdivisions: int = attrs.field(default=2000, validator=attrs.validators.ge(1))
    max_oscillation_periods: int = attrs.field(default=10000, validator=attrs.validators.ge(1))
    acceleration_depth: int = attrs.field(default=40, validator=attrs.validators.ge(2))

    def tolerance(self, value: float) -> float:
        """Returns the error allowed for a result of the given magnitude."""
        return max(self.abs_tol, self.rel_tol * abs(value))

    def evolve(self, **changes: Any) -> QuadConfig:
        return attrs.evolve(self, **changes)


DEFAULT_CONFIG = QuadConfig()


@attrs.frozen
class EvalResult:
    """A computed value with an absolute error estimate.

    Attributes:
        value: The computed value.
        err_est: Estimated absolute error; an estimate, not a guarantee.
        method: The evaluation path that produced the value.
        evals: Number of integrand (or function) evaluations spent.
        converged: False when the error estimate missed the requested tolerance.
    """

    value: float
    err_est: float = attrs.field(validator=attrs.validators.ge(0.0))
    method: Method
    evals: int = attrs.field(default=0, validator=attrs.validators.ge(0))
    converged: bool = True

    def __float__(self) -> float:
        return self.value

    def check(self) -> EvalResult:
        """Returns the result unchanged, or raises if it did not converge.

        Raises:
            NonConvergedError if the result is flagged as not converged.
        """
        if not self.converged:
            raise errors.NonConvergedError(
                f"Result {self.value!r} ({self.method.name}) missed its tolerance, "
                f"err_est={self.err_est:.3g}"
            )
        return self

    def scaled(self, factor: float, offset: float = 0.0) -> EvalResult:
        """Returns `factor * value + offset` with the error estimate scaled accordingly."""
        return attrs.evolve(
            self, value=factor * self.value + offset, err_est=abs(factor) * self.err_est
        )

    def with_method(self, method: Method) -> EvalResult:
        return attrs.evolve(self, method=method)


def closed(value: float, evals: int = 1) -> EvalResult:
    """Wraps a closed-form value, whose error is a few rounding units."""
    err = 4.0 * np.finfo(float).eps * abs(value)
    return EvalResult(value, err, Method.CLOSED, evals)


def combine(
    terms: Sequence[tuple[float, EvalResult]], method: Method | None = None, offset: float = 0.0
) -> EvalResult:
    """Returns the linear combination `offset + sum(c * r)` of several results.

    The method defaults to that of the first term. The combination converged only if all
    terms did.
    """
    if not terms:
        return closed(offset, evals=0)
    value = math.fsum([c * r.value for c, r in terms] + [offset])
    err_est = math.fsum(abs(c) * r.err_est for c, r in terms)
    evals = sum(r.evals for _, r in terms)
    converged = all(r.converged for _, r in terms)
    return EvalResult(value, err_est, method or terms[0][1].method, evals, converged)


def richardson_extrapolate(
    values: Sequence[float], ratio: float, powers: Sequence[float]
) -> list[float]:
    """Richardson extrapolation of a sequence with a known error expansion.

    The i-th value is assumed to carry the error `sum_j c_j h_i**powers[j]` with the step
    shrinking by `ratio` between successive values.

    Args:
        values: Approximations at geometrically decreasing steps.
        ratio: Step reduction factor between successive entries (> 1).
        powers: Exponents of the error terms, eliminated in order. Must provide at least
            `len(values) - 1` entries.

    Returns:
        The diagonal of the extrapolation tableau; its last entry is the best estimate.

    Raises:
        ValueError if fewer than two values or too few powers are given.
    """
    if len(values) < 2:
        raise ValueError("richardson_extrapolate requires at least two values")
    if len(powers) < len(values) - 1:
        raise ValueError(f"Need {len(values) - 1} error powers, got {len(powers)}")

    level = np.asarray(values, dtype=float)
    diagonal = [float(level[0])]
    for power in powers[: len(values) - 1]:
        factor = ratio**power
        level = (factor * level[1:] - level[:-1]) / (factor - 1.0)
        diagonal.append(float(level[0]))
    return diagonal


def euler_transform(partial_sums: Sequence[complex], ratio: complex, depth: int) -> complex:
    """Accelerates the partial sums of a series whose terms behave like `b_n * ratio**n`.

    Each pass maps `S_n -> (S_{n+1} - ratio * S_n) / (1 - ratio)`, which is exact for a
    geometric series and reduces to repeated averaging for the alternating case
    `ratio = -1`. The last `depth + 1` partial sums are used.

    Args:
        partial_sums: Partial sums S_0, S_1, ... of the series.
        ratio: The unimodular phase ratio of successive terms, `ratio != 1`.
        depth: Number of passes; capped by the available partial sums.

    Returns:
        The accelerated limit estimate.
    """
    if ratio == 1:
        raise ValueError("euler_transform needs a ratio different from 1")
    depth = max(0, min(depth, len(partial_sums) - 1))
    level = np.asarray(partial_sums[len(partial_sums) - depth - 1 :], dtype=complex)
    for _ in range(depth):
        level = (level[1:] - ratio * level[:-1]) / (1.0 - ratio)
    return complex(level[-1])


def euler_sum(terms: Sequence[complex], ratio: complex, depth: int) -> complex:
    """Sums `sum_n terms[n]` where `terms[n] = b_n * ratio**n` with `b_n` slowly varying."""
    partial_sums = list(itertools.accumulate(terms))
    return euler_transform(partial_sums, ratio, depth)


def integrate_finite(f: RealFunction, a: float, b: float, cfg: QuadConfig) -> EvalResult:
    """Adaptive Gauss-Kronrod quadrature of `f` over the finite interval [a, b].

    This wraps QUADPACK's 21-point Gauss-Kronrod rule with adaptive bisection. Integrable
    endpoint singularities are fine because the rule never samples the endpoints.

    Raises:
        InvalidBoundsError if the bounds are not finite or `a >= b`.
    """
    if not (math.isfinite(a) and math.isfinite(b)) or a >= b:
        raise errors.InvalidBoundsError(f"Invalid integration bounds [{a!r}, {b!r}]")

    result = integrate.quad(
        f,
        a,
        b,
        epsabs=cfg.abs_tol,
        epsrel=cfg.rel_tol,
        limit=cfg.max_subdivisions,
        full_output=1,
    )
    value, abserr, info = result[:3]

    # QUADPACK appends a message when it stopped early; roundoff warnings still count as
    # converged if the achieved error is inside the tolerance
    converged = len(result) == 3 or abserr <= cfg.tolerance(value)
    if not converged:
        logger.debug("Finite quadrature on [%r, %r] stopped early: %s", a, b, result[3])
    evals = int(info["neval"])
    return EvalResult(float(value), float(abserr), Method.QUAD_FINITE, evals, converged)


def integrate_semiinf_oscillatory(
    envelope_pair: EnvelopePair, omega: float, cfg: QuadConfig
) -> EvalResult:
    """Integrates `g_c(t) cos(omega t) + g_s(t) sin(omega t)` over [0, inf).

    The half line is cut at the half periods `k pi / omega`, so that the panel integrals
    alternate in sign with a slowly varying magnitude. Their partial sums are accelerated by
    the Euler transformation. The number of panels doubles until two successive accelerated
    estimates agree.

    Args:
        envelope_pair: Returns `(g_c(t), g_s(t))`; both may decay as slowly as `1/t` or tend
            to a constant.
        omega: Angular frequency, > 0.
        cfg: Tolerances and budgets.

    Returns:
        The accelerated value, flagged as not converged when the panel budget ran out.

    Raises:
        OmegaZeroError if `omega <= 0`.
    """
    if not omega > 0:
        raise errors.OmegaZeroError(
            f"Oscillatory quadrature needs omega > 0, got {omega!r}; use the decay integrator"
        )

    half_period = math.pi / omega
    max_panels = 2 * cfg.max_oscillation_periods
    panel_cfg = cfg.evolve(abs_tol=0.1 * cfg.abs_tol, rel_tol=0.1 * cfg.rel_tol)

    def panel(k: int) -> EvalResult:
        start = k * half_period
        sign = -1.0 if k % 2 else 1.0

        # cos(omega t) = (-1)^k cos(omega u) with u = t - k pi / omega
        def integrand(u: float) -> float:
            g_c, g_s = envelope_pair(start + u)
            return sign * (g_c * math.cos(omega * u) + g_s * math.sin(omega * u))

        return integrate_finite(integrand, 0.0, half_period, panel_cfg)

    panels: list[EvalResult] = []
    previous: float | None = None
    n_panels = min(_INITIAL_PANELS, max_panels)
    while True:
        panels.extend(panel(k) for k in range(len(panels), n_panels))
        partial_sums = list(itertools.accumulate(p.value for p in panels))
        depth = min(cfg.acceleration_depth, n_panels // 2)
        estimate = euler_transform(partial_sums, -1.0, depth).real
        panel_err = math.fsum(p.err_est for p in panels)
        evals = sum(p.evals for p in panels)

        if previous is not None:
            change = abs(estimate - previous)
            if change <= cfg.tolerance(estimate):
                logger.debug(
                    "Oscillatory quadrature converged with %d panels, depth %d", n_panels, depth
                )
                return EvalResult(
                    estimate,
                    change + panel_err,
                    Method.QUAD_OSC,
                    evals,
                    all(p.converged for p in panels),
                )
            if n_panels >= max_panels:
                logger.warning(
                    "Oscillatory quadrature did not converge within %d half periods "
                    "(omega=%r, change=%.3g)",
                    n_panels,
                    omega,
                    change,
                )
                return EvalResult(estimate, change + panel_err, Method.QUAD_OSC, evals, False)

        previous = estimate
        n_panels = min(2 * n_panels, max_panels)


def integrate_semiinf_decay(f: RealFunction, cfg: QuadConfig, a: float = 0.0) -> EvalResult:
    """Integrates an eventually decaying `f` over [a, inf) on panels of doubling length.

    Panels are [a, a+1], [a+1, a+2], [a+2, a+4], ... The tail is cut once two consecutive
    panels each contribute less than `abs_tol / 4`.

    Raises:
        DivergentIntegralError if a panel is not finite or panel contributions keep growing.
    """
    if not math.isfinite(a):
        raise errors.InvalidBoundsError(f"Invalid lower bound {a!r}")

    panel_cfg = cfg.evolve(abs_tol=0.25 * cfg.abs_tol)
    values: list[float] = []
    panel_err = 0.0
    evals = 0
    converged = True
    small_in_a_row = 0
    growing_in_a_row = 0
    start, length = a, 1.0
    for _ in range(_MAX_DOUBLINGS + 1):
        result = integrate_finite(f, start, start + length, panel_cfg)
        if not math.isfinite(result.value):
            raise errors.DivergentIntegralError(
                f"Non-finite panel on [{start!r}, {start + length!r}]"
            )
        values.append(result.value)
        panel_err += result.err_est
        evals += result.evals
        converged = converged and result.converged

        if len(values) > 1 and abs(values[-1]) > abs(values[-2]) > 0:
            growing_in_a_row += 1
        else:
            growing_in_a_row = 0
        if growing_in_a_row >= 12:
            raise errors.DivergentIntegralError(
                f"Panel contributions keep growing up to t={start + length!r}"
            )

        if abs(result.value) + result.err_est < 0.25 * cfg.abs_tol:
            small_in_a_row += 1
        else:
            small_in_a_row = 0
        if small_in_a_row >= 2:
            return EvalResult(math.fsum(values), panel_err, Method.QUAD_DECAY, evals, converged)

        # The first two panels have unit length, the rest double
        start += length
        if len(values) > 1:
            length *= 2.0

    value = math.fsum(values)
    logger.warning("Decay quadrature from %r did not reach its tail criterion", a)
    return EvalResult(value, panel_err + abs(values[-1]), Method.QUAD_DECAY, evals, False)


def integrate_pv(f: RealFunction, c: float, a: float, b: float, cfg: QuadConfig) -> EvalResult:
    """Cauchy principal value of the integral of `f` over [a, b] across a pole at `c`.

    The window of half width `r = min(c - a, b - c)` around the pole is folded onto [0, r],
    where the simple pole cancels in `f(c + t) + f(c - t)`; whatever remains of [a, b] on
    one side is integrated plainly.

    Raises:
        InvalidBoundsError unless `a < c < b`.
        NoPrincipalValueError if the folded integrand is not integrable.
    """
    if not (a < c < b):
        raise errors.InvalidBoundsError(f"Pole {c!r} must lie strictly inside [{a!r}, {b!r}]")

    def folded(t: float) -> float:
        return f(c + t) + f(c - t)

    r = min(c - a, b - c)
    window = integrate_finite(folded, 0.0, r, cfg)
    if not window.converged and not window.err_est <= 1e3 * cfg.tolerance(window.value):
        raise errors.NoPrincipalValueError(
            f"Principal value around {c!r} does not exist (err_est {window.err_est:.3g})"
        )

    pieces = [window]
    if c - r > a:
        pieces.append(integrate_finite(f, a, c - r, cfg))
    if c + r < b:
        pieces.append(integrate_finite(f, c + r, b, cfg))
    return EvalResult(
        math.fsum(p.value for p in pieces),
        math.fsum(p.err_est for p in pieces),
        Method.PV,
        sum(p.evals for p in pieces),
        all(p.converged for p in pieces),
    )


def derivative_richardson(
    f: RealFunction, x: float, order: int = 1, h0: float | None = None
) -> EvalResult:
    """Central-difference derivative of `f` at `x`, extrapolated in powers of h^2.

    The steps are `h0 2^-j` for j = 0..6. The returned extrapolant is the diagonal entry
    where successive changes are smallest, which stops the tableau at the noise floor of a
    quadrature-valued `f`.

    Args:
        f: Smooth function of one variable.
        x: Point of differentiation.
        order: 1 or 2.
        h0: Initial step; defaults to `1e-2 * max(1, |x|)`.

    Raises:
        ValueError for orders other than 1 and 2.
        UnstableDerivativeError if the extrapolants diverge from the first step on.
    """
    if order not in (1, 2):
        raise ValueError(f"derivative_richardson supports orders 1 and 2, got {order!r}")
    h0 = 1e-2 * max(1.0, abs(x)) if h0 is None else h0

    f0 = f(x) if order == 2 else 0.0
    estimates = []
    for j in range(_DERIVATIVE_LEVELS):
        h = h0 * 2.0**-j
        f_plus, f_minus = f(x + h), f(x - h)
        if order == 1:
            estimates.append((f_plus - f_minus) / (2.0 * h))
        else:
            estimates.append((f_plus - 2.0 * f0 + f_minus) / (h * h))
    evals = 2 * _DERIVATIVE_LEVELS + (order == 2)

    diagonal = richardson_extrapolate(estimates, 2.0, [2, 4, 6, 8, 10, 12])
    diffs = [abs(d1 - d0) for d0, d1 in itertools.pairwise(diagonal)]
    best = int(np.argmin(diffs))
    value, err_est = diagonal[best + 1], diffs[best]

    scale = max(1.0, abs(value))
    if all(d1 > d0 for d0, d1 in itertools.pairwise(diffs)) and diffs[0] > 1e-8 * scale:
        raise errors.UnstableDerivativeError(
            f"Richardson derivative at x={x!r} diverges from the first step (h0={h0!r})"
        )
    return EvalResult(value, err_est, Method.RICHARDSON, evals)


def integrate_semiinf_periodic(
    f: RealFunction, period: float, cfg: QuadConfig, mean: float = 0.0
) -> EvalResult:
    """Integrates `f` over [0, inf) when `f - mean / (1 + t^2)` has a mean-zero periodic part.

    Partial integrals over J whole periods, J = 64, 128, ..., 1024, are extrapolated in
    the powers 1/J^2 ... 1/J^5 of their tails. This suits integrands like
    `(P(x t - atan t) - mean) / (1 + t^2)` with a periodic `P` whose average is `mean`.

    Args:
        f: The integrand, with its non-decaying mean already removed.
        period: Period of the oscillating factor.
        cfg: Tolerances and budgets.
        mean: Constant added back to the result (the integral of the removed mean part).
    """
    if not period > 0:
        raise errors.InvalidBoundsError(f"Period must be positive, got {period!r}")

    blocks = [64, 128, 256, 512, 1024]
    partial: list[float] = []
    err = 0.0
    evals = 0
    total = 0.0
    done = 0
    for block in blocks:
        pieces = [
            integrate_finite(f, j * period, (j + 1) * period, cfg) for j in range(done, block)
        ]
        total += math.fsum(p.value for p in pieces)
        err += math.fsum(p.err_est for p in pieces)
        evals += sum(p.evals for p in pieces)
        partial.append(total)
        done = block

    diagonal = richardson_extrapolate(partial, 2.0, [2, 3, 4, 5])
    change = abs(diagonal[-1] - diagonal[-2])
    return EvalResult(
        diagonal[-1] + mean,
        change + err,
        Method.QUAD_OSC,
        evals,
        change <= 1e3 * cfg.tolerance(diagonal[-1]),
    )
