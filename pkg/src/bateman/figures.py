"""
Data behind the survey figures: the Bateman and Havelock functions against the argument for
integer and half-integer orders, and their first derivatives with respect to the order.
"""

from __future__ import annotations

import concurrent.futures
import enum
import logging
import os
from collections.abc import Callable, Sequence

import attrs
import numpy as np

from bateman import errors, utils
from bateman.bateman_core import FunctionId, bateman_k, derivative_nu, havelock_h
from bateman.quadrature import DEFAULT_CONFIG, EvalResult, QuadConfig

logger = logging.getLogger(__name__)

X_RANGE = (-5.0, 10.0, 0.05)
NU_RANGE = (-10.0, 10.0, 0.1)
DERIVATIVE_POINTS = (0.5, 1.0, 2.0)

# Grid points are rounded so that x and -x coincide exactly
_GRID_DECIMALS = 10


class Axis(enum.Enum):
    """The variable a figure runs over; the other one labels the curves."""

    X = enum.auto()
    NU = enum.auto()


def grid_points(start: float, stop: float, step: float) -> list[float]:
    """Equally spaced points from `start` to `stop` inclusive.

    Raises:
        ConfigError unless start < stop and step > 0.
    """
    if not start < stop or not step > 0:
        raise errors.ConfigError(f"Invalid grid [{start!r}, {stop!r}] with step {step!r}")
    count = int(round((stop - start) / step)) + 1
    points = np.round(start + step * np.arange(count), _GRID_DECIMALS)
    # 0.0 instead of -0.0
    return [float(p) + 0.0 for p in points]


@attrs.frozen
class FigureSpec:
    """One figure's data set.

    Attributes:
        name: File stem, e.g. "fig01".
        caption: What the figure shows.
        fn: The function plotted.
        curves: Fixed values of the curve parameter (orders, or arguments for derivatives).
        axis: The variable along each curve.
        derivative: Whether the curves are d/dnu of the function.
    """

    name: str
    caption: str
    fn: FunctionId
    curves: tuple[float, ...]
    axis: Axis = Axis.X
    derivative: bool = False

    @property
    def header(self) -> tuple[str, str, str]:
        return ("nu", "x", "value") if self.axis is Axis.X else ("x", "nu", "value")

    def points(self) -> list[float]:
        return grid_points(*(X_RANGE if self.axis is Axis.X else NU_RANGE))

    def evaluate(self, curve: float, point: float, cfg: QuadConfig) -> EvalResult:
        if self.derivative:
            return derivative_nu(self.fn, point, curve, 1, cfg)
        evaluate = bateman_k if self.fn is FunctionId.BATEMAN_K else havelock_h
        return evaluate(curve, point, cfg)


def _negated(values: Sequence[float]) -> tuple[float, ...]:
    # 0.0 - v keeps the order 0 curve at +0.0
    return tuple(0.0 - v for v in values)


def _figure_specs() -> tuple[FigureSpec, ...]:
    integers = tuple(float(n) for n in range(7))
    halves = tuple(n + 0.5 for n in range(6))
    k, h = FunctionId.BATEMAN_K, FunctionId.HAVELOCK_H
    positive = DERIVATIVE_POINTS
    negative = _negated(DERIVATIVE_POINTS)
    return (
        FigureSpec("fig01", "Bateman functions of positive integer order", k, integers),
        FigureSpec("fig02", "Bateman functions of negative integer order", k, _negated(integers)),
        FigureSpec("fig03", "Havelock functions of positive integer order", h, integers),
        FigureSpec("fig04", "Havelock functions of negative integer order", h, _negated(integers)),
        FigureSpec("fig05", "Bateman functions of order n + 1/2", k, halves),
        FigureSpec("fig06", "Bateman functions of order -(n + 1/2)", k, _negated(halves)),
        FigureSpec("fig07", "Havelock functions of order n + 1/2", h, halves),
        FigureSpec("fig08", "Havelock functions of order -(n + 1/2)", h, _negated(halves)),
        FigureSpec("fig09", "dk/dnu at positive arguments", k, positive, Axis.NU, True),
        FigureSpec("fig10", "dk/dnu at negative arguments", k, negative, Axis.NU, True),
        FigureSpec("fig11", "dh/dnu at positive arguments", h, positive, Axis.NU, True),
        FigureSpec("fig12", "dh/dnu at negative arguments", h, negative, Axis.NU, True),
    )


FIGURES: tuple[FigureSpec, ...] = _figure_specs()

Row = tuple[float, float, float | None]


def figure_rows(
    spec: FigureSpec, cfg: QuadConfig = DEFAULT_CONFIG, parallelism: int = 1
) -> list[Row]:
    """Evaluates a figure's curves, curve-major and point-minor.

    Points whose evaluation did not converge or raised get a value of None, which is
    written as an empty cell; the run continues.
    """
    tasks = [(curve, point) for curve in spec.curves for point in spec.points()]

    def evaluate(task: tuple[float, float]) -> Row:
        curve, point = task
        try:
            result = spec.evaluate(curve, point, cfg)
        except errors.BatemanError as e:
            logger.warning("%s: no value at (%r, %r): %s", spec.name, curve, point, e)
            return curve, point, None
        if not result.converged:
            logger.warning(
                "%s: (%r, %r) did not converge, err_est=%.3g",
                spec.name,
                curve,
                point,
                result.err_est,
            )
            return curve, point, None
        return curve, point, result.value

    return _map_ordered(evaluate, tasks, parallelism)


def _map_ordered(
    fn: Callable[[tuple[float, float]], Row],
    tasks: Sequence[tuple[float, float]],
    parallelism: int,
) -> list[Row]:
    if parallelism <= 1:
        return [fn(task) for task in tasks]
    with concurrent.futures.ThreadPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(fn, tasks))


def check_reflection(
    positive: Sequence[Row], negative: Sequence[Row], sign: float
) -> list[tuple[float, float]]:
    """Returns the points where `negative(-n, x)` differs from `sign * positive(n, -x)`.

    k_{-n}(x) = k_n(-x) and h_{-n}(x) = -h_n(-x), so fig02 mirrors fig01 with sign 1 and
    fig04 mirrors fig03 with sign -1. Only points whose reflection lies on the grid are
    compared; the comparison is exact.
    """
    values = {(nu, x): value for nu, x, value in positive}
    mismatches = []
    for nu, x, value in negative:
        key = (-nu + 0.0, -x + 0.0)
        if key not in values:
            continue
        mirrored = values[key]
        expected = None if mirrored is None else sign * mirrored
        if value != expected:
            mismatches.append((nu, x))
    return mismatches


# fig02 mirrors fig01 and fig04 mirrors fig03
REFLECTIONS = (("fig01", "fig02", 1.0), ("fig03", "fig04", -1.0))


def write_figures(
    output_dir: str | os.PathLike[str],
    cfg: QuadConfig = DEFAULT_CONFIG,
    parallelism: int = 1,
    names: Sequence[str] | None = None,
) -> dict[str, list[Row]]:
    """Writes `<name>.csv` for every figure (or the named ones) into `output_dir`.

    Returns:
        The rows written, keyed by figure name.

    Raises:
        UnknownIdError for an unknown figure name.
        NonConvergedError if a reflection check fails.
    """
    specs = {spec.name: spec for spec in FIGURES}
    selected = list(specs) if names is None else list(names)
    for name in selected:
        if name not in specs:
            raise errors.UnknownIdError(f"No figure named {name!r}")

    os.makedirs(output_dir, exist_ok=True)
    written: dict[str, list[Row]] = {}
    for name in selected:
        spec = specs[name]
        logger.info("Computing %s: %s", name, spec.caption)
        rows = figure_rows(spec, cfg, parallelism)
        utils.write_csv(os.path.join(output_dir, f"{name}.csv"), spec.header, rows)
        written[name] = rows

    for source, mirror, sign in REFLECTIONS:
        if source in written and mirror in written:
            mismatches = check_reflection(written[source], written[mirror], sign)
            if mismatches:
                raise errors.NonConvergedError(
                    f"{mirror} does not mirror {source} at {len(mismatches)} points, "
                    f"first at {mismatches[0]!r}"
                )
            logger.info("%s mirrors %s exactly", mirror, source)
    return written
