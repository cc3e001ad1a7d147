"""
Laplace transforms of the Bateman-type functions.

Every registered transform pairs a numeric evaluation of int_0^inf e^(-s t) f(t) dt with a
closed form in s. Printed forms that disagree with the numeric transform are kept next to
their corrected versions, with `verified=False`.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Iterator

import attrs
import numpy as np

from bateman import backends, errors
from bateman.bateman_core import TWO_OVER_PI, Kernel, bateman_k, power_weight
from bateman.bateman_integral import ki
from bateman.constants import MATH
from bateman.generalized import GenParams, bateman_k_gen
from bateman.quadrature import (
    DEFAULT_CONFIG,
    EvalResult,
    QuadConfig,
    RealFunction,
    integrate_semiinf_decay,
)

logger = logging.getLogger(__name__)

Params = tuple[float, ...]
ClosedForm = Callable[[float, Params], float]
NumericForm = Callable[[float, Params, QuadConfig], EvalResult]
Limits = Callable[[Params], tuple[float, float]]

# Points at which s F(s) is sampled for the initial and final value rules
INITIAL_VALUE_POINTS = (1e3, 1e6)
FINAL_VALUE_POINTS = (1e-3, 1e-6)
LIMIT_TOL = 1e-4

N_SAMPLES = 5


@attrs.frozen
class TransformEntry:
    """A Laplace transform pair.

    Attributes:
        id: Registry key.
        citation: Source location and the printed closed form.
        subject: The transformed function, in words.
        formula: The closed form in s, as implemented.
        closed_form: Evaluates the closed form at (s, params).
        numeric: Evaluates the transform numerically at (s, params, cfg).
        s_min: The closed form is valid for s > s_min.
        sample_range: Interval from which the comparison points are drawn.
        params: Parameter tuples checked by the registry; the first is the default.
        param_names: Names of the parameters, for reports.
        verified: False for a printed form that the numeric transform contradicts.
        limits: Expected (initial, final) values of the subject, if the entry takes part
            in the initial and final value checks.
    """

    id: str
    citation: str
    subject: str
    formula: str
    closed_form: ClosedForm
    numeric: NumericForm
    s_min: float = 0.0
    sample_range: tuple[float, float] = (0.5, 10.0)
    params: tuple[Params, ...] = ((),)
    param_names: tuple[str, ...] = ()
    verified: bool = True
    limits: Limits | None = None

    def s_samples(self) -> list[float]:
        """Log-spaced comparison points over `sample_range`."""
        lo, hi = self.sample_range
        return [float(s) for s in np.geomspace(lo, hi, N_SAMPLES)]


@attrs.frozen
class TransformComparison:
    """Numeric and closed-form transform at one point.

    Attributes:
        id: The transform.
        s: Transform variable.
        params: Parameters used.
        numeric: The numeric transform.
        closed: The closed form value.
    """

    id: str
    s: float
    params: Params
    numeric: EvalResult
    closed: float

    @property
    def residual(self) -> float:
        return abs(self.numeric.value - self.closed)


@attrs.frozen
class LimitReport:
    """Initial and final values recovered from s F(s).

    Attributes:
        id: The transform.
        params: Parameters used.
        initial: Extrapolated lim s F(s) as s -> infinity.
        final: Extrapolated lim s F(s) as s -> 0.
        expected_initial: The subject's value at t -> 0+.
        expected_final: The subject's value at t -> infinity.
    """

    id: str
    params: Params
    initial: float
    final: float
    expected_initial: float
    expected_final: float

    @property
    def passed(self) -> bool:
        return (
            abs(self.initial - self.expected_initial) <= LIMIT_TOL
            and abs(self.final - self.expected_final) <= LIMIT_TOL
        )


def laplace_numeric(f: RealFunction, s: float, cfg: QuadConfig = DEFAULT_CONFIG) -> EvalResult:
    """int_0^inf e^(-s t) f(t) dt by the panel-doubling decay integrator.

    Raises:
        DivergentIntegralError if the damped integrand does not decay.
    """
    if not math.isfinite(s):
        raise errors.DomainError(f"Transform variable must be finite, got {s!r}")

    def integrand(t: float) -> float:
        return math.exp(-s * t) * f(t)

    result = integrate_semiinf_decay(integrand, cfg)
    if not result.converged:
        logger.warning("Laplace transform at s=%r did not converge", s)
    return result


def laplace_numeric_trig(
    kernel: Kernel,
    nu: float,
    s: float,
    cfg: QuadConfig = DEFAULT_CONFIG,
    alpha: float = 0.0,
    beta: float = 0.0,
) -> EvalResult:
    """Laplace transform of a generalized Bateman or Havelock function through its t-form.

    Transforming cos(x t - phi) and sin(x t - phi) in x under the integral leaves a single
    integral in t with rational decay. This suits the Havelock functions, whose own decay
    is only algebraic. Needs s > 0.
    """
    if not s > 0:
        raise errors.DomainError(f"The t-form transform needs s > 0, got {s!r}")
    weight = power_weight(alpha, beta)

    def integrand(t: float) -> float:
        phi = nu * math.atan(t)
        c, sn = math.cos(phi), math.sin(phi)
        if kernel is Kernel.COS:
            numerator = s * c + t * sn
        else:
            numerator = t * c - s * sn
        return weight(t) * numerator / (s * s + t * t)

    return integrate_semiinf_decay(integrand, cfg).scaled(TWO_OVER_PI)


def _k_exp(nu: int, y: float, shift: float) -> float:
    # e^shift k_nu(y) for large y without overflow, nu = +-1
    return TWO_OVER_PI * y * (
        backends.bessel_k_scaled(1, y) + nu * backends.bessel_k_scaled(0, y)
    ) * math.exp(shift - y)


def _k_subject(make: Callable[[Params], RealFunction]) -> NumericForm:
    def numeric(s: float, p: Params, cfg: QuadConfig) -> EvalResult:
        return laplace_numeric(make(p), s, cfg)

    return numeric


def _h_subject(nu: float) -> NumericForm:
    def numeric(s: float, p: Params, cfg: QuadConfig) -> EvalResult:
        return laplace_numeric_trig(Kernel.SIN, nu, s, cfg)

    return numeric


def _positive(f: RealFunction) -> RealFunction:
    def guarded(t: float) -> float:
        return f(t) if t > 0 else 0.0

    return guarded


def _k_value(nu: float, t: float) -> float:
    return bateman_k(nu, t).value


def _ratio_sec(s: float) -> float:
    # arcsec(s) / sqrt(s^2 - 1), continued below s = 1 through arccosh(1/s) / sqrt(1 - s^2)
    if s == 1:
        return 1.0
    if s > 1:
        return math.acos(1.0 / s) / math.sqrt(s * s - 1.0)
    root = math.sqrt(1.0 - s * s)
    return math.atanh(root) / root


def _eq53(s: float, p: Params) -> float:
    if s == 1:
        return 1.0 / math.pi
    return 2.0 * math.log(s) / (math.pi * (s * s - 1.0))


def _eq72_k(s: float, p: Params) -> float:
    k = int(p[0])
    q = 1.0 - s * s
    tail = math.fsum(
        math.exp(math.lgamma(k - m + 1.5) - math.lgamma(k - m + 2.0)) / q**m
        for m in range(1, k + 1)
    )
    return (1.0 - s) / q ** (k + 1) - s / MATH.sqrt_pi * tail


def _eq72_h_printed(s: float, p: Params) -> float:
    k = int(p[0])
    q = 1.0 - s * s
    tail = math.fsum(1.0 / ((k - m + 1) * q**m) for m in range(1, k + 1))
    return (2.0 * math.log(s) / q ** (k + 1) + tail) / math.pi


def _eq44_power(s: float, p: Params, b_shift: float) -> float:
    alpha, nu = p
    prefactor = math.exp(
        math.lgamma(alpha) + math.lgamma(alpha + 1.0) - math.lgamma(nu + 1.0)
    ) * backends.rgamma(alpha - nu + 1.0)
    z = (2.0 * s - 1.0) / (2.0 * s + 1.0)
    hyp = backends.hyp_gauss_2f1(alpha + 1.0, b_shift - nu, alpha - nu + 1.0, z)
    return prefactor * (2.0 / (2.0 * s + 1.0)) ** (alpha + 1.0) * hyp


def _eq44_inverse(s: float, p: Params) -> float:
    nu = p[0]
    return 2.0 * s ** (nu - 0.5) * backends.bessel("K", 1, 2.0 * math.sqrt(s)) / backends.gamma(
        nu + 1.0
    )


def _eq44_inverse_subject(scale: float) -> Callable[[Params], RealFunction]:
    def make(p: Params) -> RealFunction:
        nu = p[0]
        return _positive(
            lambda t: t**-nu * math.exp(-0.5 / t) * _k_value(2.0 * nu, scale / t)
        )

    return make


def _eq38_product_scaled(s: float, p: Params) -> float:
    m, n, a, b = int(p[0]), int(p[1]), p[2], p[3]
    prefactor = (
        (-1.0) ** (m + n)
        * math.factorial(m + n + 1)
        * (s - a) ** m
        * (s - b) ** n
        / (math.factorial(m + 1) * math.factorial(n + 1) * (s + 1.0) ** (m + n + 2))
    )
    z = s * (s - a - b) / ((s - a) * (s - b))
    return prefactor * backends.hyp_gauss_2f1(-m, -n, -m - n - 1.0, z)


def _eq38_whittaker(s: float, p: Params) -> float:
    n = int(p[0])
    kappa = -0.5 * n - 0.25
    prefactor = (-1.0) ** (n - 1) * s ** (n - 1.5) * math.exp(s * s / 16.0) / 2.0 ** (
        1.5 * n + 0.25
    )
    return prefactor * backends.whittaker_w(kappa, kappa, s * s / 8.0)


def _entries() -> Iterator[TransformEntry]:
    yield TransformEntry(
        id="eq37_k0",
        citation='Eq (37) line 1, "1/(s+1)"',
        subject="k_0(t)",
        formula="1/(s+1)",
        closed_form=lambda s, p: 1.0 / (s + 1.0),
        numeric=_k_subject(lambda p: lambda t: _k_value(0, t)),
        s_min=-1.0,
        limits=lambda p: (1.0, 0.0),
    )
    yield TransformEntry(
        id="eq37_k2n2",
        citation='Eq (37) line 2, "2(1-s)^n/(s+1)^(n+2)"',
        subject="k_(2n+2)(t)",
        formula="2 (1-s)^n / (s+1)^(n+2)",
        closed_form=lambda s, p: 2.0 * (1.0 - s) ** int(p[0]) / (s + 1.0) ** (int(p[0]) + 2),
        numeric=_k_subject(lambda p: lambda t: _k_value(2 * int(p[0]) + 2, t)),
        s_min=-1.0,
        params=((0,), (1,), (2,)),
        param_names=("n",),
        limits=lambda p: (0.0, 0.0),
    )
    yield TransformEntry(
        id="eq37_k2nu",
        citation='Eq (37) line 3, "sin(pi nu)/(2 pi nu (1-nu)) 2F1(1,2;2-nu;(1-s)/2)"',
        subject="k_(2 nu)(t), non-integer nu",
        formula="sin(pi nu) / (2 pi nu (1-nu)) 2F1(1, 2; 2-nu; (1-s)/2)",
        closed_form=lambda s, p: math.sin(math.pi * p[0])
        / (2.0 * math.pi * p[0] * (1.0 - p[0]))
        * backends.hyp_gauss_2f1(1.0, 2.0, 2.0 - p[0], 0.5 * (1.0 - s)),
        numeric=_k_subject(lambda p: lambda t: _k_value(2.0 * p[0], t)),
        params=((0.5,), (1.5,)),
        param_names=("nu",),
    )
    yield TransformEntry(
        id="eq38_whittaker",
        citation='Eq (38) line 1, "W_(-n/2-1/4,-n/2-1/4)(s^2/8)"',
        subject="e^(-t^2) k_(2n)(t^2)",
        formula="(-1)^(n-1) s^(n-3/2) e^(s^2/16) / 2^(3n/2+1/4) W(s^2/8)",
        closed_form=_eq38_whittaker,
        numeric=_k_subject(lambda p: lambda t: math.exp(-t * t) * _k_value(2 * int(p[0]), t * t)),
        sample_range=(1.0, 4.0),
        params=((1,), (2,)),
        param_names=("n",),
        verified=False,
    )
    yield TransformEntry(
        id="eq38_product",
        citation='Eq (38) line 2, "(-1)^(m+n)/(s+1)^(m+n+2) 2F1(-m,-n;2;1/s^2)"',
        subject="k_(2m+2)(t/2) k_(2n+2)(t/2) / t",
        formula="(-1)^(m+n) / (s+1)^(m+n+2) 2F1(-m, -n; 2; 1/s^2)",
        closed_form=lambda s, p: (-1.0) ** int(p[0] + p[1])
        / (s + 1.0) ** (int(p[0] + p[1]) + 2)
        * backends.hyp_gauss_2f1(-p[0], -p[1], 2.0, 1.0 / (s * s)),
        numeric=_k_subject(
            lambda p: _positive(
                lambda t: _k_value(2 * int(p[0]) + 2, 0.5 * t)
                * _k_value(2 * int(p[1]) + 2, 0.5 * t)
                / t
            )
        ),
        s_min=-1.0,
        sample_range=(5.0, 10.0),
        params=((0, 0), (1, 0), (1, 1)),
        param_names=("m", "n"),
        verified=False,
    )
    yield TransformEntry(
        id="eq38_product_scaled",
        citation='Eq (38) line 3, "2F1(-m,-n;-m-n-1;s(s-alpha-beta)/((s-alpha)(s-beta)))"',
        subject="e^((alpha+beta)t/2) / (alpha beta) k_(2m+2)(alpha t/2) k_(2n+2)(beta t/2) / t",
        formula="(-1)^(m+n) (m+n+1)! (s-alpha)^m (s-beta)^n / ((m+1)! (n+1)! (s+1)^(m+n+2)) 2F1",
        closed_form=_eq38_product_scaled,
        numeric=_k_subject(
            lambda p: _positive(
                lambda t: math.exp(0.5 * (p[2] + p[3]) * t)
                / (p[2] * p[3])
                * _k_value(2 * int(p[0]) + 2, 0.5 * p[2] * t)
                * _k_value(2 * int(p[1]) + 2, 0.5 * p[3] * t)
                / t
            )
        ),
        sample_range=(2.5, 10.0),
        params=((0, 0, 1.0, 1.0), (1, 0, 1.0, 2.0)),
        param_names=("m", "n", "alpha", "beta"),
        verified=False,
    )
    yield TransformEntry(
        id="eq40_k2",
        citation='Eq (40) line 1, "2/(s+1)^2"',
        subject="k_2(t)",
        formula="2/(s+1)^2",
        closed_form=lambda s, p: 2.0 / (s + 1.0) ** 2,
        numeric=_k_subject(lambda p: lambda t: _k_value(2, t)),
        s_min=-1.0,
    )
    yield TransformEntry(
        id="eq40_k2_scaled",
        citation='Eq (40) line 2, "2a/(s+a)^2"',
        subject="k_2(a t)",
        formula="2a/(s+a)^2",
        closed_form=lambda s, p: 2.0 * p[0] / (s + p[0]) ** 2,
        numeric=_k_subject(lambda p: lambda t: _k_value(2, p[0] * t)),
        params=((2.0,), (0.5,)),
        param_names=("a",),
    )
    yield TransformEntry(
        id="eq40_shift",
        citation='Eq (40) line 3, "2/(s-+a+1)^2"',
        subject="e^(+-a t) k_2(a t)",
        formula="2/(s -+ a + 1)^2",
        closed_form=lambda s, p: 2.0 / (s - p[1] * p[0] + 1.0) ** 2,
        numeric=_k_subject(lambda p: lambda t: math.exp(p[1] * p[0] * t) * _k_value(2, p[0] * t)),
        sample_range=(1.0, 10.0),
        params=((2.0, 1.0), (2.0, -1.0)),
        param_names=("a", "sign"),
        verified=False,
    )
    yield TransformEntry(
        id="eq40_shift_corrected",
        citation='Eq (40) line 3, "2/(s-+a+1)^2", with the scaling of line 2',
        subject="e^(+-a t) k_2(a t)",
        formula="2a/(s -+ a + a)^2",
        closed_form=lambda s, p: 2.0 * p[0] / (s - p[1] * p[0] + p[0]) ** 2,
        numeric=_k_subject(lambda p: lambda t: math.exp(p[1] * p[0] * t) * _k_value(2, p[0] * t)),
        params=((2.0, 1.0), (2.0, -1.0), (0.5, 1.0)),
        param_names=("a", "sign"),
    )
    yield TransformEntry(
        id="eq40_tk2",
        citation='Eq (40) line 4, "4/(s+1)^3"',
        subject="t k_2(t)",
        formula="4/(s+1)^3",
        closed_form=lambda s, p: 4.0 / (s + 1.0) ** 3,
        numeric=_k_subject(lambda p: lambda t: t * _k_value(2, t)),
        s_min=-1.0,
    )
    yield TransformEntry(
        id="eq43_struve",
        citation='Eq (43) line 1, "sqrt(pi)/s [H_1(2 sqrt(s)) - Y_1(2 sqrt(s))]"',
        subject="t^(1/2) e^(1/(2t)) k_1(2/t)",
        formula="sqrt(pi)/s [H_1(2 sqrt(s)) - Y_1(2 sqrt(s))]",
        closed_form=lambda s, p: MATH.sqrt_pi
        / s
        * (
            backends.struve("H", 1, 2.0 * math.sqrt(s))
            - backends.bessel("Y", 1, 2.0 * math.sqrt(s))
        ),
        numeric=_k_subject(
            lambda p: _positive(lambda t: math.sqrt(t) * _k_exp(1, 2.0 / t, 0.5 / t))
        ),
        verified=False,
    )
    yield TransformEntry(
        id="eq43_hankel",
        citation='Eq (43) line 2, "1/(2s) H_1^(1)(sqrt(s)) H_1^(2)(sqrt(s))"',
        subject="t e^(1/(2t)) k_1(2/t)",
        formula="1/(2s) [J_1(sqrt(s))^2 + Y_1(sqrt(s))^2]",
        closed_form=lambda s, p: (
            backends.bessel("J", 1, math.sqrt(s)) ** 2 + backends.bessel("Y", 1, math.sqrt(s)) ** 2
        )
        / (2.0 * s),
        numeric=_k_subject(lambda p: _positive(lambda t: t * _k_exp(1, 2.0 / t, 0.5 / t))),
        verified=False,
    )
    yield TransformEntry(
        id="eq43_k0k1",
        citation='Eq (43) line 3, "2^(5/2) sqrt(s)/pi K_0(sqrt(s)) K_1(sqrt(s))"',
        subject="e^(-1/(2t)) k_1(2/t) / t",
        formula="2^(5/2) sqrt(s)/pi K_0(sqrt(s)) K_1(sqrt(s))",
        closed_form=lambda s, p: 2.0**2.5
        * math.sqrt(s)
        / math.pi
        * backends.bessel("K", 0, math.sqrt(s))
        * backends.bessel("K", 1, math.sqrt(s)),
        numeric=_k_subject(lambda p: _positive(lambda t: _k_exp(1, 2.0 / t, -0.5 / t) / t)),
        verified=False,
    )
    yield TransformEntry(
        id="eq43_k1sq",
        citation='Eq (43) line 4, "4/(pi s) [K_1(sqrt(s))]^2"',
        subject="e^(-1/(2t)) k_1(2/t) / t^2",
        formula="4/(pi s) K_1(sqrt(s))^2",
        closed_form=lambda s, p: 4.0 / (math.pi * s) * backends.bessel("K", 1, math.sqrt(s)) ** 2,
        numeric=_k_subject(lambda p: _positive(lambda t: _k_exp(1, 2.0 / t, -0.5 / t) / (t * t))),
        verified=False,
    )
    yield TransformEntry(
        id="eq43_struve_corrected",
        citation='Eq (43) line 1, "sqrt(pi)/s [H_1(2 sqrt(s)) - Y_1(2 sqrt(s))]", argument 1/(2t)',
        subject="t^(1/2) e^(1/(2t)) k_1(1/(2t))",
        formula="sqrt(pi)/s [H_1(2 sqrt(s)) - Y_1(2 sqrt(s))]",
        closed_form=lambda s, p: MATH.sqrt_pi
        / s
        * (
            backends.struve("H", 1, 2.0 * math.sqrt(s))
            - backends.bessel("Y", 1, 2.0 * math.sqrt(s))
        ),
        numeric=_k_subject(
            lambda p: _positive(lambda t: math.sqrt(t) * _k_exp(1, 0.5 / t, 0.5 / t))
        ),
    )
    yield TransformEntry(
        id="eq43_hankel_corrected",
        citation='Eq (43) line 2, "1/(2s) H_1^(1)(sqrt(s)) H_1^(2)(sqrt(s))", argument 1/(2t)',
        subject="t e^(1/(2t)) k_1(1/(2t))",
        formula="pi/(2s) [J_1(sqrt(s))^2 + Y_1(sqrt(s))^2]",
        closed_form=lambda s, p: math.pi
        * (
            backends.bessel("J", 1, math.sqrt(s)) ** 2 + backends.bessel("Y", 1, math.sqrt(s)) ** 2
        )
        / (2.0 * s),
        numeric=_k_subject(lambda p: _positive(lambda t: t * _k_exp(1, 0.5 / t, 0.5 / t))),
    )
    yield TransformEntry(
        id="eq43_k0k1_corrected",
        citation='Eq (43) line 3, "2^(5/2) sqrt(s)/pi K_0(sqrt(s)) K_1(sqrt(s))", argument 1/(2t)',
        subject="e^(-1/(2t)) k_1(1/(2t)) / t",
        formula="4 sqrt(s)/pi K_0(sqrt(s)) K_1(sqrt(s))",
        closed_form=lambda s, p: 4.0
        * math.sqrt(s)
        / math.pi
        * backends.bessel("K", 0, math.sqrt(s))
        * backends.bessel("K", 1, math.sqrt(s)),
        numeric=_k_subject(lambda p: _positive(lambda t: _k_exp(1, 0.5 / t, -0.5 / t) / t)),
    )
    yield TransformEntry(
        id="eq43_k1sq_corrected",
        citation='Eq (43) line 4, "4/(pi s) [K_1(sqrt(s))]^2", argument 1/(2t)',
        subject="e^(-1/(2t)) k_1(1/(2t)) / t^2",
        formula="4s/pi K_1(sqrt(s))^2",
        closed_form=lambda s, p: 4.0 * s / math.pi * backends.bessel("K", 1, math.sqrt(s)) ** 2,
        numeric=_k_subject(lambda p: _positive(lambda t: _k_exp(1, 0.5 / t, -0.5 / t) / (t * t))),
    )
    yield TransformEntry(
        id="eq44_power",
        citation='Eq (44) line 1, "2F1(alpha+1,-nu;alpha-nu+1;(2s-1)/(2s+1))"',
        subject="t^(alpha-1) k_(2 nu)(t/2)",
        formula=(
            "G(alpha) G(alpha+1) / (G(nu+1) G(alpha-nu+1)) (2/(2s+1))^(alpha+1)"
            " 2F1(alpha+1, -nu; ...)"
        ),
        closed_form=lambda s, p: _eq44_power(s, p, 0.0),
        numeric=_k_subject(lambda p: lambda t: t ** (p[0] - 1.0) * _k_value(2.0 * p[1], 0.5 * t)),
        s_min=-0.5,
        params=((1.0, 0.5), (2.0, 1.0), (1.5, 2.0)),
        param_names=("alpha", "nu"),
        verified=False,
    )
    yield TransformEntry(
        id="eq44_power_corrected",
        citation=(
            'Eq (44) line 1, "2F1(alpha+1,-nu;alpha-nu+1;(2s-1)/(2s+1))", second parameter 1-nu'
        ),
        subject="t^(alpha-1) k_(2 nu)(t/2)",
        formula=(
            "G(alpha) G(alpha+1) / (G(nu+1) G(alpha-nu+1)) (2/(2s+1))^(alpha+1)"
            " 2F1(alpha+1, 1-nu; ...)"
        ),
        closed_form=lambda s, p: _eq44_power(s, p, 1.0),
        numeric=_k_subject(lambda p: lambda t: t ** (p[0] - 1.0) * _k_value(2.0 * p[1], 0.5 * t)),
        s_min=-0.5,
        params=((1.0, 0.5), (2.0, 1.0), (1.5, 2.0)),
        param_names=("alpha", "nu"),
    )
    yield TransformEntry(
        id="eq44_inverse",
        citation='Eq (44) line 3, "2 s^(nu-1/2)/Gamma(nu+1) K_1(2 sqrt(s))"',
        subject="t^(-nu) e^(-1/(2t)) k_(2 nu)(2/t)",
        formula="2 s^(nu-1/2) K_1(2 sqrt(s)) / Gamma(nu+1)",
        closed_form=_eq44_inverse,
        numeric=_k_subject(_eq44_inverse_subject(2.0)),
        params=((0.0,), (1.0,), (2.0,)),
        param_names=("nu",),
        verified=False,
    )
    yield TransformEntry(
        id="eq44_inverse_corrected",
        citation='Eq (44) line 3, "2 s^(nu-1/2)/Gamma(nu+1) K_1(2 sqrt(s))", argument 1/(2t)',
        subject="t^(-nu) e^(-1/(2t)) k_(2 nu)(1/(2t))",
        formula="2 s^(nu-1/2) K_1(2 sqrt(s)) / Gamma(nu+1)",
        closed_form=_eq44_inverse,
        numeric=_k_subject(_eq44_inverse_subject(0.5)),
        params=((0.0,), (1.0,), (2.0,)),
        param_names=("nu",),
    )
    yield TransformEntry(
        id="eq53_h0",
        citation='Eq (53), "2 ln(s)/(pi (s^2-1))"',
        subject="h_0(t)",
        formula="2 ln(s) / (pi (s^2-1))",
        closed_form=_eq53,
        numeric=_h_subject(0.0),
        limits=lambda p: (0.0, 0.0),
    )
    yield TransformEntry(
        id="eq54_h1",
        citation='Eq (54), "2/(pi (s+1)) [sec^-1(s)/sqrt(s^2-1) - 1]"',
        subject="h_1(t)",
        formula="2/(pi (s+1)) [arcsec(s)/sqrt(s^2-1) - 1]",
        closed_form=lambda s, p: 2.0 / (math.pi * (s + 1.0)) * (_ratio_sec(s) - 1.0),
        numeric=_h_subject(1.0),
    )
    yield TransformEntry(
        id="eq56_h2",
        citation='Eq (56), "-2 [s+1+ln(s)]/(pi (s+1)^2)"',
        subject="h_2(t)",
        formula="-2 (s + 1 + ln(s)) / (pi (s+1)^2)",
        closed_form=lambda s, p: -2.0 * (s + 1.0 + math.log(s)) / (math.pi * (s + 1.0) ** 2),
        numeric=_h_subject(2.0),
        limits=lambda p: (-TWO_OVER_PI, 0.0),
    )
    yield TransformEntry(
        id="eq72_k02k",
        citation='Eq (72) line 1, "(1-s)/(1-s^2)^(k+1) - s/sqrt(pi) sum"',
        subject="k_(0,2k)(t)",
        formula="(1-s)/(1-s^2)^(k+1) - s/sqrt(pi) sum_m G(k-m+3/2) / (G(k-m+2) (1-s^2)^m)",
        closed_form=_eq72_k,
        numeric=_k_subject(lambda p: lambda t: bateman_k_gen(GenParams(0, 2 * p[0]), t).value),
        params=((0,), (1,), (2,)),
        param_names=("k",),
    )
    yield TransformEntry(
        id="eq72_h02k",
        citation='Eq (72) line 2, "1/pi [2 ln(s)/(1-s^2)^(k+1) + sum 1/((k-m+1)(1-s^2)^m)]"',
        subject="h_(0,2k)(t)",
        formula="1/pi [2 ln(s)/(1-s^2)^(k+1) + sum_m 1/((k-m+1) (1-s^2)^m)]",
        closed_form=_eq72_h_printed,
        numeric=lambda s, p, cfg: laplace_numeric_trig(Kernel.SIN, 0.0, s, cfg, alpha=2 * p[0]),
        params=((0,), (1,), (2,)),
        param_names=("k",),
        verified=False,
    )
    yield TransformEntry(
        id="eq72_h02k_corrected",
        citation='Eq (72) line 2, "1/pi [2 ln(s)/(1-s^2)^(k+1) + ...]", opposite sign',
        subject="h_(0,2k)(t)",
        formula="-1/pi [2 ln(s)/(1-s^2)^(k+1) + sum_m 1/((k-m+1) (1-s^2)^m)]",
        closed_form=lambda s, p: -_eq72_h_printed(s, p),
        numeric=lambda s, p, cfg: laplace_numeric_trig(Kernel.SIN, 0.0, s, cfg, alpha=2 * p[0]),
        params=((0,), (1,), (2,)),
        param_names=("k",),
    )
    yield TransformEntry(
        id="eq87_ki2n",
        citation='Eq (87) line 1, "1/(n s) [((1-s)/(s+1))^n - 1]"',
        subject="ki_(2n)(t)",
        formula="1/(n s) [((1-s)/(1+s))^n - 1]",
        closed_form=lambda s, p: (((1.0 - s) / (1.0 + s)) ** int(p[0]) - 1.0) / (p[0] * s),
        numeric=_k_subject(lambda p: _positive(lambda t: ki(int(p[0]), t).value)),
        params=((1,), (2,), (3,)),
        param_names=("n",),
        limits=lambda p: ((((-1) ** int(p[0])) - 1.0) / p[0], 0.0),
    )
    yield TransformEntry(
        id="eq87_ki2n_scaled",
        citation='Eq (87) line 2, "1/(n s) [((2-s)/(s+2))^n - 1]"',
        subject="ki_(2n)(2t)",
        formula="1/(n s) [((2-s)/(2+s))^n - 1]",
        closed_form=lambda s, p: (((2.0 - s) / (2.0 + s)) ** int(p[0]) - 1.0) / (p[0] * s),
        numeric=_k_subject(lambda p: _positive(lambda t: ki(int(p[0]), 2.0 * t).value)),
        params=((1,), (2,)),
        param_names=("n",),
    )
    yield TransformEntry(
        id="eq87_ki0",
        citation='Eq (87) line 3, "-ln(s)/s"',
        subject="ki_0(t)",
        formula="-ln(s)/s",
        closed_form=lambda s, p: -math.log(s) / s,
        numeric=_k_subject(lambda p: _positive(lambda t: ki(0, t).value)),
        verified=False,
    )
    yield TransformEntry(
        id="eq87_ki0_corrected",
        citation='Eq (87) line 3, "-ln(s)/s", with ki_0 = -E_1',
        subject="ki_0(t)",
        formula="-ln(1+s)/s",
        closed_form=lambda s, p: -math.log1p(s) / s,
        numeric=_k_subject(lambda p: _positive(lambda t: ki(0, t).value)),
    )
    yield TransformEntry(
        id="eq87_ki2",
        citation='Eq (87) line 4, "-2/(s+1)"',
        subject="ki_2(t)",
        formula="-2/(s+1)",
        closed_form=lambda s, p: -2.0 / (s + 1.0),
        numeric=_k_subject(lambda p: _positive(lambda t: ki(1, t).value)),
        limits=lambda p: (-2.0, 0.0),
    )


TRANSFORMS: dict[str, TransformEntry] = {entry.id: entry for entry in _entries()}


def list_transforms(verified: bool | None = None) -> list[TransformEntry]:
    """Registered transforms in registration order, optionally filtered by `verified`."""
    return [e for e in TRANSFORMS.values() if verified is None or e.verified == verified]


def get_transform(transform_id: str) -> TransformEntry:
    try:
        return TRANSFORMS[transform_id]
    except KeyError:
        raise errors.UnknownIdError(f"No transform registered as {transform_id!r}") from None


def _resolve(entry: TransformEntry, s: float, params: Params | None) -> Params:
    if not s > entry.s_min:
        raise errors.DomainError(f"{entry.id} holds for s > {entry.s_min!r}, got s={s!r}")
    return entry.params[0] if params is None else tuple(params)


def laplace_closed(transform_id: str, s: float, params: Params | None = None) -> float:
    """Evaluates a registered closed form.

    Args:
        transform_id: Registry key, e.g. "eq37_k0".
        s: The transform variable.
        params: Entry parameters; defaults to the first registered tuple.

    Raises:
        UnknownIdError for an unregistered id.
        DomainError for s outside the entry's half-line.
    """
    entry = get_transform(transform_id)
    return entry.closed_form(s, _resolve(entry, s, params))


def compare(
    transform_id: str,
    s: float,
    params: Params | None = None,
    cfg: QuadConfig = DEFAULT_CONFIG,
) -> TransformComparison:
    """Numeric transform against the closed form at one point."""
    entry = get_transform(transform_id)
    p = _resolve(entry, s, params)
    numeric = entry.numeric(s, p, cfg)
    closed = entry.closed_form(s, p)
    logger.debug("%s at s=%r: numeric=%r closed=%r", transform_id, s, numeric.value, closed)
    return TransformComparison(transform_id, s, p, numeric, closed)


def initial_final_value_check(transform_id: str, params: Params | None = None) -> LimitReport:
    """Recovers the subject's values at t -> 0+ and t -> infinity from s F(s).

    s F(s) is sampled at two large and two small s and extrapolated linearly, in 1/s
    towards infinity and in s towards zero.

    Raises:
        UnknownIdError for an id without expected limits.
    """
    entry = get_transform(transform_id)
    if entry.limits is None:
        raise errors.UnknownIdError(f"{transform_id!r} has no initial or final value data")
    p = entry.params[0] if params is None else tuple(params)

    def s_times_f(s: float) -> float:
        return s * entry.closed_form(s, p)

    s1, s2 = INITIAL_VALUE_POINTS
    initial = (s2 * s_times_f(s2) - s1 * s_times_f(s1)) / (s2 - s1)
    s1, s2 = FINAL_VALUE_POINTS
    final = (s_times_f(s2) * s1 - s_times_f(s1) * s2) / (s1 - s2)

    expected_initial, expected_final = entry.limits(p)
    return LimitReport(transform_id, p, initial, final, expected_initial, expected_final)
