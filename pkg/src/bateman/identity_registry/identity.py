"""
Identity cases and their reports.

An identity pairs two evaluators, `lhs` and `rhs`, over a fixed grid of parameter samples.
Verification evaluates both sides at every sample and records max |lhs - rhs|.
"""

from __future__ import annotations

import enum
import itertools
import math
from collections.abc import Callable, Mapping, Sequence
from typing import Any

import attrs

from bateman.quadrature import EvalResult, QuadConfig

Sample = Mapping[str, float]
Evaluator = Callable[[Sample, QuadConfig], "float | EvalResult"]


class Tier(enum.Enum):
    """ASSERT identities must hold; DIAGNOSE identities are measured and reported."""

    ASSERT = enum.auto()
    DIAGNOSE = enum.auto()


class Status(enum.Enum):
    PASS = enum.auto()
    FAIL = enum.auto()
    DIAGNOSED = enum.auto()


def grid(**axes: Sequence[float]) -> tuple[dict[str, float], ...]:
    """Cartesian product of named axes, first axis slowest.

    >>> grid(n=[1, 2], x=[0.5])
    ({'n': 1, 'x': 0.5}, {'n': 2, 'x': 0.5})
    """
    names = list(axes)
    return tuple(dict(zip(names, values)) for values in itertools.product(*axes.values()))


def samples(*rows: Mapping[str, float]) -> tuple[dict[str, float], ...]:
    """An explicit list of samples, for grids that are not products."""
    return tuple(dict(row) for row in rows)


def _check_tol(instance: Identity, attribute: attrs.Attribute, value: float) -> None:
    if instance.tier is Tier.ASSERT and not (math.isfinite(value) and value > 0):
        raise ValueError(f"ASSERT identity {instance.id!r} needs a finite tol > 0, got {value!r}")


@attrs.frozen
class Identity:
    """One machine-checkable relation.

    Attributes:
        id: Registry key, e.g. "eq20_ode".
        citation: Source location followed by a quote of the printed relation.
        tier: ASSERT or DIAGNOSE.
        samples: Deterministic parameter grid.
        lhs: Left side, evaluated per sample.
        rhs: Right side, evaluated per sample.
        tol: Largest residual accepted for an ASSERT identity.
        note: What a DIAGNOSE entry is expected to show, or how a corrected form differs.
    """

    id: str
    citation: str
    tier: Tier
    samples: tuple[Sample, ...]
    lhs: Evaluator = attrs.field(eq=False, repr=False)
    rhs: Evaluator = attrs.field(eq=False, repr=False)
    tol: float = attrs.field(default=1e-8, validator=_check_tol)
    note: str = ""

    @property
    def label(self) -> str:
        """The citation's source location, e.g. "Eq (20)" or "(A.12)"."""
        head, _, _ = self.citation.partition(",")
        return head.strip()


@attrs.frozen
class IdentityReport:
    """Outcome of verifying one identity.

    Attributes:
        identity: The identity id.
        citation: Its citation.
        tier: Its tier.
        status: PASS or FAIL for ASSERT entries, DIAGNOSED otherwise.
        max_residual: Largest |lhs - rhs| over the evaluated samples, None if none evaluated.
        samples: Number of samples in the grid.
        errors: One message per sample whose evaluation raised.
        elapsed_s: Wall time of the verification.
    """

    identity: str
    citation: str
    tier: Tier
    status: Status
    max_residual: float | None
    samples: int
    errors: tuple[str, ...] = ()
    elapsed_s: float = 0.0

    def to_dict(self, timings: bool = False) -> dict[str, Any]:
        data: dict[str, Any] = {
            "identity": self.identity,
            "citation": self.citation,
            "tier": self.tier.name,
            "status": self.status.name,
            "max_residual": self.max_residual,
            "samples": self.samples,
            "errors": list(self.errors),
        }
        if timings:
            data["elapsed_s"] = round(self.elapsed_s, 6)
        return data

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> IdentityReport:
        return cls(
            identity=data["identity"],
            citation=data["citation"],
            tier=Tier[data["tier"]],
            status=Status[data["status"]],
            max_residual=data["max_residual"],
            samples=int(data["samples"]),
            errors=tuple(data.get("errors", ())),
            elapsed_s=float(data.get("elapsed_s", 0.0)),
        )


@attrs.frozen
class SuiteReport:
    """Reports of a suite run, in catalog order.

    Attributes:
        entries: One report per identity.
        filter: The filter the suite was run with.
    """

    entries: tuple[IdentityReport, ...]
    filter: str | None = None

    def count(self, status: Status) -> int:
        return sum(1 for e in self.entries if e.status is status)

    @property
    def passed(self) -> int:
        return self.count(Status.PASS)

    @property
    def failed(self) -> int:
        return self.count(Status.FAIL)

    @property
    def diagnosed(self) -> int:
        return self.count(Status.DIAGNOSED)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def totals(self) -> dict[str, int]:
        return {
            "identities": len(self.entries),
            "passed": self.passed,
            "failed": self.failed,
            "diagnosed": self.diagnosed,
            "samples": sum(e.samples for e in self.entries),
        }

    def summary_line(self) -> str:
        return f"{self.passed} passed, {self.failed} failed, {self.diagnosed} diagnosed"

    def get(self, identity_id: str) -> IdentityReport:
        for entry in self.entries:
            if entry.identity == identity_id:
                return entry
        raise KeyError(identity_id)

    def to_dict(self, timings: bool = False) -> dict[str, Any]:
        return {
            "filter": self.filter,
            "entries": [e.to_dict(timings) for e in self.entries],
            "totals": self.totals(),
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> SuiteReport:
        entries = tuple(IdentityReport.from_dict(e) for e in data["entries"])
        return cls(entries, data.get("filter"))
