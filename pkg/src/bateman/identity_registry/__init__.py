"""
Catalog of the Bateman-function identities as machine-checkable cases.

Every relation of the survey is one or more `Identity` entries. ASSERT entries must hold to
their tolerance; DIAGNOSE entries are printed forms that are measured and reported only.
Where a printed form is wrong, a verified variant is registered next to it with the suffix
`_corrected`.
"""

from __future__ import annotations

import concurrent.futures
import logging
import math
import time
from collections.abc import Iterable

from bateman import errors
from bateman.identity_registry import (
    appendix_a,
    appendix_b,
    appendix_c,
    core,
    generalized,
    havelock,
    integral,
    series,
    transforms_catalog,
)
from bateman.identity_registry.identity import (
    Identity,
    IdentityReport,
    Sample,
    Status,
    SuiteReport,
    Tier,
    grid,
    samples,
)
from bateman.quadrature import DEFAULT_CONFIG, QuadConfig

__all__ = [
    "REGISTRY",
    "DIAGNOSE_WARN_RESIDUAL",
    "Identity",
    "IdentityReport",
    "Sample",
    "Status",
    "SuiteReport",
    "Tier",
    "grid",
    "list_identities",
    "run_suite",
    "samples",
    "verify_identity",
]

logger = logging.getLogger(__name__)

# DIAGNOSE entries whose residual exceeds this are logged as warnings
DIAGNOSE_WARN_RESIDUAL = 1e-3

_CATALOGS = (
    core,
    series,
    havelock,
    generalized,
    integral,
    transforms_catalog,
    appendix_a,
    appendix_b,
    appendix_c,
)


def _build(catalogs: Iterable) -> dict[str, Identity]:
    registry: dict[str, Identity] = {}
    for catalog in catalogs:
        for identity in catalog.identities():
            if identity.id in registry:
                raise ValueError(f"Identity {identity.id!r} is registered twice")
            registry[identity.id] = identity
    return registry


REGISTRY: dict[str, Identity] = _build(_CATALOGS)


def _matches(identity: Identity, query: str | None) -> bool:
    if query is None or not query.strip():
        return True
    upper = query.strip().upper()
    if upper in Tier.__members__:
        return identity.tier is Tier[upper]
    return query in identity.id or query in identity.citation


def list_identities(query: str | None = None) -> list[Identity]:
    """Registered identities in catalog order.

    Args:
        query: None for all; "ASSERT" or "DIAGNOSE" (any case) for one tier; otherwise a
            substring of the id or the citation, e.g. "eq20" or "A.".
    """
    return [identity for identity in REGISTRY.values() if _matches(identity, query)]


def get_identity(identity_id: str) -> Identity:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise errors.UnknownIdError(f"No identity registered as {identity_id!r}") from None


def _describe(sample: Sample) -> str:
    return ", ".join(f"{k}={v!r}" for k, v in sample.items())


def verify_identity(identity_id: str, cfg: QuadConfig = DEFAULT_CONFIG) -> IdentityReport:
    """Evaluates both sides of one identity over its sample grid.

    Evaluator exceptions and non-finite residuals are recorded per sample in `errors`; an
    ASSERT identity with any errored sample fails.

    Raises:
        UnknownIdError for an unregistered id.
    """
    identity = get_identity(identity_id)
    start = time.perf_counter()

    residuals: list[float] = []
    failures: list[str] = []
    for sample in identity.samples:
        try:
            residual = abs(float(identity.lhs(sample, cfg)) - float(identity.rhs(sample, cfg)))
        except Exception as e:
            failures.append(f"{_describe(sample)}: {type(e).__name__}: {e}")
            continue
        if not math.isfinite(residual):
            failures.append(f"{_describe(sample)}: non-finite residual")
            continue
        residuals.append(residual)

    max_residual = max(residuals) if residuals else None
    if identity.tier is Tier.ASSERT:
        passed = not failures and max_residual is not None and max_residual <= identity.tol
        status = Status.PASS if passed else Status.FAIL
    else:
        status = Status.DIAGNOSED
        if max_residual is not None and max_residual > DIAGNOSE_WARN_RESIDUAL:
            logger.warning(
                "%s (%s) deviates by %.3g as printed", identity.id, identity.label, max_residual
            )

    elapsed = time.perf_counter() - start
    logger.debug(
        "%s: %s, max residual %r in %.3fs", identity.id, status.name, max_residual, elapsed
    )
    return IdentityReport(
        identity=identity.id,
        citation=identity.citation,
        tier=identity.tier,
        status=status,
        max_residual=max_residual,
        samples=len(identity.samples),
        errors=tuple(failures),
        elapsed_s=elapsed,
    )


def run_suite(
    query: str | None = None,
    cfg: QuadConfig = DEFAULT_CONFIG,
    parallelism: int = 1,
) -> SuiteReport:
    """Verifies every identity matching `query`.

    Reports come back in catalog order whatever the parallelism, so the serialized report
    only depends on the catalog and the configuration.

    Args:
        query: Filter as in `list_identities`.
        cfg: Quadrature settings passed to every evaluator.
        parallelism: Number of worker threads; 1 runs serially.
    """
    if parallelism < 1:
        raise ValueError(f"parallelism must be >= 1, got {parallelism!r}")
    ids = [identity.id for identity in list_identities(query)]
    logger.info("Verifying %d identities (filter=%r, workers=%d)", len(ids), query, parallelism)

    def verify(identity_id: str) -> IdentityReport:
        return verify_identity(identity_id, cfg)

    if parallelism == 1:
        reports = [verify(identity_id) for identity_id in ids]
    else:
        with concurrent.futures.ThreadPoolExecutor(max_workers=parallelism) as pool:
            reports = list(pool.map(verify, ids))

    report = SuiteReport(tuple(reports), query)
    logger.info("Suite finished: %s", report.summary_line())
    return report
