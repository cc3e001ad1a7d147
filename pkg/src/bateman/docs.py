"""
Markdown pages generated from the identity registry, the transform registry and a suite
report: the identity catalog, the transform table, the output schemas, and the list of
printed formulas that do not hold numerically.
"""

from __future__ import annotations

import logging
import os
from collections.abc import Iterable, Sequence

from bateman import identity_registry, transforms
from bateman.identity_registry import Identity, IdentityReport, Status, SuiteReport, Tier
from bateman.quadrature import Method

logger = logging.getLogger(__name__)

CATALOG_PAGE = "catalog.md"
TRANSFORMS_PAGE = "transforms.md"
SCHEMA_PAGE = "schema.md"
DISCREPANCIES_PAGE = "discrepancies.md"

_BADGES = {Status.PASS: "PASS", Status.FAIL: "**FAIL**", Status.DIAGNOSED: "DIAGNOSED"}


def escape_cell(text: str) -> str:
    """Makes `text` safe inside a Markdown table cell."""
    return text.replace("\\", "\\\\").replace("|", "\\|").replace("\n", " ")


def format_residual(residual: float | None) -> str:
    return "n/a" if residual is None else f"{residual:.3e}"


def _table(header: Sequence[str], rows: Iterable[Sequence[str]]) -> list[str]:
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join("---" for _ in header) + "|",
    ]
    lines.extend("| " + " | ".join(escape_cell(cell) for cell in row) + " |" for row in rows)
    return lines


def _entry_for(report: SuiteReport, identity: Identity) -> IdentityReport | None:
    try:
        return report.get(identity.id)
    except KeyError:
        return None


def render_catalog_page(report: SuiteReport, identities: Sequence[Identity]) -> str:
    """One row per identity, in registry order; identities missing from `report` are
    shown as not run."""
    rows = []
    for identity in identities:
        entry = _entry_for(report, identity)
        status = "not run" if entry is None else _BADGES[entry.status]
        residual = format_residual(None if entry is None else entry.max_residual)
        tol = f"{identity.tol:.0e}" if identity.tier is Tier.ASSERT else ""
        rows.append(
            (identity.id, identity.citation, identity.tier.name, status, residual, tol)
        )

    lines = [
        "# Identity catalog",
        "",
        f"{len(identities)} identities. Last run: {report.summary_line()}.",
        "",
        *_table(("Id", "Citation", "Tier", "Status", "Max residual", "Tol"), rows),
    ]
    return "\n".join(lines) + "\n"


def render_transforms_page() -> str:
    rows = [
        (
            entry.id,
            entry.citation,
            entry.subject,
            entry.formula,
            f"s > {entry.s_min:g}",
            "yes" if entry.verified else "no",
        )
        for entry in transforms.list_transforms()
    ]
    lines = [
        "# Laplace transforms",
        "",
        "Transforms are L{f}(s) = integral over t > 0 of exp(-s t) f(t). Entries marked "
        "unverified are printed forms that the numeric transform contradicts.",
        "",
        *_table(("Id", "Citation", "Subject", "Closed form", "Domain", "Verified"), rows),
    ]
    return "\n".join(lines) + "\n"


_SCHEMA = """\
# Output formats

CSV files are UTF-8, comma separated, with a header row and LF line endings. Numbers use a
decimal point and the shortest representation that reads back exactly, with at most 15
significant digits. A point that could not be evaluated has an empty value cell.

## `bateman table`

| Column | Meaning |
|---|---|
| nu | Order (for `ki`, the first index 2n) |
| x | Argument |
| value | Function value |
| err_est | Estimated absolute error |
| method | Evaluation path: {methods} |

Rows are ordered by nu, then by x. With `--format json` the output is a list of objects with
the same keys plus `converged`.

## `bateman figures`

`fig01.csv` to `fig08.csv` have the columns `nu,x,value`: curves of fixed order over
x in [-5, 10] with step 0.05. `fig02` and `fig04` hold the negative orders with their sign.
`fig09.csv` to `fig12.csv` have the columns `x,nu,value`: d/dnu of k or h at fixed x over nu
in [-10, 10] with step 0.1.

## `bateman verify`

A JSON object:

| Key | Meaning |
|---|---|
| filter | The filter the suite ran with, or null |
| entries | One object per identity, in catalog order |
| totals | Counts: identities, passed, failed, diagnosed, samples |

Each entry has the keys `identity`, `citation`, `tier` (ASSERT or DIAGNOSE), `status` (PASS,
FAIL or DIAGNOSED), `max_residual` (null when no sample evaluated), `samples` and `errors`
(one message per sample that raised). With `--timings`, entries also carry `elapsed_s`.
"""


def render_schema_page() -> str:
    return _SCHEMA.format(methods=", ".join(m.name for m in Method))


def render_discrepancies_page(report: SuiteReport) -> str:
    """Every DIAGNOSE entry of `report`, with its measured residual and note."""
    rows = []
    for entry in report.entries:
        if entry.tier is not Tier.DIAGNOSE:
            continue
        note = identity_registry.get_identity(entry.identity).note
        if entry.errors:
            note = f"{note} ({len(entry.errors)} samples raised)".strip()
        rows.append((entry.identity, entry.citation, format_residual(entry.max_residual), note))

    lines = [
        "# Printed formulas that do not verify",
        "",
        "Each row is a formula as printed, measured against the verified functions. Where a "
        "verified variant exists it is registered with the suffix `_corrected`.",
        "",
        *_table(("Id", "Citation", "Residual", "Note"), rows),
    ]
    return "\n".join(lines) + "\n"


def _write(path: str, text: str) -> None:
    with open(path, "w", newline="\n", encoding="utf-8") as f:
        f.write(text)
    logger.info("Wrote %s", path)


def render_catalog(report: SuiteReport, output_dir: str | os.PathLike[str]) -> list[str]:
    """Writes the documentation pages into `output_dir`.

    The catalog lists the identities of the report's filter, so a report of the full suite
    gives one row per registry entry.

    Returns:
        The paths written.
    """
    os.makedirs(output_dir, exist_ok=True)
    identities = identity_registry.list_identities(report.filter)
    pages = {
        CATALOG_PAGE: render_catalog_page(report, identities),
        TRANSFORMS_PAGE: render_transforms_page(),
        SCHEMA_PAGE: render_schema_page(),
        DISCREPANCIES_PAGE: render_discrepancies_page(report),
    }
    paths = []
    for name, text in pages.items():
        path = os.path.join(output_dir, name)
        _write(path, text)
        paths.append(path)
    return paths
