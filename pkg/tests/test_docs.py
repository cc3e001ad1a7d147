import os
import pathlib

from bateman import docs
from bateman.identity_registry import (
    REGISTRY,
    IdentityReport,
    Status,
    SuiteReport,
    Tier,
    get_identity,
    list_identities,
)


def _report(identity_id: str, status: Status, residual: float | None) -> IdentityReport:
    identity = get_identity(identity_id)
    return IdentityReport(identity.id, identity.citation, identity.tier, status, residual, 3)


def _suite() -> SuiteReport:
    return SuiteReport(
        (
            _report("eq20_ode", Status.PASS, 1.5e-9),
            _report("eq37_k0", Status.FAIL, 2e-3),
            _report("eq87_ki0", Status.DIAGNOSED, 0.69),
        )
    )


def _table_rows(page: str) -> list[str]:
    return [line for line in page.splitlines() if line.startswith("| ")][1:]


def test_escape_cell() -> None:
    assert docs.escape_cell("|x| < 1") == "\\|x\\| < 1"
    assert docs.escape_cell("a\\b\nc") == "a\\\\b c"


def test_format_residual() -> None:
    assert docs.format_residual(None) == "n/a"
    assert docs.format_residual(0.00123) == "1.230e-03"


def test_catalog_page_has_one_row_per_identity() -> None:
    page = docs.render_catalog_page(_suite(), list_identities())
    rows = _table_rows(page)
    assert len(rows) == len(REGISTRY)
    assert "1 passed, 1 failed, 1 diagnosed" in page

    by_id = {row.split(" | ")[0][2:]: row for row in rows}
    assert "PASS" in by_id["eq20_ode"] and "1.500e-09" in by_id["eq20_ode"]
    assert "**FAIL**" in by_id["eq37_k0"]
    assert "not run" in by_id["eq09_generating"]


def test_discrepancies_page_lists_diagnosed_entries() -> None:
    page = docs.render_discrepancies_page(_suite())
    rows = _table_rows(page)
    assert len(rows) == 1
    assert rows[0].startswith("| eq87_ki0 |")
    assert get_identity("eq87_ki0").tier is Tier.DIAGNOSE
    assert "6.900e-01" in rows[0]


def test_transforms_and_schema_pages() -> None:
    transforms_page = docs.render_transforms_page()
    assert "| eq53_h0 |" in transforms_page
    schema = docs.render_schema_page()
    assert "QUAD_OSC" in schema and "{methods}" not in schema


def test_render_catalog_writes_all_pages(output_dir: pathlib.Path) -> None:
    target = output_dir / "docs"
    paths = docs.render_catalog(_suite(), target)
    assert sorted(os.path.basename(p) for p in paths) == [
        "catalog.md",
        "discrepancies.md",
        "schema.md",
        "transforms.md",
    ]
    for path in paths:
        text = pathlib.Path(path).read_text(encoding="utf-8")
        assert text.endswith("\n") and "\r" not in text
