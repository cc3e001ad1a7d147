import pytest

from bateman import errors
from bateman.identity_registry import (
    REGISTRY,
    IdentityReport,
    Status,
    SuiteReport,
    Tier,
    appendix_a,
    get_identity,
    grid,
    list_identities,
    run_suite,
    verify_identity,
)
from bateman.identity_registry.identity import Identity, Sample
from bateman.quadrature import QuadConfig


def test_registry_is_not_empty_and_well_formed() -> None:
    assert len(REGISTRY) > 100
    for identity_id, identity in REGISTRY.items():
        assert identity.id == identity_id
        assert identity.samples
        assert identity.label


def test_every_print_error_has_a_verified_companion() -> None:
    for identity_id in REGISTRY:
        if identity_id.endswith("_corrected"):
            assert get_identity(identity_id).tier is Tier.ASSERT


def test_grid_is_first_axis_slowest() -> None:
    assert grid(n=[1, 2], x=[0.5, 1.0]) == (
        {"n": 1, "x": 0.5},
        {"n": 1, "x": 1.0},
        {"n": 2, "x": 0.5},
        {"n": 2, "x": 1.0},
    )


def test_filters() -> None:
    asserted = list_identities("assert")
    diagnosed = list_identities("DIAGNOSE")
    assert len(asserted) + len(diagnosed) == len(REGISTRY)
    assert all(i.tier is Tier.DIAGNOSE for i in diagnosed)
    assert [i.id for i in list_identities("eq20")] == [
        i for i in REGISTRY if "eq20" in i or "eq20" in REGISTRY[i].citation
    ]
    appendix = list_identities("(A.")
    assert len(appendix) == len(list(appendix_a.identities())) == 22
    assert list_identities(None) == list_identities("  ")


def test_unknown_identity() -> None:
    with pytest.raises(errors.UnknownIdError):
        get_identity("eq00_missing")


def test_label_is_the_citation_head() -> None:
    assert get_identity("eq20_ode").label == "Eq (20) line 4"


@pytest.mark.parametrize("identity_id", ["eq09_generating", "eq20_ode", "eq37_k0"])
def test_core_identities_pass(identity_id: str, cfg: QuadConfig) -> None:
    report = verify_identity(identity_id, cfg)
    assert report.status is Status.PASS, report.errors
    assert report.max_residual is not None
    assert report.samples == len(get_identity(identity_id).samples)


@pytest.mark.parametrize(
    "identity_id",
    [
        "eq31_line1",
        "eq31_line2_corrected",
        "eq31_line3",
        "eq36_fullline",
        "eq36_pv_corrected",
        "eq49_li_series_corrected",
        "C7_corrected",
        "eq74_tricomi",
        "eq74_kummer_transform",
    ],
)
def test_asserted_identities_hold(identity_id: str, cfg: QuadConfig) -> None:
    report = verify_identity(identity_id, cfg)
    assert report.status is Status.PASS, (report.max_residual, report.errors)
    assert not report.errors


def test_sample_errors_are_recorded_not_raised(monkeypatch: pytest.MonkeyPatch) -> None:
    def broken(p: Sample, cfg: QuadConfig) -> float:
        raise TypeError("unsupported operand")

    identity = Identity(
        id="eq00_broken",
        citation='Eq (0), "x = x"',
        tier=Tier.ASSERT,
        samples=grid(x=[1.0, 2.0]),
        lhs=broken,
        rhs=lambda p, cfg: p["x"],
    )
    monkeypatch.setitem(REGISTRY, identity.id, identity)
    report = verify_identity(identity.id)
    assert report.status is Status.FAIL
    assert len(report.errors) == 2
    assert "TypeError" in report.errors[0]

    suite = run_suite("eq00_broken", parallelism=2)
    assert [e.identity for e in suite.entries] == ["eq00_broken"]


def test_printed_transform_is_diagnosed(cfg: QuadConfig) -> None:
    report = verify_identity("eq87_ki0", cfg)
    assert report.status is Status.DIAGNOSED
    assert report.max_residual is not None and report.max_residual > 0.1


def test_suite_report_round_trip() -> None:
    entries = (
        IdentityReport("a", "Eq (1)", Tier.ASSERT, Status.PASS, 1e-12, 3, elapsed_s=0.25),
        IdentityReport("b", "Eq (2)", Tier.ASSERT, Status.FAIL, None, 2, ("x=1.0: boom",)),
        IdentityReport("c", "Eq (3)", Tier.DIAGNOSE, Status.DIAGNOSED, 0.5, 1),
    )
    report = SuiteReport(entries, "eq")
    assert report.totals() == {
        "identities": 3,
        "passed": 1,
        "failed": 1,
        "diagnosed": 1,
        "samples": 6,
    }
    assert report.summary_line() == "1 passed, 1 failed, 1 diagnosed"
    assert not report.ok

    data = report.to_dict()
    assert "elapsed_s" not in data["entries"][0]
    assert report.to_dict(timings=True)["entries"][0]["elapsed_s"] == 0.25
    restored = SuiteReport.from_dict(data)
    assert [e.identity for e in restored.entries] == ["a", "b", "c"]
    assert restored.get("b").errors == ("x=1.0: boom",)
    assert restored.filter == "eq"
    with pytest.raises(KeyError):
        restored.get("d")


def test_run_suite_keeps_catalog_order(cfg: QuadConfig) -> None:
    serial = run_suite("eq37_k", cfg)
    threaded = run_suite("eq37_k", cfg, parallelism=3)
    assert [e.identity for e in serial.entries] == [e.identity for e in threaded.entries]
    assert serial.filter == "eq37_k"
    with pytest.raises(ValueError):
        run_suite("eq37", cfg, parallelism=0)


@pytest.mark.slow
def test_all_asserted_identities_hold(cfg: QuadConfig) -> None:
    report = run_suite("ASSERT", cfg, parallelism=4)
    failures = [
        (e.identity, e.max_residual, e.errors)
        for e in report.entries
        if e.status is Status.FAIL
    ]
    assert report.ok, failures
