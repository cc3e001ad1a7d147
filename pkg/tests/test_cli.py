import csv
import io
import json
import math
import pathlib

import pytest

from bateman import cli, errors
from bateman.quadrature import DEFAULT_CONFIG


def run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, str]:
    code = cli.main(cli.parse_args(argv))
    return code, capsys.readouterr().out


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("--fn", "k", "--nu", "0", "--x", "1"), "value=0.3678794412 err_est="),
        (("--fn", "h", "--nu", "2", "--x", "0"), "value=-0.6366197724"),
        (("--fn", "ki", "--nu", "2", "--x", "1"), "value=-0.7357588823"),
        (("--fn", "kgen", "--nu", "0", "--alpha", "2", "--x", "1"), "value=0.3678794412"),
    ],
)
def test_eval_text(
    capsys: pytest.CaptureFixture[str], argv: tuple[str, ...], expected: str
) -> None:
    code, out = run(capsys, "eval", *argv)
    assert code == cli.EXIT_OK
    assert out.startswith(expected)


def test_eval_json(capsys: pytest.CaptureFixture[str]) -> None:
    code, out = run(capsys, "eval", "--nu", "1", "--x", "1", "--format", "json")
    assert code == cli.EXIT_OK
    data = json.loads(out)
    assert data["method"] == "CLOSED"
    assert data["converged"] is True
    assert data["value"] == pytest.approx(0.6512185259, abs=1e-9)


def test_evaluate_dispatch() -> None:
    assert cli.evaluate("ji", 1, 1e-6, DEFAULT_CONFIG).value == pytest.approx(-1.0, abs=1e-5)
    with pytest.raises(errors.ConfigError):
        cli.evaluate("ki", 3, 1.0, DEFAULT_CONFIG)
    with pytest.raises(errors.ConfigError):
        cli.evaluate("ji", 0.5, 1.0, DEFAULT_CONFIG)


def test_table_csv(capsys: pytest.CaptureFixture[str]) -> None:
    code, out = run(capsys, "table", "--nu", "0", "--x-min", "0", "--x-max", "4", "--x-step", "0.5")
    assert code == cli.EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["nu", "x", "value", "err_est", "method"]
    assert len(rows) == 1 + 9
    assert rows[1][:3] == ["0", "0", "1"]
    assert float(rows[1][3]) < 1e-15
    assert rows[1][4] == "CLOSED"
    assert float(rows[3][2]) == pytest.approx(math.exp(-1.0))


def test_table_json_to_file(capsys: pytest.CaptureFixture[str], tmp_path: pathlib.Path) -> None:
    path = tmp_path / "table.json"
    code, _ = run(
        capsys,
        "table",
        "--nu", "0", "--nu", "2",
        "--x-max", "1",
        "--format", "json",
        "-o", str(path),
        "-j", "2",
    )
    assert code == cli.EXIT_OK
    data = json.loads(path.read_text(encoding="utf-8"))
    assert len(data) == 2 * 3
    assert [row["nu"] for row in data] == [0.0, 0.0, 0.0, 2.0, 2.0, 2.0]
    assert all(row["converged"] for row in data)


def test_table_records_failed_points(capsys: pytest.CaptureFixture[str]) -> None:
    # ki is not defined at x = 0; the row stays with empty cells
    code, out = run(capsys, "table", "--fn", "ki", "--nu", "2", "--x-max", "1")
    assert code == cli.EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[1] == ["2", "0", "", "", ""]
    assert rows[3][2] != ""


def test_eval_negative_even_order(capsys: pytest.CaptureFixture[str]) -> None:
    code, out = run(capsys, "eval", "--fn", "k", "--nu=-4", "--x", "1")
    assert code == cli.EXIT_OK
    assert out.startswith("value=0 ")


def test_laplace(capsys: pytest.CaptureFixture[str]) -> None:
    code, out = run(capsys, "laplace", "--id", "eq37_k0", "--s", "1")
    assert code == cli.EXIT_OK
    assert "closed=0.5 " in out


def test_verify_and_docs(capsys: pytest.CaptureFixture[str], tmp_path: pathlib.Path) -> None:
    report = tmp_path / "report.json"
    code, out = run(capsys, "verify", "--filter", "eq37_k0", "-o", str(report), "--timings")
    assert code == cli.EXIT_OK
    assert out.strip().endswith("1 passed, 0 failed, 0 diagnosed")
    data = json.loads(report.read_text(encoding="utf-8"))
    assert data["filter"] == "eq37_k0"
    assert "elapsed_s" in data["entries"][0]

    pages = tmp_path / "docs"
    code, _ = run(capsys, "docs", "--report", str(report), "--output-dir", str(pages))
    assert code == cli.EXIT_OK
    assert (pages / "catalog.md").read_text(encoding="utf-8").count("| eq37_k0 |") == 1


def test_usage_errors_exit_with_one() -> None:
    with pytest.raises(SystemExit) as exc:
        cli.parse_args(["eval", "--fn", "nope"])
    assert exc.value.code == cli.EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        cli.parse_args([])
    assert exc.value.code == cli.EXIT_USAGE


def test_domain_and_config_errors_exit_with_one(
    capsys: pytest.CaptureFixture[str], tmp_path: pathlib.Path
) -> None:
    assert run(capsys, "eval", "--fn", "ki", "--nu", "3", "--x", "1")[0] == cli.EXIT_USAGE
    assert run(capsys, "eval", "--nu", "1")[0] == cli.EXIT_USAGE
    assert run(capsys, "laplace", "--id", "eq37_k0", "--s", "-2")[0] == cli.EXIT_USAGE
    assert run(capsys, "table", "--nu", "0", "--x-step", "0")[0] == cli.EXIT_USAGE

    config = tmp_path / "bad.json"
    config.write_text(json.dumps({"bogus": 1}), encoding="utf-8")
    assert run(capsys, "eval", "--config", str(config), "--nu", "0", "--x", "1")[0] == 1


def test_missing_files_exit_with_three(
    capsys: pytest.CaptureFixture[str], tmp_path: pathlib.Path
) -> None:
    missing = str(tmp_path / "missing.json")
    assert run(capsys, "docs", "--report", missing)[0] == cli.EXIT_IO
    assert run(capsys, "eval", "--config", missing, "--nu", "0", "--x", "1")[0] == cli.EXIT_IO


def test_config_file_supplies_defaults(
    capsys: pytest.CaptureFixture[str], tmp_path: pathlib.Path
) -> None:
    config = tmp_path / "settings.json"
    config.write_text(json.dumps({"fn": "h", "nu": 2.0, "x": 0.0}), encoding="utf-8")
    code, out = run(capsys, "eval", "--config", str(config))
    assert code == cli.EXIT_OK
    assert out.startswith("value=-0.6366197724")

    # flags win over the file
    code, out = run(capsys, "eval", "--config", str(config), "--fn", "k", "--x", "1")
    assert out.startswith("value=0.7357588823")


def test_saved_settings_round_trip(
    capsys: pytest.CaptureFixture[str], user_dirs: pathlib.Path
) -> None:
    code, _ = run(capsys, "eval", "--nu", "0", "--x", "1", "--save-config", "unit")
    assert code == cli.EXIT_OK
    assert (user_dirs / "config" / "unit_settings.json").exists()

    code, out = run(capsys, "eval", "--config", "unit")
    assert code == cli.EXIT_OK
    assert out.startswith("value=0.3678794412")


def test_log_file(capsys: pytest.CaptureFixture[str], user_dirs: pathlib.Path) -> None:
    code, _ = run(capsys, "eval", "--nu", "0", "--x", "1", "--log-file", "-v")
    assert code == cli.EXIT_OK
    assert (user_dirs / "log" / cli.LOG_FILE_NAME).exists()
