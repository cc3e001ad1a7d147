import io
import json
import math
import pathlib

import pytest

from bateman import errors, utils


@pytest.mark.parametrize(
    "value, text",
    [
        (0.1 + 0.2, "0.3"),
        (0.0, "0"),
        (-2.5, "-2.5"),
        (1e-20, "1e-20"),
        (None, ""),
        (math.nan, ""),
        (math.inf, ""),
    ],
)
def test_format_number(value: float | None, text: str) -> None:
    assert utils.format_number(value) == text


def test_format_number_caps_digits() -> None:
    assert utils.format_number(1.0 / 3.0) == "0.333333333333333"


def test_csv_stream() -> None:
    stream = io.StringIO()
    count = utils.write_csv_stream(stream, ("a", "b"), [(1.0, "x"), (None, 2)])
    assert count == 2
    assert stream.getvalue() == "a,b\n1,x\n,2\n"


def test_write_csv_and_json(tmp_path: pathlib.Path) -> None:
    path = tmp_path / "out.csv"
    assert utils.write_csv(path, ("x",), [(0.5,)]) == 1
    assert path.read_bytes() == b"x\n0.5\n"

    target = tmp_path / "out.json"
    utils.write_json(target, {"value": 1.5, "name": "k"})
    assert json.loads(target.read_text(encoding="utf-8")) == {"value": 1.5, "name": "k"}
    with pytest.raises(ValueError):
        utils.dump_json({"value": math.nan})


def test_settings_round_trip(user_dirs: pathlib.Path) -> None:
    settings: dict[str, utils.Setting] = {
        "fn": "h",
        "nu": [0.0, 2.0],
        "parallelism": 4,
        "timings": True,
        "abs_tol": 1e-8,
        "filter": None,
    }
    path = utils.save_settings(settings, "unit")
    assert pathlib.Path(path).parent == user_dirs / "config"
    assert utils.load_settings("unit") == settings


def test_load_plain_settings_file(tmp_path: pathlib.Path) -> None:
    path = tmp_path / "plain.json"
    path.write_text(json.dumps({"x": 1.5, "fn": "k"}), encoding="utf-8")
    assert utils.load_settings(str(path)) == {"x": 1.5, "fn": "k"}


def test_typed_string_values_are_parsed(tmp_path: pathlib.Path) -> None:
    path = tmp_path / "typed.json"
    data = {
        "x": {"value": "2.5", "type": "float"},
        "flag": {"value": "True", "type": "bool"},
        "name": {"value": "abc", "type": "str"},
    }
    path.write_text(json.dumps(data), encoding="utf-8")
    assert utils.load_settings(str(path)) == {"x": 2.5, "flag": True, "name": "abc"}


@pytest.mark.parametrize(
    "content", ["not json", "[1, 2]", json.dumps({"x": {"value": 1, "kind": "int"}})]
)
def test_bad_settings_files(tmp_path: pathlib.Path, content: str) -> None:
    path = tmp_path / "bad.json"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(errors.ConfigError):
        utils.load_settings(str(path))
