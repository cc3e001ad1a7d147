import pathlib

import pytest

from bateman import constants
from bateman.quadrature import DEFAULT_CONFIG, QuadConfig


@pytest.fixture
def cfg() -> QuadConfig:
    return DEFAULT_CONFIG


@pytest.fixture
def output_dir(tmp_path: pathlib.Path) -> pathlib.Path:
    path = tmp_path / "out"
    path.mkdir()
    return path


@pytest.fixture
def user_dirs(tmp_path: pathlib.Path, monkeypatch: pytest.MonkeyPatch) -> pathlib.Path:
    """Points the config and log directories at a temporary folder."""
    monkeypatch.setattr(constants, "CONFIG_DIR", str(tmp_path / "config"))
    monkeypatch.setattr(constants, "LOG_DIR", str(tmp_path / "log"))
    return tmp_path
