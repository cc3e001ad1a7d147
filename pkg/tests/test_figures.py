import csv
import os
import pathlib

import pytest

from bateman import errors
from bateman.bateman_core import FunctionId
from bateman.figures import (
    FIGURES,
    Axis,
    FigureSpec,
    check_reflection,
    figure_rows,
    grid_points,
    write_figures,
)
from bateman.quadrature import QuadConfig


def test_grid_points_hit_zero_exactly() -> None:
    points = grid_points(-5.0, 10.0, 0.05)
    assert len(points) == 301
    assert points[0] == -5.0 and points[-1] == 10.0
    assert 0.0 in points
    assert 2.35 in points and -2.35 in points


def test_grid_points_reject_bad_ranges() -> None:
    with pytest.raises(errors.ConfigError):
        grid_points(1.0, 0.0, 0.1)
    with pytest.raises(errors.ConfigError):
        grid_points(0.0, 1.0, 0.0)


def test_figure_catalog() -> None:
    assert [spec.name for spec in FIGURES] == [f"fig{i:02d}" for i in range(1, 13)]
    assert all(spec.axis is Axis.NU for spec in FIGURES if spec.derivative)
    assert FIGURES[1].curves[0] == 0.0
    assert FIGURES[8].header == ("x", "nu", "value")


def test_figure_rows_are_curve_major(cfg: QuadConfig) -> None:
    spec = FigureSpec("test", "k of order 0 and 2", FunctionId.BATEMAN_K, (0.0, 2.0))
    rows = figure_rows(spec, cfg)
    assert len(rows) == 2 * 301
    assert rows[0][:2] == (0.0, -5.0)
    assert rows[301][:2] == (2.0, -5.0)
    assert all(value is not None for _, _, value in rows)


def test_check_reflection() -> None:
    positive = [(1.0, -1.0, 2.0), (1.0, 1.0, 3.0)]
    assert check_reflection(positive, [(-1.0, 1.0, -2.0), (-1.0, -1.0, -3.0)], -1.0) == []
    assert check_reflection(positive, [(-1.0, 1.0, 2.5)], 1.0) == [(-1.0, 1.0)]
    # points without a mirror image are skipped
    assert check_reflection(positive, [(-2.0, 1.0, 0.0)], 1.0) == []


def test_write_bateman_figures(output_dir: pathlib.Path, cfg: QuadConfig) -> None:
    written = write_figures(output_dir, cfg, names=["fig01", "fig02"])
    assert set(written) == {"fig01", "fig02"}
    with open(os.path.join(output_dir, "fig01.csv"), encoding="utf-8") as f:
        rows = list(csv.reader(f))
    assert rows[0] == ["nu", "x", "value"]
    assert len(rows) == 1 + 7 * 301
    # k_0(0) = 1
    assert ["0", "0", "1"] in rows


def test_write_figures_rejects_unknown_names(output_dir: pathlib.Path) -> None:
    target = output_dir / "figures"
    with pytest.raises(errors.UnknownIdError):
        write_figures(target, names=["fig13"])
    assert not target.exists()


@pytest.mark.slow
def test_write_all_figures(output_dir: pathlib.Path, cfg: QuadConfig) -> None:
    written = write_figures(output_dir, cfg, parallelism=4)
    assert sorted(os.listdir(output_dir)) == [f"fig{i:02d}.csv" for i in range(1, 13)]
    assert len(written["fig09"]) == 3 * 201
