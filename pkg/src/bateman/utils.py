"""
File helpers: number formatting, CSV and JSON output, and persisted settings.
"""

from __future__ import annotations

import csv
import json
import logging
import math
import os
from ast import literal_eval
from collections.abc import Iterable, Mapping, Sequence
from typing import IO, Any

from bateman import errors
from bateman.constants import get_config_dir

logger = logging.getLogger(__name__)

# Largest number of significant digits written to CSV files
CSV_DIGITS = 15

Setting = bool | str | float | int | list[float] | None


def format_number(value: float | None) -> str:
    """Shortest representation of `value` that reads back exactly, capped at 15 digits.

    None and non-finite values are written as an empty cell.

    >>> format_number(0.1 + 0.2)
    '0.3'
    >>> format_number(0.0)
    '0'
    """
    if value is None or not math.isfinite(value):
        return ""
    for digits in range(1, CSV_DIGITS):
        text = f"{value:.{digits}g}"
        if float(text) == value:
            return text
    return f"{value:.{CSV_DIGITS}g}"


def write_csv_stream(
    stream: IO[str], header: Sequence[str], rows: Iterable[Sequence[Any]]
) -> int:
    """Writes comma-separated rows with LF line endings; floats go through `format_number`.

    Returns:
        The number of data rows written.
    """
    count = 0
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_number(cell) if isinstance(cell, float) else cell for cell in row])
        count += 1
    return count


def write_csv(
    path: str | os.PathLike[str], header: Sequence[str], rows: Iterable[Sequence[Any]]
) -> int:
    """Writes a CSV file, see `write_csv_stream`."""
    with open(path, "w", newline="", encoding="utf-8") as f:
        count = write_csv_stream(f, header, rows)
    logger.info("Wrote %d rows to %s", count, path)
    return count


def dump_json(data: Any) -> str:
    """UTF-8 JSON text with a stable layout and a trailing newline."""
    return json.dumps(data, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def write_json(path: str | os.PathLike[str], data: Any) -> None:
    with open(path, "w", newline="\n", encoding="utf-8") as f:
        f.write(dump_json(data))
    logger.info("Wrote %s", path)


def settings_path(name: str) -> str:
    return os.path.join(get_config_dir(), f"{name}_settings.json")


def save_settings(settings: Mapping[str, Setting], name: str) -> str:
    """Saves a flat mapping of settings to `CONFIG_DIR/<name>_settings.json`.

    Each setting is stored with the name of its type, so that it can be converted back.

    Returns:
        The path written.
    """
    config = {
        key: {"value": value, "type": type(value).__name__} for key, value in settings.items()
    }
    path = settings_path(name)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(config, f, indent="\t")
    logger.info("Saved settings %r to %s", name, path)
    return path


def _convert(info: Any) -> Setting:
    # Plain values are taken as they are; typed entries are {"value": ..., "type": ...}
    parsed: Setting
    if not isinstance(info, dict):
        parsed = info
        return parsed
    if set(info) != {"value", "type"}:
        raise errors.ConfigError(f"Malformed setting entry {info!r}")

    value, type_ = info["value"], info["type"]
    if not isinstance(value, str):
        return float(value) if type_ == "float" and isinstance(value, int) else value
    match type_:
        case "str" | "string":
            return value
        case "bool" | "int" | "float":
            parsed = literal_eval(value)
        case _:
            try:
                parsed = literal_eval(value)
            except (ValueError, SyntaxError):
                parsed = value
    return parsed


def load_settings(ref: str) -> dict[str, Setting]:
    """Loads settings by name from `CONFIG_DIR`, or from a JSON file path.

    A reference without a path separator and without a ".json" suffix is a settings name
    saved by `save_settings`. A path names a JSON object whose values are either plain or
    typed as written by `save_settings`.

    Raises:
        ConfigError if the file is not a JSON object or an entry is malformed.
        OSError if the file cannot be read.
    """
    is_name = os.sep not in ref and "/" not in ref and not ref.endswith(".json")
    path = settings_path(ref) if is_name else ref

    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise errors.ConfigError(f"{path} is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise errors.ConfigError(f"{path} must hold a JSON object, got {type(data).__name__}")

    logger.debug("Loaded settings from %s", path)
    return {str(key): _convert(info) for key, info in data.items()}
