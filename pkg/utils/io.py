"""File output helpers."""

import csv
import os
import tempfile
from pathlib import Path
from typing import Iterable, Sequence


def format_number(value: object) -> str:
    """
    Format a value for CSV output.

    Floats use repr, the shortest string that round-trips, so output files are
    identical across runs and platforms. None becomes an empty field.
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _creation_mode() -> int:
    """Mode a plain open() would give a new file under the current umask."""
    umask = os.umask(0)
    os.umask(umask)
    return 0o666 & ~umask


def write_csv(
    path: str | Path,
    header: Sequence[str],
    rows: Iterable[Sequence[object]],
) -> Path:
    """
    Write a CSV file atomically.

    The rows go to a temporary file in the target directory, which then
    replaces the target, so readers never observe a partial file.

    Args:
        path: Destination file
        header: Column names
        rows: Row values, formatted with format_number

    Returns:
        The destination path
    """
    target = Path(path)
    directory = target.parent if str(target.parent) else Path(".")
    directory.mkdir(parents=True, exist_ok=True)

    fd, tmp_name = tempfile.mkstemp(
        prefix=f".{target.name}.", suffix=".tmp", dir=directory
    )
    try:
        with os.fdopen(fd, "w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow([format_number(value) for value in row])
        # mkstemp creates 0600
        os.chmod(tmp_name, _creation_mode())
        os.replace(tmp_name, target)
    except BaseException:
        Path(tmp_name).unlink(missing_ok=True)
        raise
    return target
