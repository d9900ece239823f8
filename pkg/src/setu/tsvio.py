"""Shared reader for the tab-separated resource files."""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import DataError
from .script import normalize


def read_rows(stream: Iterable[str], ncols: int, name=None) -> Iterator[tuple[int, list[str]]]:
    """Yield ``(lineno, fields)`` for each data line of ``stream``.

    Blank lines and lines starting with ``#`` are skipped. Fields are NFC
    normalized; only the line terminator is stripped.
    """
    if name is None:
        name = getattr(stream, "name", None)
    for lineno, line in enumerate(stream, 1):
        line = line.rstrip("\r\n")
        if lineno == 1:
            line = line.lstrip("\ufeff")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != ncols:
            raise DataError(
                f"expected {ncols} tab-separated fields, got {len(fields)}",
                lineno, name,
            )
        yield lineno, [normalize(f) for f in fields]
