"""Exact series serialization and the advisory result cache.

Rationals are persisted as decimal integer-pair strings ("p" or "p/q"),
never as floats, so every round trip is bit-exact.  The cache maps a
canonical key hash to a JSON payload and may be deleted at any time.
"""

from __future__ import annotations

import hashlib
import io
import json
from pathlib import Path

from .series import Q, Series


def fraction_str(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def export_series(series: Series, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(
            {"order": series.order, "coeffs": [fraction_str(c) for c in series.coeffs]}
        )
    if fmt == "csv":
        buf = io.StringIO()
        buf.write("n,numerator,denominator\n")
        for n, c in enumerate(series.coeffs):
            buf.write(f"{n},{c.numerator},{c.denominator}\n")
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")


def import_series(text: str, fmt: str = "json") -> Series:
    if fmt == "json":
        data = json.loads(text)
        return Series([Q(c) for c in data["coeffs"]], data["order"])
    if fmt == "csv":
        rows = text.strip().splitlines()
        coeffs = []
        for row in rows[1:]:
            _, num, den = row.split(",")
            coeffs.append(Q(int(num), int(den)))
        return Series(coeffs)
    raise ValueError(f"unknown format {fmt!r}")


def cache_key(*parts) -> str:
    canonical = json.dumps([str(p) for p in parts])
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class SeriesCache:
    """File-backed advisory cache; a miss returns None, never an error."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def put(self, key: str, series: Series) -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self._path(key)
        path.write_text(export_series(series, "json"))
        return path

    def get(self, key: str) -> Series | None:
        path = self._path(key)
        if not path.exists():
            return None
        try:
            return import_series(path.read_text(), "json")
        except (json.JSONDecodeError, KeyError, ValueError):
            return None
