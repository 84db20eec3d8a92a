"""CSV and JSON writers for experiment rows, profiles and elasticity curves.

A CSV file starts with ``#``-prefixed ``key: value`` metadata lines followed
by a header row.  The JSON mirror holds the same data as
``{"metadata": ..., "columns": [...], "rows": [[...], ...]}``.
"""

from __future__ import annotations

import dataclasses
import io
import json
import math
from pathlib import Path

from . import __version__

SCHEMA_VERSION = 1

COLUMNS = {
    "experiment": ("q_hat", "kappa_hat", "data_error", "abs_error", "rel_error", "admissible"),
    "profile": ("x", "u"),
    "elasticity": ("q", "E"),
}


def fmt(value, precision=6):
    """Format a number with ``precision`` significant digits; other values pass through."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, float)):
        if math.isnan(value):
            return "nan"
        return format(float(value), f".{precision}g")
    return value


def round_sig(value, precision=6):
    """Numeric counterpart of :func:`fmt` for JSON payloads."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            return None
        return float(format(value, f".{precision}g"))
    if isinstance(value, dict):
        return {k: round_sig(v, precision) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_sig(v, precision) for v in value]
    return value


def run_metadata(kind, config=None, **extra):
    meta = {
        "tool": "thermoprobe",
        "version": __version__,
        "schema": f"{kind}/{SCHEMA_VERSION}",
        "columns": ",".join(COLUMNS[kind]),
    }
    if config is not None:
        for k, v in dataclasses.asdict(config).items():
            meta[f"config.{k}"] = v
    meta.update(extra)
    return meta


def _cell(v, precision):
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(fmt(v, precision))


def render_csv(kind, rows, metadata, precision=6) -> str:
    buf = io.StringIO()
    for k, v in metadata.items():
        buf.write(f"# {k}: {v}\n")
    buf.write(",".join(COLUMNS[kind]) + "\n")
    for row in rows:
        buf.write(",".join(_cell(v, precision) for v in row) + "\n")
    return buf.getvalue()


def write_table(path, kind, rows, metadata, precision=6, json_mirror=True):
    """Write ``rows`` as CSV to ``path`` and, optionally, JSON next to it."""
    path = Path(path)
    rows = [tuple(r) for r in rows]
    path.write_text(render_csv(kind, rows, metadata, precision), encoding="utf-8")
    if json_mirror:
        payload = {
            "metadata": metadata,
            "columns": list(COLUMNS[kind]),
            "rows": [round_sig(list(r), precision) for r in rows],
        }
        path.with_suffix(".json").write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    return path


def read_csv(path):
    """Read a file produced by :func:`write_table`; returns (metadata, columns, rows)."""
    meta = {}
    columns = None
    rows = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition(":")
            meta[key.strip()] = value.strip()
        elif columns is None:
            columns = line.split(",")
        elif line:
            rows.append([_parse(v) for v in line.split(",")])
    return meta, columns, rows


def _parse(v):
    if v in ("true", "false"):
        return v == "true"
    return float(v)
