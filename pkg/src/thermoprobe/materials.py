"""Reference conductivities and user material files.

Material files are UTF-8 CSV with a header row.  Recognised columns are
``symbol``, ``name`` and ``kappa``; ``name`` may be omitted, in which case
the symbol doubles as the name::

    symbol,name,kappa
    Au,Gold,317
"""

from __future__ import annotations

import csv
import math
import os
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

from .errors import MaterialFileError, MaterialNotFoundError

MATERIALS_ENV_VAR = "THERMOPROBE_MATERIALS"


@dataclass(frozen=True)
class Material:
    name: str
    symbol: str
    kappa: float

    def __post_init__(self):
        if not self.symbol or not self.symbol.strip():
            raise ValueError("material symbol must be non-empty")
        if not (self.kappa > 0.0 and math.isfinite(self.kappa)):
            raise ValueError(f"kappa of {self.symbol!r} must be positive, got {self.kappa!r}")


# W m^-1 C^-1, room-temperature averages
_BUILTIN = (
    Material("Aluminium", "Al", 204.0),
    Material("Copper", "Cu", 386.0),
    Material("Iron", "Fe", 73.0),
    Material("Silver", "Ag", 419.0),
    Material("Lead", "Pb", 35.0),
)


def builtin_database() -> tuple[Material, ...]:
    return _BUILTIN


def lookup(symbol: str, materials: Optional[Iterable[Material]] = None) -> Material:
    """Find a material by symbol (case-sensitive, like chemical symbols).

    Later entries win, so a merged list returned by :func:`load_materials`
    resolves shadowed symbols to the user definition.
    """
    found = None
    for m in (_BUILTIN if materials is None else materials):
        if m.symbol == symbol:
            found = m
    if found is None:
        raise MaterialNotFoundError(f"unknown material symbol {symbol!r}")
    return found


def merge(*sources: Iterable[Material]) -> list[Material]:
    """Concatenate material lists; a repeated symbol replaces the earlier entry."""
    merged: dict[str, Material] = {}
    for source in sources:
        for m in source:
            if m.symbol in merged:
                warnings.warn(
                    f"material {m.symbol!r} redefined: kappa {merged[m.symbol].kappa} -> {m.kappa}",
                    stacklevel=2)
                del merged[m.symbol]
            merged[m.symbol] = m
    return list(merged.values())


def read_material_file(path) -> list[Material]:
    """Parse a materials CSV without merging it into the built-ins."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise MaterialFileError(f"cannot read file: {exc}", path=path) from exc

    lines = text.splitlines()
    reader = csv.reader(lines)
    try:
        header = [c.strip().lower() for c in next(reader)]
    except StopIteration:
        raise MaterialFileError("file is empty", path=path, line=1) from None
    for required in ("symbol", "kappa"):
        if required not in header:
            raise MaterialFileError(f"header lacks a {required!r} column", path=path, line=1)
    col = {name: header.index(name) for name in header}

    out = []
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not c.strip() for c in row) or row[0].lstrip().startswith("#"):
            continue
        if len(row) != len(header):
            raise MaterialFileError(
                f"expected {len(header)} fields, found {len(row)}", path=path, line=lineno)
        symbol = row[col["symbol"]].strip()
        if not symbol:
            raise MaterialFileError("empty symbol", path=path, line=lineno, field="symbol")
        raw = row[col["kappa"]].strip()
        try:
            kappa = float(raw)
        except ValueError:
            raise MaterialFileError(
                f"kappa {raw!r} of {symbol!r} is not a number",
                path=path, line=lineno, field="kappa") from None
        if not (kappa > 0.0 and math.isfinite(kappa)):
            raise MaterialFileError(
                f"kappa of {symbol!r} must be positive, got {raw}",
                path=path, line=lineno, field="kappa")
        name = row[col["name"]].strip() if "name" in col else ""
        out.append(Material(name=name or symbol, symbol=symbol, kappa=kappa))
    return out


def load_materials(path=None) -> list[Material]:
    """Built-in materials with a user file merged on top.

    When ``path`` is None the file named by ``$THERMOPROBE_MATERIALS`` is
    used, if set; otherwise only the built-ins are returned.
    """
    if path is None:
        path = os.environ.get(MATERIALS_ENV_VAR) or None
    if path is None:
        return list(_BUILTIN)
    return merge(_BUILTIN, read_material_file(path))
