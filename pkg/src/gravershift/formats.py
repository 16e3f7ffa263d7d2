"""Serialization: 4ti2-style matrices, JSON documents, CSV tables.

Every writer is byte-deterministic for identical inputs; the 4ti2 matrix
format round-trips exactly.
"""

from __future__ import annotations

import json

from .analysis import CountTable, CSV_HEADER
from .core import InvalidInputError, SemigroupInstance, Trade, TradeSet


def format_4ti2(trades: TradeSet) -> str:
    """Header "N 3", then one trade per line, space-separated, trailing newline.

    Rows keep the TradeSet order (ascending lexicographic on (v2, v1, v0)).
    """
    lines = [f"{len(trades)} 3"]
    lines.extend(f"{v[0]} {v[1]} {v[2]}" for v in trades)
    return "\n".join(lines) + "\n"


def parse_4ti2(text: str) -> list[Trade]:
    """Inverse of format_4ti2; validates the header against the row count."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise InvalidInputError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2 or header[1] != "3":
        raise InvalidInputError(f"expected header 'N 3', got {lines[0]!r}")
    n = int(header[0])
    rows = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise InvalidInputError(f"expected 3 integers per row, got {line!r}")
        rows.append((int(parts[0]), int(parts[1]), int(parts[2])))
    if len(rows) != n:
        raise InvalidInputError(f"header says {n} rows, found {len(rows)}")
    return rows


def format_trades_csv(trades: TradeSet) -> str:
    lines = ["v0,v1,v2"]
    lines.extend(f"{v[0]},{v[1]},{v[2]}" for v in trades)
    return "\n".join(lines) + "\n"


def instance_document(inst: SemigroupInstance, method: str) -> dict:
    """Common JSON envelope: parameters, period, thresholds, method used."""
    consts = inst.family.constants()
    return {
        "generators": list(inst.generators),
        "t": inst.t,
        "a": inst.family.a,
        "b": inst.family.b,
        "d": inst.family.d,
        "rho": consts.rho,
        "bounds": {
            "plus": consts.b_plus,
            "plusMinus": consts.b_plus_minus,
            "minus": consts.b_minus,
            "max": consts.b_max,
        },
        "method": method,
    }


def trades_document(inst: SemigroupInstance, method: str, trades: TradeSet, **extra) -> dict:
    doc = instance_document(inst, method)
    doc.update(extra)
    doc["trades"] = [list(v) for v in trades]
    doc["count"] = len(trades)
    return doc


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def format_count_csv(table: CountTable) -> str:
    lines = [CSV_HEADER]
    lines.extend(row.csv() for row in table.rows)
    return "\n".join(lines) + "\n"
