"""File formats for matrices and judgments.

JSON envelope: {"n", "group", "mode", "labels", "entries"} with entries as
numbers or "a+bi" strings; additive matrices use the same envelope with
"domain": "additive" (and no group/mode). CSV holds plain positive decimals
and is accepted for strict matrices only. Parsing and serialization
round-trip decimal inputs of up to 15 significant digits bit-exactly.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from .additive import AdditiveMatrix
from .errors import ParseError
from .groups import POSITIVE_REALS, group_by_name
from .matrix import Judgment, Mode, PcMatrix
from .scalars import parse_scalar, scalar_to_json


def _parse_entries(raw: Any, what: str) -> list[list[complex]]:
    if not isinstance(raw, list) or not raw or not all(isinstance(r, list) for r in raw):
        raise ParseError(f"{what}: 'entries' must be a non-empty list of rows")
    try:
        return [[parse_scalar(x) for x in row] for row in raw]
    except ParseError:
        raise
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{what}: bad entry ({exc})") from exc


def _parse_labels(raw: Any) -> tuple[str, ...] | None:
    if raw is None:
        return None
    if not isinstance(raw, list) or not all(isinstance(x, str) for x in raw):
        raise ParseError("'labels' must be a list of strings")
    return tuple(raw)


def matrix_from_json(doc: dict | str) -> PcMatrix | AdditiveMatrix:
    """Parse the JSON envelope; dispatches on the optional "domain" field."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("matrix document must be a JSON object")

    domain = doc.get("domain", "multiplicative")
    entries = _parse_entries(doc.get("entries"), "matrix")
    labels = _parse_labels(doc.get("labels"))
    n = doc.get("n", len(entries))
    if n != len(entries):
        raise ParseError(f"'n' = {n} but entries have {len(entries)} rows")

    if domain == "additive":
        return AdditiveMatrix.from_entries(entries, labels=labels, source=doc.get("source"))
    if domain != "multiplicative":
        raise ParseError(f"unknown domain {domain!r}")

    mode_raw = doc.get("mode", "strict")
    try:
        mode = Mode(mode_raw)
    except ValueError as exc:
        raise ParseError(f"unknown mode {mode_raw!r}") from exc
    group = group_by_name(doc.get("group", "PositiveReals"))
    return PcMatrix.from_entries(entries, group, mode, labels=labels)


def matrix_to_json(m: PcMatrix | AdditiveMatrix) -> dict:
    doc: dict[str, Any] = {"n": m.n}
    if isinstance(m, AdditiveMatrix):
        doc["domain"] = "additive"
        if m.source is not None:
            doc["source"] = m.source
    else:
        doc["group"] = m.group.name
        doc["mode"] = m.mode.value
    doc["labels"] = list(m.labels) if m.labels is not None else None
    doc["entries"] = [[scalar_to_json(complex(x)) for x in row] for row in m.entries]
    return doc


def matrix_from_csv(text: str) -> PcMatrix:
    """Strict-mode CSV: square grid of plain positive decimals, no header."""
    rows: list[list[complex]] = []
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        cells = [c.strip() for c in row if c.strip() != ""]
        if not cells:
            continue
        try:
            rows.append([complex(float(c), 0.0) for c in cells])
        except ValueError as exc:
            raise ParseError(f"CSV line {lineno}: {exc}") from exc
    if not rows:
        raise ParseError("CSV file holds no rows")
    width = len(rows[0])
    if any(len(r) != width for r in rows) or width != len(rows):
        raise ParseError("CSV grid is not square")
    return PcMatrix.from_entries(rows, POSITIVE_REALS, Mode.STRICT)


def load_matrix(path: str | Path) -> PcMatrix | AdditiveMatrix:
    """Read a matrix file, dispatching on extension (.json or .csv)."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    if path.suffix.lower() == ".csv":
        return matrix_from_csv(text)
    return matrix_from_json(text)


def judgments_from_json(doc: Any) -> list[Judgment]:
    """Parse a JSON list of {"i", "j", "value"} records."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, list):
        raise ParseError("judgment document must be a JSON list")
    out: list[Judgment] = []
    for idx, rec in enumerate(doc):
        if not isinstance(rec, dict) or not {"i", "j", "value"} <= set(rec):
            raise ParseError(f"judgment {idx}: need keys i, j, value")
        i, j = rec["i"], rec["j"]
        if not isinstance(i, int) or not isinstance(j, int) or isinstance(i, bool) or isinstance(j, bool):
            raise ParseError(f"judgment {idx}: indices must be integers")
        out.append(Judgment(i=i, j=j, value=parse_scalar(rec["value"])))
    return out


def judgments_to_json(judgments: Sequence[Judgment]) -> list[dict]:
    return [
        {"i": j.i, "j": j.j, "value": scalar_to_json(complex(j.value))}
        for j in judgments
    ]
