"""Matrix file parsing shared by the library and the CLI.

Two formats: CSV (one row per line, comma-separated decimal literals,
dot decimal separator) and JSON ({"n": int, "rows": [[...], ...]}).
Both reject non-square data.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .errors import MatrixFormatError


def detect_format(path: str) -> str:
    if Path(path).suffix.lower() == ".json":
        return "json"
    return "csv"


def load_matrix(path: str, fmt: str = "auto") -> np.ndarray:
    """Read a square matrix of floats from ``path``; MatrixFormatError on bad data."""
    if fmt == "auto":
        fmt = detect_format(path)
    if fmt == "json":
        rows = _read_json(path)
    elif fmt == "csv":
        rows = _read_csv(path)
    else:
        raise MatrixFormatError(f"unknown format {fmt!r}")
    try:
        a = np.array(rows, dtype=float)
    except (ValueError, TypeError) as exc:
        raise MatrixFormatError(f"{path}: non-numeric or ragged rows") from exc
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.size == 0:
        raise MatrixFormatError(f"{path}: expected square data, got shape {a.shape}")
    return a


def _read_csv(path: str) -> list[list[float]]:
    rows = []
    with open(path, newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or all(not cell.strip() for cell in row):
                continue
            try:
                rows.append([float(cell) for cell in row])
            except ValueError as exc:
                raise MatrixFormatError(f"{path}:{lineno}: {exc}") from exc
    if not rows:
        raise MatrixFormatError(f"{path}: empty matrix")
    return rows


def _read_json(path: str) -> list[list[float]]:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MatrixFormatError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(doc, dict) or "rows" not in doc:
        raise MatrixFormatError(f'{path}: expected an object with "n" and "rows"')
    rows = doc["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise MatrixFormatError(f'{path}: "rows" must be a list of lists')
    if "n" in doc and (not isinstance(doc["n"], int) or doc["n"] != len(rows)):
        raise MatrixFormatError(f'{path}: "n" does not match the number of rows')
    return rows


def save_matrix_json(path: str, a: np.ndarray) -> None:
    doc = {"n": int(a.shape[0]), "rows": [[float(x) for x in row] for row in a]}
    with open(path, "w") as fh:
        json.dump(doc, fh)
        fh.write("\n")
