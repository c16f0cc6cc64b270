"""File formats: JSON matrix and record files, CSV tables.

MatrixFile:  {"dim": N, "re": [[..N x N..]], "im": [[..N x N..]]}
RecordFile:  {"dim": N, "entries": [{"basis": "ddot0" | 0..N-1, "probs": [..N..]}, ...]}

Floats are serialized with shortest round-trip decimals (Python's repr), so
output is byte-stable and parses back exactly.
"""

from __future__ import annotations

import json
import sys
from typing import IO, Iterable

import numpy as np

from .errors import DimensionMismatchError, FileFormatError
from .mub import all_basis_labels, parse_basis_label
from .tomography import MeasurementRecord

RECORD_SUM_TOL = 1e-6


def _open_in(path: str):
    if path == "-":
        return sys.stdin
    return open(path, "r", encoding="utf-8")


def _load_json(path: str) -> dict:
    fp = _open_in(path)
    try:
        data = json.load(fp)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: not valid JSON ({exc})") from exc
    finally:
        if fp is not sys.stdin:
            fp.close()
    if not isinstance(data, dict):
        raise FileFormatError(f"{path}: expected a JSON object at top level")
    return data


def _real_grid(data: dict, key: str, dim: int, path: str) -> np.ndarray:
    try:
        arr = np.asarray(data[key], dtype=float)
    except KeyError:
        raise FileFormatError(f"{path}: missing key {key!r}") from None
    except (TypeError, ValueError) as exc:
        raise FileFormatError(f"{path}: key {key!r} is not a numeric grid") from exc
    if arr.shape != (dim, dim):
        raise FileFormatError(
            f"{path}: key {key!r} has shape {arr.shape}, expected ({dim}, {dim})"
        )
    return arr


def read_matrix(path: str) -> np.ndarray:
    """Parse a MatrixFile into a complex matrix."""
    data = _load_json(path)
    dim = data.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise FileFormatError(f"{path}: 'dim' must be a positive integer")
    re = _real_grid(data, "re", dim, path)
    im = _real_grid(data, "im", dim, path)
    return re + 1j * im


def matrix_payload(matrix: np.ndarray) -> dict:
    m = np.asarray(matrix, dtype=complex)
    return {
        "dim": m.shape[0],
        "re": m.real.tolist(),
        "im": m.imag.tolist(),
    }


def write_matrix(fp: IO[str], matrix: np.ndarray, extra: dict | None = None) -> None:
    payload = matrix_payload(matrix)
    if extra:
        payload.update(extra)
    json.dump(payload, fp, indent=2, sort_keys=True)
    fp.write("\n")


def read_record(path: str) -> MeasurementRecord:
    """Parse a RecordFile into a MeasurementRecord."""
    data = _load_json(path)
    dim = data.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise FileFormatError(f"{path}: 'dim' must be a positive integer")
    entries = data.get("entries")
    if not isinstance(entries, list):
        raise FileFormatError(f"{path}: 'entries' must be a list")
    probs = {}
    for entry in entries:
        if not isinstance(entry, dict) or "basis" not in entry or "probs" not in entry:
            raise FileFormatError(f"{path}: each entry needs 'basis' and 'probs'")
        try:
            label = parse_basis_label(str(entry["basis"]), dim)
        except ValueError as exc:
            raise FileFormatError(f"{path}: {exc}") from exc
        try:
            vec = np.asarray(entry["probs"], dtype=float)
        except (TypeError, ValueError) as exc:
            raise FileFormatError(f"{path}: 'probs' is not numeric") from exc
        if vec.shape != (dim,):
            raise FileFormatError(
                f"{path}: probs for basis {label.text} has length {vec.size}, expected {dim}"
            )
        if vec.min() < -RECORD_SUM_TOL:
            raise FileFormatError(f"{path}: probs for basis {label.text} has negative entries")
        if abs(vec.sum() - 1) > RECORD_SUM_TOL:
            raise FileFormatError(
                f"{path}: probs for basis {label.text} sums to {vec.sum()!r}, expected 1"
            )
        if label in probs:
            raise FileFormatError(f"{path}: duplicate basis {label.text}")
        vec.setflags(write=False)
        probs[label] = vec
    if len(probs) != dim + 1:
        raise FileFormatError(
            f"{path}: expected {dim + 1} entries, one per basis, got {len(probs)}"
        )
    try:
        return MeasurementRecord(dim=dim, probs=probs)
    except ValueError as exc:
        raise FileFormatError(f"{path}: {exc}") from exc


def write_record(fp: IO[str], rec: MeasurementRecord) -> None:
    entries = []
    for basis in all_basis_labels(rec.dim):
        basis_field = basis.text if basis.is_reference else basis.slope.value
        entries.append(
            {"basis": basis_field, "probs": rec.probs[basis].tolist()}
        )
    payload: dict = {"dim": rec.dim, "entries": entries}
    if rec.sample_count is not None:
        payload["sample_count"] = rec.sample_count
    json.dump(payload, fp, indent=2, sort_keys=True)
    fp.write("\n")


def format_float(x: float) -> str:
    """Shortest decimal that round-trips."""
    return repr(float(x))


def write_csv(fp: IO[str], header: Iterable[str], rows: Iterable[Iterable]) -> None:
    fp.write(",".join(header) + "\n")
    for row in rows:
        cells = [format_float(cell) if isinstance(cell, float) else str(cell) for cell in row]
        fp.write(",".join(cells) + "\n")


def check_matrix_dim(matrix: np.ndarray, dim: int) -> np.ndarray:
    if matrix.shape != (dim, dim):
        raise DimensionMismatchError(
            f"state file holds a {matrix.shape[0]}x{matrix.shape[1]} matrix, expected {dim}x{dim}"
        )
    return matrix
