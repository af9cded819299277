"""JSON matrix files.

Format::

    {"kind": "real" | "hermitian", "n": <int>,
     "entries": [[[re, im], ...], ...]}

Entries are row-major pairs.  Writers print every number with 17
significant digits, enough to round-trip an IEEE double exactly.
"""

from __future__ import annotations

import json

import numpy as np

from .matcore import Kind, SquareMatrix, TraceNormError, make_matrix

__all__ = ["ParseError", "dumps", "loads", "read_matrix", "write_matrix"]


class ParseError(TraceNormError):
    pass


def _num(x: float) -> str:
    return format(float(x), ".17g")


def dumps(A: SquareMatrix) -> str:
    rows = []
    for row in A.entries:
        pairs = ", ".join(f"[{_num(z.real)}, {_num(z.imag)}]" for z in row)
        rows.append(f"    [{pairs}]")
    body = ",\n".join(rows)
    return f'{{"kind": "{A.kind.value}", "n": {A.n}, "entries": [\n{body}\n]}}\n'


def loads(text: str) -> SquareMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict) or not {"kind", "n", "entries"} <= obj.keys():
        raise ParseError("expected an object with keys 'kind', 'n', 'entries'")
    try:
        kind = Kind(obj["kind"])
    except ValueError:
        raise ParseError(f"unknown kind {obj['kind']!r}") from None
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError("'n' must be a positive integer")
    try:
        raw = np.array(obj["entries"], dtype=float)
    except (TypeError, ValueError):
        raise ParseError("entries must be an n x n grid of [re, im] pairs") from None
    if raw.shape != (n, n, 2):
        raise ParseError(f"entries have shape {raw.shape}, expected ({n}, {n}, 2)")
    if kind is Kind.REAL and np.any(raw[..., 1] != 0):
        raise ParseError("real matrices must have zero imaginary parts")
    return make_matrix(kind, raw[..., 0] + 1j * raw[..., 1])


def read_matrix(path) -> SquareMatrix:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write_matrix(A: SquareMatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(A))
