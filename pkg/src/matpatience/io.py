"""Text formats: rationals as "p/q" strings, matrices as JSON or CSV.

Matrix JSON is ``{"rows": r, "cols": c, "entries": [["p/q", ...], ...]}``;
a bare array of arrays is accepted on input.  Output uses sorted keys and
LF line endings so identical inputs give identical bytes.
"""

import csv
import io
import json
from fractions import Fraction

import numpy as np

__all__ = [
    "FormatError",
    "format_rational",
    "parse_rational",
    "matrix_to_json",
    "matrix_from_json",
    "matrix_to_csv",
    "matrix_from_csv",
    "vector_to_json",
    "solution_to_json",
    "kernel_to_json",
    "cut_to_json",
    "cut_from_json",
    "dumps",
    "load_matrix",
]


class FormatError(ValueError):
    """Malformed input; ``field`` names the offending part."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(value, field="value"):
    if isinstance(value, bool) or isinstance(value, float):
        raise FormatError(field, f"expected an integer or 'p/q' string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise FormatError(field, f"decimal notation is not exact: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise FormatError(field, f"not a rational: {value!r}") from None
    raise FormatError(field, f"expected an integer or 'p/q' string, got {type(value).__name__}")


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _rows(M):
    return [[format_rational(v) for v in row] for row in np.asarray(M)]


def matrix_to_json(M):
    M = np.asarray(M)
    return {"rows": int(M.shape[0]), "cols": int(M.shape[1]), "entries": _rows(M)}


def matrix_from_json(obj):
    if isinstance(obj, dict):
        for key in ("rows", "cols", "entries"):
            if key not in obj:
                raise FormatError(key, "missing")
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
        if not isinstance(rows, int) or not isinstance(cols, int) or rows < 0 or cols < 0:
            raise FormatError("rows/cols", "must be nonnegative integers")
    elif isinstance(obj, list):
        entries = obj
        rows = len(entries)
        cols = len(entries[0]) if entries and isinstance(entries[0], list) else 0
    else:
        raise FormatError("matrix", "expected an object or an array of arrays")
    if not isinstance(entries, list) or len(entries) != rows:
        raise FormatError("entries", f"expected {rows} rows")
    if rows == 0 or cols == 0:
        raise FormatError("entries", "matrix is empty")
    M = np.empty((rows, cols), dtype=object)
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise FormatError(f"entries[{i}]", f"expected {cols} entries")
        for j, v in enumerate(row):
            M[i, j] = parse_rational(v, f"entries[{i}][{j}]")
    return M


def matrix_to_csv(M):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(_rows(M))
    return buf.getvalue()


def matrix_from_csv(text):
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if not rows:
        raise FormatError("csv", "matrix is empty")
    return matrix_from_json(rows)


def load_matrix(path):
    """Read a matrix from a ``.csv`` file or a JSON file."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if str(path).lower().endswith(".csv"):
        return matrix_from_csv(text)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("json", str(exc)) from None
    return matrix_from_json(obj)


def vector_to_json(v):
    return [format_rational(t) for t in v]


def solution_to_json(sol):
    return {
        "value": format_rational(sol.value),
        "maximin": vector_to_json(sol.maximin),
        "minimax": vector_to_json(sol.minimax),
        "unique": sol.unique,
        "totally_mixed": sol.totally_mixed,
    }


def kernel_to_json(k):
    return {
        "rows": sorted(int(i) for i in k.row_indices),
        "cols": sorted(int(j) for j in k.col_indices),
        "value": format_rational(k.value),
        "basic_x": vector_to_json(k.basic_x),
        "basic_y": vector_to_json(k.basic_y),
    }


def cut_to_json(G):
    out = {
        "vertices": G.n,
        "edges": [[i, j, format_rational(w)] for i, j, w in G.edges],
    }
    if G.sides is not None:
        out["sides"] = list(G.sides)
    return out


def cut_from_json(obj):
    from .switching import CutInstance

    if not isinstance(obj, dict):
        raise FormatError("graph", "expected an object")
    if not isinstance(obj.get("vertices"), int) or obj["vertices"] < 0:
        raise FormatError("vertices", "must be a nonnegative integer")
    edges = obj.get("edges", [])
    if not isinstance(edges, list):
        raise FormatError("edges", "expected an array")
    parsed = []
    for t, e in enumerate(edges):
        if not isinstance(e, list) or len(e) != 3 or not all(isinstance(v, int) for v in e[:2]):
            raise FormatError(f"edges[{t}]", "expected [i, j, weight]")
        parsed.append((e[0], e[1], parse_rational(e[2], f"edges[{t}][2]")))
    sides = obj.get("sides")
    try:
        return CutInstance(obj["vertices"], tuple(parsed), tuple(sides) if sides is not None else None)
    except ValueError as exc:
        raise FormatError("edges", str(exc)) from None
