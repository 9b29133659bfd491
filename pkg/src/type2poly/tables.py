"""Lossless text encodings (plain, CSV, JSON) for family tables."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .algebra import Polynomial, format_rational
from .centralfact import CentralFactorialTable
from .families import FamilyTable

FORMATS = ("plain", "csv", "json")


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`; also accepts decimal input such as ``0.5``."""
    return Fraction(text.strip())


def _coeff_strings(p: Polynomial) -> list[str]:
    return [format_rational(c) for c in p.coeffs] or ["0"]


def table_rows(table: FamilyTable | CentralFactorialTable, x=None) -> tuple[str, list]:
    """(kind, rows) where kind is ``triangle``, ``polynomial`` or ``values``."""
    if isinstance(table, CentralFactorialTable):
        if x is not None:
            raise TypeError("central factorial tables have no x variable")
        return "triangle", table.rows()
    if table.is_triangle:
        return "triangle", [list(r) for r in table.values]
    if x is not None:
        return "values", table.evaluate(x)
    return "polynomial", list(table.values)


def to_plain(table: FamilyTable, x=None) -> str:
    kind, rows = table_rows(table, x)
    lines = []
    for n, row in enumerate(rows):
        if kind == "triangle":
            body = ", ".join(format_rational(v) for v in row)
        elif kind == "polynomial":
            body = ", ".join(_coeff_strings(row))
        else:
            body = format_rational(row)
        lines.append(f"{n}: {body}")
    return "\n".join(lines) + "\n"


def to_csv(table: FamilyTable, x=None) -> str:
    kind, rows = table_rows(table, x)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if kind == "triangle":
        w.writerow(["n", "k", "value"])
        for n, row in enumerate(rows):
            for k, v in enumerate(row):
                w.writerow([n, k, format_rational(v)])
    elif kind == "values":
        w.writerow(["n", "value"])
        for n, v in enumerate(rows):
            w.writerow([n, format_rational(v)])
    else:
        width = max((len(p.coeffs) for p in rows), default=1) or 1
        w.writerow(["n"] + [f"coeff{i}" for i in range(width)])
        for n, p in enumerate(rows):
            cs = [format_rational(c) for c in p.coeffs]
            w.writerow([n] + cs + ["0"] * (width - len(cs)))
    return buf.getvalue()


def to_json(table: FamilyTable, x=None) -> str:
    kind, rows = table_rows(table, x)
    if kind == "triangle":
        values = [[format_rational(v) for v in row] for row in rows]
    elif kind == "polynomial":
        values = [[format_rational(c) for c in p.coeffs] for p in rows]
    else:
        values = [format_rational(v) for v in rows]
    if isinstance(table, CentralFactorialTable):
        name, order = "central_t", None
    else:
        name, order = table.family.family.value, table.family.order
    payload = {
        "family": name,
        "order": order,
        "max_n": table.max_n,
        "kind": kind,
        "x": None if x is None else format_rational(Fraction(x)),
        "values": values,
    }
    return json.dumps(payload)


def render_table(table: FamilyTable, fmt: str, x=None) -> str:
    if fmt == "plain":
        return to_plain(table, x)
    if fmt == "csv":
        return to_csv(table, x)
    if fmt == "json":
        return to_json(table, x) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def read_csv(text: str) -> list:
    """Parse :func:`to_csv` output back into triangle rows, polynomials or values."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    body = [r for r in reader if r]
    if header == ["n", "k", "value"]:
        rows: list[list[Fraction]] = []
        for n, k, v in body:
            n, k = int(n), int(k)
            while len(rows) <= n:
                rows.append([])
            if k != len(rows[n]):
                raise ValueError(f"triangle entries out of order at n={n}, k={k}")
            rows[n].append(parse_rational(v))
        return rows
    if header == ["n", "value"]:
        return [parse_rational(v) for _, v in body]
    if header and header[0] == "n" and all(h.startswith("coeff") for h in header[1:]):
        return [Polynomial(parse_rational(c) for c in row[1:]) for row in body]
    raise ValueError(f"unrecognised table header {header!r}")


def read_json(text: str) -> list:
    payload = json.loads(text)
    kind = payload["kind"]
    if kind == "triangle":
        return [[parse_rational(v) for v in row] for row in payload["values"]]
    if kind == "polynomial":
        return [Polynomial(parse_rational(c) for c in cs) for cs in payload["values"]]
    if kind == "values":
        return [parse_rational(v) for v in payload["values"]]
    raise ValueError(f"unknown table kind {kind!r}")
