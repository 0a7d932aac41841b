"""Value tables n -> count for one family with the other parameters fixed."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache

from . import oracle, sequences, series
from .oracle import ClassSpec, Family

METHODS = ("CLOSED_FORM", "RECURRENCE", "EGF", "ORACLE")


@dataclass
class SequenceTable:
    family: Family
    params: dict
    method: str
    values: list[int] = field(default_factory=list)

    def rows(self):
        return list(enumerate(self.values))


@lru_cache(maxsize=64)
def _egf_counts(r: int, i: int | None, order: int) -> tuple[int, ...]:
    s = series.egf_f_r(r, order) if i is None else series.egf_f_r_parity(r, i, order)
    vals = s.egf_coefficients()
    if any(not isinstance(v, int) for v in vals):
        raise ArithmeticError(f"non-integral EGF coefficient for r={r}, i={i}")
    return tuple(vals)


def _backends(method: str, n_max: int):
    if method == "CLOSED_FORM":
        return sequences.d_r, sequences.d_r_parity_explicit
    if method == "RECURRENCE":
        def d_r_par(n, r, i):
            return sequences.d_r_parity_recurrence(n, r, i)

        def d_r(n, r):
            return d_r_par(n, r, 0) + d_r_par(n, r, 1)
        return d_r, d_r_par
    if method == "EGF":
        def d_r(n, r):
            return _egf_counts(r, None, max(n_max, n))[n]

        def d_r_par(n, r, i):
            return _egf_counts(r, i, max(n_max, n))[n]
        return d_r, d_r_par
    raise ValueError(f"unknown method {method}")


def family_value(spec: ClassSpec, method: str = "CLOSED_FORM", cap: int = oracle.DEFAULT_CAP) -> int:
    if method == "ORACLE":
        return oracle.brute_count(spec, cap)
    d_r, d_r_par = _backends(method, spec.n)
    return sequences.count(spec, d_r, d_r_par)


def build_table(family: Family | str, r: int, u: int = 0, m: int = 0,
                k: int | None = None, i: int | None = None, n_max: int = 10,
                method: str = "CLOSED_FORM", cap: int = oracle.DEFAULT_CAP) -> SequenceTable:
    """One row per n in 0..n_max. Rows with n < m are empty classes and
    hold 0."""
    family = Family(family.upper()) if isinstance(family, str) else family
    method = method.upper()
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    ClassSpec(family, r, u, m, max(m, n_max), k, i)  # parameter validation only
    if method == "ORACLE" and r + n_max > cap:
        raise oracle.OracleCapError(f"oracle table needs r + n_max <= {cap}")
    table = SequenceTable(family, {"r": r, "u": u, "m": m, "k": k, "i": i}, method)
    if method != "ORACLE":
        d_r, d_r_par = _backends(method, n_max)
    for n in range(n_max + 1):
        if n < m:
            table.values.append(0)
            continue
        spec = ClassSpec(family, r, u, m, n, k, i)
        if method == "ORACLE":
            table.values.append(oracle.brute_count(spec, cap))
        else:
            table.values.append(sequences.count(spec, d_r, d_r_par))
    return table


def render(table: SequenceTable, fmt: str) -> str:
    if fmt == "bfile":
        return "".join(f"{n} {v}\n" for n, v in table.rows())
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "value", "method"])
        for n, v in table.rows():
            w.writerow([n, v, table.method])
        return buf.getvalue()
    if fmt == "json":
        doc = {
            "family": table.family.value,
            "params": {key: (None if val is None else str(val)) for key, val in table.params.items()},
            "method": table.method,
            "rows": [{"n": str(n), "value": str(v)} for n, v in table.rows()],
        }
        return json.dumps(doc, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt}")

