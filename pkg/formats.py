"""
Output formats and renderers shared by the CLI commands.
"""

import csv
import io
import json
import logging
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from base_identity import IdentityReport
from census import CountTable
from qseries import BivariateSeries

logger = logging.getLogger(__name__)


class OutputFormat(str, Enum):
    HUMAN = "human"
    CSV = "csv"
    JSON = "json"
    BFILE = "bfile"

    @property
    def extension(self) -> str:
        return {"human": "txt", "csv": "csv", "json": "json", "bfile": "txt"}[self.value]


class FormatError(ValueError):
    """Raised when a format does not apply to the requested output."""


COLUMN_LABELS = {
    "multiples_of_r": "{j} multiples of {r}",
    "largest_r_repeating": "largest {r}-repeating part {j}",
    "above_chain_mex": "{j} parts > {t}-chain mex",
    "above_chain_maex": "{j} parts > {t}-chain maex",
    "smallest_r_repeating": "smallest {r}-repeating part {j}",
    "distinct_multiples": "{j} different multiples of {r}",
    "distinct_repeating": "{j} different {r}-repeating parts",
    "above_mex": "{j} parts > mex",
    "even_parts": "{j} even parts",
    "largest_repeating": "largest repeating part {j}",
    "chain_mex_side": "{j} parts > {r}-chain mex = {k}",
    "repeating_side": "largest {s}-repeating part {j}, {k}-1 parts > {j}",
}

# the illustration tables put the chain-mex column first
HUMAN_COLUMN_ORDER = {
    "three-way": ("above_chain_mex", "multiples_of_r", "largest_r_repeating"),
    "alpha": ("above_mex", "even_parts", "largest_repeating"),
}


def _csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _json(payload: Any) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _aligned(rows: List[List[str]], separator: str = " | ") -> str:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return "".join(separator.join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip() + "\n" for row in rows)


# --------------------------
def render_sequence(name: str, values: Sequence[int], fmt: OutputFormat) -> str:
    if fmt is OutputFormat.BFILE:
        return "".join(f"{n} {v}\n" for n, v in enumerate(values))
    if fmt is OutputFormat.CSV:
        return _csv(("n", "value"), enumerate(values))
    if fmt is OutputFormat.JSON:
        return _json({"name": name, "values": list(values)})
    return f"{name}: {', '.join(str(v) for v in values)}\n"


def render_bivariate(name: str, series: BivariateSeries, fmt: OutputFormat) -> str:
    cells = [(n, j, series.coefficient(n, j)) for n in range(series.order + 1) for j in range(n + 1)]
    if fmt is OutputFormat.BFILE:
        raise FormatError("bfile output needs a univariate sequence")
    if fmt is OutputFormat.CSV:
        return _csv(("n", "j", "value"), cells)
    if fmt is OutputFormat.JSON:
        return _json({"name": name, "order": series.order, "cells": [list(c) for c in cells]})
    lines = [f"{name} (row n lists the coefficients of w^0..w^n)"]
    for n in range(series.order + 1):
        lines.append(f"q^{n}: " + " ".join(str(c) for c in series.row(n)))
    return "\n".join(lines) + "\n"


def _label(column: str, params: Dict[str, Any], key: Tuple[int, ...] = ()) -> str:
    r = params.get("r")
    values = {
        "r": r,
        "s": None if r is None else r + 1,
        "t": None if r is None else r - 1,
        "j": key[0] if key else "j",
        "k": key[1] if len(key) > 1 else "k",
    }
    return COLUMN_LABELS.get(column, column).format(**values)


def _ordered_columns(table: CountTable) -> List[str]:
    order = HUMAN_COLUMN_ORDER.get(table.statistic)
    if order and set(order) == set(table.columns):
        return list(order)
    return list(table.columns)


def render_table(
    table: CountTable, fmt: OutputFormat, list_partitions: bool = False, only_j: Optional[int] = None
) -> str:
    rows = [(key, counts) for key, counts in table.rows() if only_j is None or key[0] == only_j]
    if fmt is OutputFormat.BFILE:
        raise FormatError("bfile output needs a univariate sequence")
    if fmt is OutputFormat.CSV:
        return _csv(("n", *table.axes, *table.columns), [(table.n, *key, *counts) for key, counts in rows])
    if fmt is OutputFormat.JSON:
        payload = {
            "statistic": table.statistic,
            "n": table.n,
            "params": table.params,
            "axes": list(table.axes),
            "columns": list(table.columns),
            "rows": [
                {**dict(zip(table.axes, key)), **dict(zip(table.columns, counts))} for key, counts in rows
            ],
            "scalars": table.scalars,
        }
        if list_partitions and table.listings is not None:
            payload["listings"] = {
                ",".join(str(k) for k in key): {c: [str(p) for p in table.listing(key, c)] for c in table.columns}
                for key, _ in rows
            }
        return _json(payload)
    return _render_human_table(table, rows, list_partitions)


def _render_human_table(table: CountTable, rows, list_partitions: bool) -> str:
    params = " ".join(f"{k}={v}" for k, v in table.params.items())
    out = [f"{table.statistic}  n={table.n}  {params}".rstrip() + "\n"]
    columns = _ordered_columns(table)
    if columns:
        index = [table.columns.index(c) for c in columns]
        grid = [[*table.axes, *(_label(c, table.params) for c in columns)]]
        for key, counts in rows:
            grid.append([*(str(k) for k in key), *(str(counts[i]) for i in index)])
        out.append(_aligned(grid))
    for name, value in table.scalars.items():
        out.append(f"{name}: {value}\n")
    if list_partitions and table.listings is not None:
        for key, _ in rows:
            listed = [[str(p) for p in table.listing(key, c)] for c in columns]
            depth = max((len(l) for l in listed), default=0)
            block = [[_label(c, table.params, key) for c in columns]]
            for i in range(depth):
                block.append([l[i] if i < len(l) else "" for l in listed])
            out.append("\n" + _aligned(block))
    return "".join(out)


# --------------------------
def render_reports(reports: Sequence[IdentityReport], fmt: OutputFormat, timing: bool = False) -> str:
    if fmt is OutputFormat.BFILE:
        raise FormatError("bfile output needs a univariate sequence")
    if fmt is OutputFormat.JSON:
        return _json([r.to_dict(timing) for r in reports])
    if fmt is OutputFormat.CSV:
        rows = []
        for report in reports:
            w = report.witness
            rows.append((
                report.identity_id,
                report.status,
                *(("", "", "", "", "", "") if w is None else (w.n, w.r, w.j, w.m, w.lhs, w.rhs)),
            ))
        return _csv(("identity_id", "status", "n", "r", "j", "m", "lhs", "rhs"), rows)
    lines = []
    for report in reports:
        p = report.params
        head = f"{report.status.upper():5} {report.identity_id}  max_n={p.max_n} r={','.join(map(str, p.r_values))} order={p.order}"
        if timing and report.duration_ms is not None:
            head += f"  ({report.duration_ms:.0f} ms)"
        lines.append(head)
        w = report.witness
        if w is not None:
            coords = " ".join(f"{k}={v}" for k, v in (("n", w.n), ("r", w.r), ("j", w.j), ("m", w.m)) if v is not None)
            lines.append(f"      first mismatch at {coords}: {w.lhs} != {w.rhs}")
            if w.partitions_lhs:
                lines.append(f"      lhs: {'  '.join(w.partitions_lhs)}")
            if w.partitions_rhs:
                lines.append(f"      rhs: {'  '.join(w.partitions_rhs)}")
        for r_key, outcomes in report.details.get("interpretations", {}).items():
            lines.append(f"      {r_key}: " + ", ".join(f"{k}={v}" for k, v in outcomes.items()))
    passed = sum(1 for r in reports if r.passed)
    lines.append(f"{passed}/{len(reports)} passed")
    return "\n".join(lines) + "\n"


def render_registry(entries: Sequence[Tuple[str, str]], fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return _json([{"identity_id": i, "description": d} for i, d in entries])
    if fmt is OutputFormat.CSV:
        return _csv(("identity_id", "description"), entries)
    width = max(len(i) for i, _ in entries)
    return "".join(f"{i.ljust(width)}  {d}\n" for i, d in entries)


def render_stats(stats: Dict[str, Any], fmt: OutputFormat) -> str:
    if fmt is OutputFormat.BFILE:
        raise FormatError("bfile output needs a univariate sequence")
    if fmt is OutputFormat.JSON:
        return _json(stats)
    flat = []
    for key, value in stats.items():
        if isinstance(value, dict):
            for sub, inner in value.items():
                flat.append((f"{key}[{sub}]", inner))
        else:
            flat.append((key, value))
    if fmt is OutputFormat.CSV:
        return _csv(("statistic", "value"), flat)
    width = max(len(k) for k, _ in flat)
    return "".join(f"{k.ljust(width)}  {'absent' if v is None else v}\n" for k, v in flat)
