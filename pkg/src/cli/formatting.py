"""Text, CSV and JSON rendering for command output.

Every JSON document carries ``schemaVersion``; text grids put x down the
first column and z along the first row.
"""

import csv
import io
import json
from typing import Any, Dict, List, Optional, Sequence

from src.arithmetic.tables import CayleyTable
from src.boolean.truth_table import TruthRow
from src.identities.report import CheckReport
from src.lattices.base import LatticeDescriptor

SCHEMA_VERSION = 1
FORMATS = ("text", "csv", "json")

TRUTH_TABLE_COLUMNS = [
    "x", "a", "y", "b", "z",
    "L1", "L2", "L3", "L4", "L",
    "U1", "U2", "U3", "U4", "U",
    "L5", "U5", "region",
]  # fmt: skip


def to_json(payload: Dict[str, Any]) -> str:
    return json.dumps({"schemaVersion": SCHEMA_VERSION, **payload}, indent=2, default=str)


def to_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def format_value(value: Any, lattice: Optional[LatticeDescriptor] = None) -> str:
    if lattice is not None:
        try:
            if lattice.contains(value):
                return lattice.format_element(value)
        except (TypeError, ValueError):
            pass
    return str(value)


def render_mapping(payload: Dict[str, Any], fmt: str) -> str:
    """Key/value output, one ``key: value`` line per entry in text mode."""
    if fmt == "json":
        return to_json(payload)
    if fmt == "csv":
        return to_csv(list(payload), [[_flat(v) for v in payload.values()]])
    return "\n".join(f"{key}: {_flat(value)}" for key, value in payload.items())


def _flat(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(str(v) for v in value) + "]"
    return str(value)


def render_report(
    report: CheckReport, fmt: str, lattice: Optional[LatticeDescriptor] = None
) -> str:
    if fmt == "json":
        return to_json(report.model_dump(mode="json"))
    example = report.counterexample
    if fmt == "csv":
        arguments = ""
        if example is not None:
            arguments = " ".join(
                f"{label}={format_value(arg, lattice)}"
                for label, arg in zip(example.labels, example.arguments)
            )
        return to_csv(
            ["check", "lattice", "verdict", "mode", "evaluations", "counterexample"],
            [[report.check, report.lattice, report.verdict, report.mode_label, report.evaluations, arguments]],
        )
    lines = [
        f"check: {report.check}",
        f"lattice: {report.lattice}",
        f"verdict: {report.verdict}",
        f"mode: {report.mode_label}",
        f"evaluations: {report.evaluations}",
    ]
    if example is not None:
        arguments = ", ".join(
            f"{label}={format_value(arg, lattice)}"
            for label, arg in zip(example.labels, example.arguments)
        )
        lines.append(f"counterexample: {arguments}")
        lines.extend(
            f"  {name}: {format_value(value, lattice)}" for name, value in example.values.items()
        )
    return "\n".join(lines)


def render_grid(
    row_label: str,
    col_label: str,
    rows: Sequence[Any],
    cols: Sequence[Any],
    values: Sequence[Sequence[Any]],
) -> str:
    """Right-aligned grid with a ``row\\col`` corner cell."""
    cells: List[List[str]] = [[f"{row_label}\\{col_label}", *(str(c) for c in cols)]]
    cells += [[str(r), *(str(v) for v in row)] for r, row in zip(rows, values)]
    width = max(len(cell) for line in cells for cell in line)
    return "\n".join(" ".join(cell.rjust(width) for cell in line) for line in cells)


def render_table(table: CayleyTable, fmt: str) -> str:
    if fmt == "json":
        return to_json(
            {
                "triple": list(table.triple),
                "kind": table.kind,
                "rows": list(table.rows),
                "cols": list(table.cols),
                "values": [list(row) for row in table.values],
            }
        )
    if fmt == "csv":
        return to_csv(["x\\z", *table.cols], [[r, *row] for r, row in zip(table.rows, table.values)])
    return render_grid("x", "z", table.rows, table.cols, table.values)


def truth_row_cells(row: TruthRow) -> List[Any]:
    return [
        *row.bits,
        *row.l_list,
        row.l_value,
        *row.u_list,
        row.u_value,
        row.l5,
        row.u5,
        row.region.value,
    ]


def render_truth_table(rows: Sequence[TruthRow], fmt: str) -> str:
    if fmt == "json":
        return to_json(
            {"rows": [dict(zip(TRUTH_TABLE_COLUMNS, truth_row_cells(r))) for r in rows]}
        )
    if fmt == "csv":
        return to_csv(TRUTH_TABLE_COLUMNS, [truth_row_cells(r) for r in rows])
    lines = []
    region = None
    for row in rows:
        if row.region is not region:
            region = row.region
            lines.append(f"[{region.value}]")
        bits = "".join(str(b) for b in row.bits)
        l_list = "".join(str(b) for b in row.l_list)
        u_list = "".join(str(b) for b in row.u_list)
        lines.append(
            f"{bits}  L-list {l_list}  L {row.l_value}  U-list {u_list}  U {row.u_value}"
            f"  L5 {row.l5}  U5 {row.u5}"
        )
    return "\n".join(lines)
