"""Cayley tables of the principal arithmetic product.

Rows are indexed by x and columns by z, matching the printed layout.
"""

import logging
from typing import List, Literal, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from src.identities.report import CheckReport, combine_reports
from src.products.laws import (
    check_table_associativity,
    check_table_weak_band,
    index_table,
)
from src.shared.errors import DomainError
from src.shared.number_theory import divisors

from .periods import periods, product_grid

logger = logging.getLogger(__name__)

TableKind = Literal["residues", "divisors", "window"]


class CayleyTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    triple: Tuple[int, int, int]
    kind: TableKind
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]
    values: Tuple[Tuple[int, ...], ...]

    @property
    def name(self) -> str:
        a, y, b = self.triple
        return f"{self.kind} table of ({a},{y},{b})"

    def entry(self, x: int, z: int) -> int:
        return self.values[self.rows.index(x)][self.cols.index(z)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def closed(self) -> bool:
        """True if the table is square and every value lies in its carrier."""
        carrier = set(self.rows)
        return self.is_square and all(v in carrier for row in self.values for v in row)


def _table(
    a: int, y: int, b: int, kind: TableKind, rows: Sequence[int], cols: Sequence[int]
) -> CayleyTable:
    grid = product_grid(a, y, b, rows, cols)
    return CayleyTable(
        triple=(a, y, b),
        kind=kind,
        rows=tuple(rows),
        cols=tuple(cols),
        values=tuple(tuple(int(v) for v in row) for row in grid),
    )


def build_table(
    a: int, y: int, b: int, rows: Sequence[int], cols: Sequence[int]
) -> CayleyTable:
    """Products ``x . z`` for x in ``rows`` and z in ``cols``."""
    if not rows or not cols:
        raise DomainError("a table needs at least one row and one column")
    return _table(a, y, b, "window", rows, cols)


def quotient_table(a: int, y: int, b: int) -> CayleyTable:
    """The product induced on residues mod N, values reduced mod N.

    Every entry is also computed from the representatives ``x + n`` and
    ``z + m``; a disagreement means the product does not pass to the
    quotient.

    Raises:
        DomainError: If N = 0, or the product is not well defined mod N
    """
    data = periods(a, y, b)
    if data.degenerate:
        raise DomainError(f"({a}, {y}, {b}) has N = 0; no quotient ring")
    carrier = range(data.N)
    grid = product_grid(a, y, b, range(data.N + data.n), range(data.N + data.m))
    base = grid[: data.N, : data.N]
    if (grid[data.n : data.n + data.N, : data.N] != base).any() or (
        grid[: data.N, data.m : data.m + data.N] != base
    ).any():
        raise DomainError(f"({a}, {y}, {b}) is not well defined modulo N = {data.N}")
    logger.debug(f"Quotient table of ({a}, {y}, {b}) over Z/{data.N}")
    return CayleyTable(
        triple=(a, y, b),
        kind="residues",
        rows=tuple(carrier),
        cols=tuple(carrier),
        values=tuple(tuple(int(v) % data.N for v in row) for row in base),
    )


def divisor_table(a: int, y: int, b: int, d: int) -> CayleyTable:
    """Products of the divisors of ``d``, ascending; closure is not assumed."""
    if d < 1:
        raise DomainError(f"divisor tables need d >= 1, got {d}", d)
    carrier = divisors(d)
    return _table(a, y, b, "divisors", carrier, carrier)


def table_laws(table: CayleyTable) -> CheckReport:
    """Associativity and the weak-band law of a closed table.

    Raises:
        DomainError: If the table is not closed over its carrier
    """
    if not table.closed:
        raise DomainError(f"{table.name} is not closed over its carrier")
    carrier: List[int] = list(table.rows)
    index = index_table(carrier, table.values)
    reports = [
        check_table_associativity(table.name, carrier, index),
        check_table_weak_band(table.name, carrier, index),
    ]
    return combine_reports("table laws", table.name, reports)
