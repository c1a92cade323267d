"""The principal product on the non-negative integers under gcd and lcm."""

from .conjugation import check_conjugation_iso, conjugate_triple, gamma
from .periods import (
    ARITHMETIC,
    PeriodData,
    check_arithmetic_periodicity,
    corners,
    degenerate_eval,
    effective_periods,
    periods,
    prime_power_eval,
    principal_product,
    product_grid,
    range_check,
)
from .tables import CayleyTable, build_table, divisor_table, quotient_table, table_laws
from .valuations import lambda_embed, valuation

__all__ = [
    "ARITHMETIC",
    "CayleyTable",
    "PeriodData",
    "build_table",
    "check_arithmetic_periodicity",
    "check_conjugation_iso",
    "conjugate_triple",
    "corners",
    "degenerate_eval",
    "divisor_table",
    "effective_periods",
    "gamma",
    "lambda_embed",
    "periods",
    "prime_power_eval",
    "principal_product",
    "product_grid",
    "quotient_table",
    "range_check",
    "table_laws",
    "valuation",
]
