"""Hexad products, the ternary product and their semigroup laws."""

from .hexad import (
    PRINCIPAL,
    ProductSpec,
    eval_product,
    hexad,
    opposite,
    product_bounds,
    product_function,
)
from .laws import (
    check_associativity,
    check_table_associativity,
    check_table_weak_band,
    check_weak_band,
    index_table,
)
from .ternary import TernarySpec, check_torsor_laws, eval_ternary

__all__ = [
    "PRINCIPAL",
    "ProductSpec",
    "TernarySpec",
    "check_associativity",
    "check_table_associativity",
    "check_table_weak_band",
    "check_torsor_laws",
    "check_weak_band",
    "eval_product",
    "eval_ternary",
    "hexad",
    "index_table",
    "opposite",
    "product_bounds",
    "product_function",
]
