"""Pointwise structure of the products on power-set lattices."""

from .regions import (
    REGION_CONNECTOR,
    Connector,
    RegionLabel,
    RegionPartition,
    bottom_top,
    check_periodicity,
    classify_point,
    eval_connector,
    partition,
    product_via_partition,
    region_masks,
)
from .truth_table import TruthRow, TruthTableSummary, summarize, truth_row, truth_table

__all__ = [
    "REGION_CONNECTOR",
    "Connector",
    "RegionLabel",
    "RegionPartition",
    "TruthRow",
    "TruthTableSummary",
    "bottom_top",
    "check_periodicity",
    "classify_point",
    "eval_connector",
    "partition",
    "product_via_partition",
    "region_masks",
    "summarize",
    "truth_row",
    "truth_table",
]
