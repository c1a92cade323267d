"""All 32 evaluations of the quintary terms on the two-element lattice."""

from itertools import product
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict

from src.lattices.backends import ChainLattice
from src.quintary.terms import L_TERMS, U_TERMS, TermId, eval_terms

from .regions import RegionLabel, classify_point

TWO = ChainLattice(size=2)


class TruthRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    bits: Tuple[int, int, int, int, int]
    l_list: Tuple[int, int, int, int]
    l_value: int
    u_list: Tuple[int, int, int, int]
    u_value: int
    l5: int
    u5: int
    region: RegionLabel

    @property
    def key(self) -> str:
        return "".join(str(bit) for bit in self.bits)


def truth_row(x: int, a: int, y: int, b: int, z: int) -> TruthRow:
    values = eval_terms(TWO, (x, a, y, b, z))
    return TruthRow(
        bits=(x, a, y, b, z),
        l_list=tuple(values[t] for t in L_TERMS),
        l_value=values[TermId.L],
        u_list=tuple(values[t] for t in U_TERMS),
        u_value=values[TermId.U],
        l5=values[TermId.L5_3],
        u5=values[TermId.U5_2],
        region=classify_point(a, y, b),
    )


def truth_table() -> List[TruthRow]:
    """Rows grouped by region, each group in ascending bit order."""
    rows = [truth_row(*bits) for bits in product((0, 1), repeat=5)]
    order = list(RegionLabel)
    return sorted(rows, key=lambda row: (order.index(row.region), row.bits))


class TruthTableSummary(BaseModel):
    """Rows (as bit strings) where a candidate formula misses L or U."""

    l_differs_from_u: List[str]
    mismatches: Dict[str, List[str]]
    majority_violations: List[str]
    ternary_violations: List[str]


def _ternary_bit(row: TruthRow) -> int:
    x, a, y, b, z = row.bits
    if a and b:
        return x | y | z
    if not a and not b:
        return x & y & z
    return z if b else x


def summarize(rows: List[TruthRow]) -> TruthTableSummary:
    """Compare L and U with shorter candidate formulas row by row.

    The ternary rule says ``L`` is ``x v y v z`` on ``a ^ b``, ``x ^ y ^ z``
    off ``a v b``, ``z`` on ``b`` minus ``a`` and ``x`` on ``a`` minus ``b``.
    """
    candidates = {
        "L = L2 v L3": lambda r: r.l_list[1] | r.l_list[2] == r.l_value,
        "L = L1 v L4": lambda r: r.l_list[0] | r.l_list[3] == r.l_value,
        "U = U1 ^ U4": lambda r: r.u_list[0] & r.u_list[3] == r.u_value,
        "U = U2 ^ U3": lambda r: r.u_list[1] & r.u_list[2] == r.u_value,
        "L = L5": lambda r: r.l5 == r.l_value,
        "U = U5": lambda r: r.u5 == r.u_value,
    }
    return TruthTableSummary(
        l_differs_from_u=[r.key for r in rows if r.l_value != r.u_value],
        mismatches={
            name: [r.key for r in rows if not holds(r)] for name, holds in candidates.items()
        },
        majority_violations=[r.key for r in rows if (sum(r.bits) >= 3) != bool(r.l_value)],
        ternary_violations=[r.key for r in rows if _ternary_bit(r) != r.l_value],
    )
