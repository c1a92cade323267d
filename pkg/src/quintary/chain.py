"""Closed forms of L = U on a totally ordered set.

Eight order hypotheses are tried in a fixed order and the first match wins;
overlapping hypotheses give the same value. Some orderings match no case,
which is reported as an outcome rather than an error.
"""

from typing import Any, NamedTuple, Optional, Sequence

from src.lattices.backends import ChainLattice
from src.lattices.base import LatticeDescriptor, require_quintuple
from src.shared.errors import DomainError


class ChainClosedForm(NamedTuple):
    value: Optional[Any]
    case: Optional[int]

    @property
    def applies(self) -> bool:
        return self.case is not None


NO_CASE = ChainClosedForm(None, None)


def chain_closed_form(x: Any, a: Any, y: Any, b: Any, z: Any) -> ChainClosedForm:
    """Closed form over any totally ordered values (ints, ``math.inf``)."""
    if a <= y <= b:
        return ChainClosedForm(max(a, min(z, b)), 1)
    if b <= y <= a:
        return ChainClosedForm(min(a, max(x, b)), 2)
    if x <= y <= z:
        return ChainClosedForm(max(x, min(b, z)), 3)
    if z <= y <= x:
        return ChainClosedForm(min(x, max(a, z)), 4)
    if max(a, b) <= y <= min(x, z):
        return ChainClosedForm(y, 5)
    if max(x, z) <= y <= min(a, b):
        return ChainClosedForm(y, 6)
    if max(a, x, b, z) <= y:
        return ChainClosedForm(min(max(a, z), max(b, x)), 7)
    if y <= min(a, x, b, z):
        return ChainClosedForm(max(min(b, z), min(a, x)), 8)
    return NO_CASE


def eval_chain_closed(lattice: LatticeDescriptor, q: Sequence[Any]) -> ChainClosedForm:
    """Closed-form value and case id of ``q`` on a chain.

    Raises:
        DomainError: If ``lattice`` is not a chain
    """
    if not isinstance(lattice, ChainLattice):
        raise DomainError(f"chain closed forms need a chain, got {lattice.name}")
    return chain_closed_form(*require_quintuple(lattice, q))
