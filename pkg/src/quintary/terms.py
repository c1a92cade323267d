"""The quintary maps L and U, their subterms and closed forms.

Every formula is written once against a ``(meet, join)`` pair so the same
code evaluates scalars through a ``LatticeDescriptor`` and numpy arrays
through ``VectorOps``.
"""

from enum import Enum
from typing import Any, Callable, Dict, Sequence

from src.lattices.base import Element, LatticeDescriptor, require_quintuple

Op = Callable[[Any, Any], Any]


class TermId(str, Enum):
    """Named subterms; ``L5_3`` is the L5 and ``U5_2`` the U5 of the
    Boolean tables."""

    L1 = "L1"
    L2 = "L2"
    L3 = "L3"
    L4 = "L4"
    U1 = "U1"
    U2 = "U2"
    U3 = "U3"
    U4 = "U4"
    L5_1 = "L5_1"
    L5_2 = "L5_2"
    L5_3 = "L5_3"
    U5_1 = "U5_1"
    U5_2 = "U5_2"
    U5_3 = "U5_3"
    L = "L"
    U = "U"
    LDistClosed = "LDistClosed"
    UDistClosed = "UDistClosed"
    Median = "Median"


L_TERMS = (TermId.L1, TermId.L2, TermId.L3, TermId.L4)
U_TERMS = (TermId.U1, TermId.U2, TermId.U3, TermId.U4)


def l_terms(m: Op, j: Op, x: Any, a: Any, y: Any, b: Any, z: Any) -> tuple:
    return tuple(_FORMULAS[t](m, j, x, a, y, b, z) for t in L_TERMS)


def u_terms(m: Op, j: Op, x: Any, a: Any, y: Any, b: Any, z: Any) -> tuple:
    return tuple(_FORMULAS[t](m, j, x, a, y, b, z) for t in U_TERMS)


def big_l(m: Op, j: Op, x: Any, a: Any, y: Any, b: Any, z: Any) -> Any:
    """L = L1 v L2 v L3 v L4."""
    t1, t2, t3, t4 = l_terms(m, j, x, a, y, b, z)
    return j(j(t1, t2), j(t3, t4))


def big_u(m: Op, j: Op, x: Any, a: Any, y: Any, b: Any, z: Any) -> Any:
    """U = U1 ^ U2 ^ U3 ^ U4."""
    t1, t2, t3, t4 = u_terms(m, j, x, a, y, b, z)
    return m(m(t1, t2), m(t3, t4))


def l_dist_closed(m: Op, j: Op, x: Any, a: Any, y: Any, b: Any, z: Any) -> Any:
    """L5_3 v (L5_1 ^ y)."""
    return j(j(m(b, z), m(a, x)), m(j(m(b, a), m(z, x)), y))


def u_dist_closed(m: Op, j: Op, x: Any, a: Any, y: Any, b: Any, z: Any) -> Any:
    """U5_2 ^ (U5_1 v y)."""
    return m(m(j(a, z), j(b, x)), j(m(j(a, b), j(z, x)), y))


def median_term(m: Op, j: Op, x: Any, y: Any, z: Any) -> Any:
    return m(m(j(x, y), j(y, z)), j(z, x))


_FORMULAS: Dict[TermId, Callable[..., Any]] = {
    TermId.L1: lambda m, j, x, a, y, b, z: m(b, j(z, m(a, y))),
    TermId.L2: lambda m, j, x, a, y, b, z: m(z, j(b, m(x, y))),
    TermId.L3: lambda m, j, x, a, y, b, z: m(x, j(a, m(z, y))),
    TermId.L4: lambda m, j, x, a, y, b, z: m(a, j(x, m(b, y))),
    TermId.U1: lambda m, j, x, a, y, b, z: j(a, m(z, j(b, y))),
    TermId.U2: lambda m, j, x, a, y, b, z: j(x, m(b, j(z, y))),
    TermId.U3: lambda m, j, x, a, y, b, z: j(z, m(a, j(x, y))),
    TermId.U4: lambda m, j, x, a, y, b, z: j(b, m(x, j(a, y))),
    TermId.L5_1: lambda m, j, x, a, y, b, z: j(m(b, a), m(z, x)),
    TermId.L5_2: lambda m, j, x, a, y, b, z: j(m(b, x), m(a, z)),
    TermId.L5_3: lambda m, j, x, a, y, b, z: j(m(b, z), m(a, x)),
    TermId.U5_1: lambda m, j, x, a, y, b, z: m(j(a, b), j(z, x)),
    TermId.U5_2: lambda m, j, x, a, y, b, z: m(j(a, z), j(b, x)),
    TermId.U5_3: lambda m, j, x, a, y, b, z: m(j(a, x), j(b, z)),
    TermId.L: big_l,
    TermId.U: big_u,
    TermId.LDistClosed: l_dist_closed,
    TermId.UDistClosed: u_dist_closed,
    TermId.Median: lambda m, j, x, a, y, b, z: median_term(m, j, x, y, z),
}


def eval_term(lattice: LatticeDescriptor, q: Sequence[Element], t: TermId) -> Element:
    """Evaluate one named subterm on ``q = (x, a, y, b, z)``.

    Raises:
        LatticeMismatchError: If a component is not in ``lattice``
        ArithmeticOverflowError: If an arithmetic meet overflows
    """
    q = require_quintuple(lattice, q)
    return _FORMULAS[TermId(t)](lattice.raw_meet, lattice.raw_join, *q)


def eval_terms(lattice: LatticeDescriptor, q: Sequence[Element]) -> Dict[TermId, Element]:
    """Every ``TermId`` value of ``q`` at once."""
    q = require_quintuple(lattice, q)
    m, j = lattice.raw_meet, lattice.raw_join
    return {t: formula(m, j, *q) for t, formula in _FORMULAS.items()}


def eval_L(lattice: LatticeDescriptor, q: Sequence[Element]) -> Element:
    q = require_quintuple(lattice, q)
    return big_l(lattice.raw_meet, lattice.raw_join, *q)


def eval_U(lattice: LatticeDescriptor, q: Sequence[Element]) -> Element:
    q = require_quintuple(lattice, q)
    return big_u(lattice.raw_meet, lattice.raw_join, *q)


def eval_distributive_closed(
    lattice: LatticeDescriptor, q: Sequence[Element], which: str = "L"
) -> Element:
    """Four-term closed form of L (``which="L"``) or U (``which="U"``).

    Agrees with ``eval_L``/``eval_U`` exactly on distributive lattices.
    """
    if which not in ("L", "U"):
        raise ValueError(f"which must be 'L' or 'U', got {which!r}")
    t = TermId.LDistClosed if which == "L" else TermId.UDistClosed
    return eval_term(lattice, q, t)


def median(lattice: LatticeDescriptor, x: Element, y: Element, z: Element) -> Element:
    """(x v y) ^ (y v z) ^ (z v x)."""
    lattice.require(x, y, z)
    return median_term(lattice.raw_meet, lattice.raw_join, x, y, z)

