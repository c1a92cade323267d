"""Construction of lattice descriptors from spec strings, mappings and JSON.

Accepted spec strings::

    arithmetic | chain | chain:n | M3 | N5 | powerset:n | divisors:K:N
    divisor-interval K=1 N=12 | fincof | gf:p:d | gf(p)^d | A*B | path.json
"""

import json
import logging
import re
from itertools import product
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Type, Union

from pydantic import BaseModel, Field, ValidationError

from src.shared.errors import LatticeSpecError

from .backends import (
    ArithmeticLattice,
    ChainLattice,
    DivisorIntervalLattice,
    FiniteTableLattice,
    PowerSetLattice,
)
from .base import LatticeDescriptor
from .fincof import FinCofLattice
from .grassmannian import SubspaceLattice

logger = logging.getLogger(__name__)

LatticeSpec = Union[str, Mapping[str, Any], LatticeDescriptor]

_KINDS: Dict[str, Type[LatticeDescriptor]] = {
    "arithmetic": ArithmeticLattice,
    "chain": ChainLattice,
    "powerset": PowerSetLattice,
    "table": FiniteTableLattice,
    "divisors": DivisorIntervalLattice,
    "fincof": FinCofLattice,
    "subspace": SubspaceLattice,
}


class LatticeDocument(BaseModel):
    """JSON form of a finite lattice: element names plus row-major tables."""

    elements: List[str] = Field(min_length=1)
    meet: List[List[int]]
    join: List[List[int]]
    name: Optional[str] = None


def lattice_from_order(
    names: Sequence[str], covers: Sequence[Tuple[str, str]], label: str
) -> FiniteTableLattice:
    """Build a finite lattice from its covering pairs ``(lower, upper)``.

    Meet and join tables are the greatest lower and least upper bounds of
    the reflexive-transitive closure of ``covers``.
    """
    n = len(names)
    index = {name: i for i, name in enumerate(names)}
    leq = [[i == j for j in range(n)] for i in range(n)]
    for lower, upper in covers:
        leq[index[lower]][index[upper]] = True
    for k, i, j in product(range(n), repeat=3):
        if leq[i][k] and leq[k][j]:
            leq[i][j] = True

    def extremum(candidates: List[int], greatest: bool) -> int:
        for c in candidates:
            if all((leq[d][c] if greatest else leq[c][d]) for d in candidates):
                return c
        raise LatticeSpecError(f"order on {list(names)} is not a lattice")

    meet_table = []
    join_table = []
    for i in range(n):
        meet_row, join_row = [], []
        for j in range(n):
            lower = [k for k in range(n) if leq[k][i] and leq[k][j]]
            upper = [k for k in range(n) if leq[i][k] and leq[j][k]]
            meet_row.append(extremum(lower, greatest=True))
            join_row.append(extremum(upper, greatest=False))
        meet_table.append(tuple(meet_row))
        join_table.append(tuple(join_row))
    return FiniteTableLattice(
        element_names=tuple(names),
        meet_table=tuple(meet_table),
        join_table=tuple(join_table),
        label=label,
    )


def diamond() -> FiniteTableLattice:
    """M3 = {0, u, v, w, 1} with three pairwise incomparable atoms."""
    return lattice_from_order(
        ["0", "u", "v", "w", "1"],
        [("0", "u"), ("0", "v"), ("0", "w"), ("u", "1"), ("v", "1"), ("w", "1")],
        "M3",
    )


def pentagon() -> FiniteTableLattice:
    """N5 = {0, u, v, w, 1} with 0 < u < w < 1 and 0 < v < 1."""
    return lattice_from_order(
        ["0", "u", "v", "w", "1"],
        [("0", "u"), ("u", "w"), ("w", "1"), ("0", "v"), ("v", "1")],
        "N5",
    )


def product_lattice(
    first: LatticeDescriptor, second: LatticeDescriptor
) -> FiniteTableLattice:
    """Direct product of two finite lattices as a ``FiniteTableLattice``.

    Elements are pairs in lexicographic order of the factor enumerations.
    """
    left = first.enumerate()
    right = second.enumerate()
    pairs = [(u, v) for u in left for v in right]
    index = {pair: i for i, pair in enumerate(pairs)}
    names = tuple(
        f"({first.format_element(u)},{second.format_element(v)})" for u, v in pairs
    )
    meet_table = tuple(
        tuple(
            index[(first.raw_meet(u1, u2), second.raw_meet(v1, v2))]
            for (u2, v2) in pairs
        )
        for (u1, v1) in pairs
    )
    join_table = tuple(
        tuple(
            index[(first.raw_join(u1, u2), second.raw_join(v1, v2))]
            for (u2, v2) in pairs
        )
        for (u1, v1) in pairs
    )
    return FiniteTableLattice(
        element_names=names,
        meet_table=meet_table,
        join_table=join_table,
        label=f"{first.name}*{second.name}",
    )


def load_lattice_document(path: Union[str, Path]) -> FiniteTableLattice:
    """Load and validate a finite lattice from a JSON document.

    Raises:
        LatticeSpecError: If the file is unreadable or malformed
        LatticeAxiomError: If the tables violate a lattice axiom
    """
    path = Path(path)
    try:
        document = LatticeDocument.model_validate(json.loads(path.read_text()))
    except (OSError, json.JSONDecodeError) as e:
        raise LatticeSpecError(f"cannot read lattice document {path}: {e}") from e
    except ValidationError as e:
        raise LatticeSpecError(f"invalid lattice document {path}: {e}") from e
    logger.info(f"Loaded {len(document.elements)}-element lattice from {path}")
    return _table_from_lists(
        document.elements, document.meet, document.join, document.name or path.stem
    )


def _table_from_lists(
    names: List[str], meet: List[List[int]], join: List[List[int]], label: str
) -> FiniteTableLattice:
    try:
        return FiniteTableLattice(
            element_names=tuple(names),
            meet_table=tuple(tuple(row) for row in meet),
            join_table=tuple(tuple(row) for row in join),
            label=label,
        )
    except ValidationError as e:
        raise LatticeSpecError(f"invalid lattice tables: {e}") from e


def _from_mapping(spec: Mapping[str, Any], max_subspaces: Optional[int]) -> LatticeDescriptor:
    kind = spec.get("kind")
    if kind not in _KINDS:
        raise LatticeSpecError(f"unknown lattice kind {kind!r}")
    data = dict(spec)
    if kind == "subspace" and max_subspaces is not None:
        data.setdefault("max_subspaces", max_subspaces)
    try:
        return _KINDS[kind].model_validate(data)
    except ValidationError as e:
        raise LatticeSpecError(f"invalid parameters for {kind}: {e}") from e


_GF_PAREN = re.compile(r"^gf\((\d+)\)\^(\d+)$")
_DIVISOR_INTERVAL = re.compile(r"^divisor-interval\s+K\s*=\s*(\d+)\s+N\s*=\s*(\d+)$")


def _from_string(text: str, max_subspaces: Optional[int]) -> LatticeDescriptor:
    text = text.strip()
    lowered = text.lower()
    if "*" in text:
        left, right = text.split("*", 1)
        return product_lattice(
            _from_string(left, max_subspaces), _from_string(right, max_subspaces)
        )
    if text == "M3":
        return diamond()
    if text == "N5":
        return pentagon()
    if lowered == "arithmetic":
        return ArithmeticLattice()
    if lowered == "fincof":
        return FinCofLattice()
    if lowered.endswith(".json"):
        return load_lattice_document(text)

    match = _GF_PAREN.match(lowered)
    if match:
        return _from_mapping(
            {"kind": "subspace", "p": int(match.group(1)), "d": int(match.group(2))},
            max_subspaces,
        )
    match = _DIVISOR_INTERVAL.match(text)
    if match:
        return _from_mapping(
            {"kind": "divisors", "K": int(match.group(1)), "N": int(match.group(2))},
            max_subspaces,
        )

    head, _, rest = lowered.partition(":")
    params = rest.split(":") if rest else []
    try:
        numbers = [int(p) for p in params]
    except ValueError as e:
        raise LatticeSpecError(f"malformed lattice spec {text!r}") from e
    if head == "chain" and len(numbers) <= 1:
        return _from_mapping({"kind": "chain", "size": numbers[0] if numbers else None}, None)
    if head == "powerset" and len(numbers) == 1:
        return _from_mapping({"kind": "powerset", "universe_size": numbers[0]}, None)
    if head == "divisors" and len(numbers) == 2:
        return _from_mapping({"kind": "divisors", "K": numbers[0], "N": numbers[1]}, None)
    if head == "gf" and len(numbers) == 2:
        return _from_mapping(
            {"kind": "subspace", "p": numbers[0], "d": numbers[1]}, max_subspaces
        )
    raise LatticeSpecError(f"unknown lattice spec {text!r}")


def construct_lattice(
    spec: LatticeSpec, max_subspaces: Optional[int] = None
) -> LatticeDescriptor:
    """Build a validated lattice descriptor.

    Args:
        spec: Spec string, mapping with a ``kind`` key, or a descriptor
        max_subspaces: Enumeration budget for subspace lattices

    Returns:
        The immutable descriptor

    Raises:
        LatticeSpecError: Malformed spec or invalid parameters
        LatticeAxiomError: Finite tables violating a lattice axiom
    """
    if isinstance(spec, LatticeDescriptor):
        return spec
    if isinstance(spec, Mapping):
        if spec.get("kind") is None and "elements" in spec:
            try:
                document = LatticeDocument.model_validate(spec)
            except ValidationError as e:
                raise LatticeSpecError(f"invalid lattice document: {e}") from e
            return _table_from_lists(
                document.elements, document.meet, document.join, document.name or "table"
            )
        return _from_mapping(spec, max_subspaces)
    if isinstance(spec, str):
        return _from_string(spec, max_subspaces)
    raise LatticeSpecError(f"cannot build a lattice from {type(spec).__name__}")
