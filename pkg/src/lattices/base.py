"""Lattice abstraction shared by every backend.

A ``LatticeDescriptor`` is an immutable description of one lattice and the
only authority for meet, join and order on its elements. Elements are plain
Python values (ints, ``FinCofSet``, ``SubspaceBasis``); the descriptor checks
membership before combining them.
"""

import logging
import random
from abc import ABC, abstractmethod
from typing import Any, Callable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, PrivateAttr

from src.shared.errors import (
    DomainError,
    EnumerationError,
    LatticeMismatchError,
    LatticeSpecError,
)

logger = logging.getLogger(__name__)

Element = Any
Window = Tuple[int, int]

# Largest carrier for which meet/join index tables are materialized.
MAX_TABLE_CARRIER = 1024


class Quintuple(NamedTuple):
    """Argument ``(x, a, y, b, z)`` of the quintary maps."""

    x: Element
    a: Element
    y: Element
    b: Element
    z: Element


class VectorOps(NamedTuple):
    """numpy view of a finite carrier.

    ``codes[i]`` encodes the i-th element of the enumeration; ``meet`` and
    ``join`` act elementwise on broadcastable code arrays. Two codes are equal
    iff the elements are equal.
    """

    codes: np.ndarray
    meet: Callable[[Any, Any], Any]
    join: Callable[[Any, Any], Any]


class LatticeDescriptor(BaseModel, ABC):
    """Immutable description of one lattice backend."""

    model_config = ConfigDict(frozen=True)

    _vector_cache: Optional[VectorOps] = PrivateAttr(default=None)

    kind: str

    @property
    @abstractmethod
    def name(self) -> str:
        """Spec string that reconstructs this lattice."""

    @abstractmethod
    def contains(self, u: Element) -> bool:
        """True iff ``u`` is an element of this lattice."""

    @abstractmethod
    def raw_meet(self, u: Element, v: Element) -> Element:
        """Meet without membership checks."""

    @abstractmethod
    def raw_join(self, u: Element, v: Element) -> Element:
        """Join without membership checks."""

    def bounds(self) -> Optional[Tuple[Element, Element]]:
        return None

    def size(self) -> Optional[int]:
        """Carrier size, or None for infinite lattices."""
        return None

    @property
    def is_finite(self) -> bool:
        return self.size() is not None

    @property
    def is_boolean(self) -> bool:
        return False

    # ---- checked operations ----
    def require(self, *elements: Element) -> None:
        """Raise ``LatticeMismatchError`` for the first foreign element."""
        for u in elements:
            if not self.contains(u):
                raise LatticeMismatchError(self.name, u)

    def meet(self, u: Element, v: Element) -> Element:
        self.require(u, v)
        return self.raw_meet(u, v)

    def join(self, u: Element, v: Element) -> Element:
        self.require(u, v)
        return self.raw_join(u, v)

    def raw_leq(self, u: Element, v: Element) -> bool:
        return bool(self.raw_join(u, v) == v)

    def leq(self, u: Element, v: Element) -> bool:
        """``u <= v`` iff ``u v v = v``."""
        self.require(u, v)
        return self.raw_leq(u, v)

    def complement(self, u: Element) -> Element:
        raise DomainError(f"{self.name} has no complement map", u)

    # ---- carriers ----
    def _carrier(self) -> List[Element]:
        raise EnumerationError(f"{self.name} is infinite; pass a window")

    def _window_carrier(self, window: Window) -> List[Element]:
        raise EnumerationError(f"{self.name} cannot be enumerated over a window")

    def enumerate(self, window: Optional[Window] = None) -> List[Element]:
        """Deterministic enumeration of the carrier (or of a window of it).

        Raises:
            EnumerationError: If the lattice is infinite and no window is given
        """
        if self.is_finite:
            return self._carrier()
        if window is None:
            raise EnumerationError(f"{self.name} is infinite; pass a window")
        return self._window_carrier(window)

    def sample(self, rng: random.Random, window: Window) -> Element:
        """Draw one element; infinite lattices draw from ``window``."""
        return rng.choice(self.enumerate(window))

    # ---- text ----
    def parse_element(self, text: str) -> Element:
        try:
            value = int(text.strip())
        except ValueError as e:
            raise LatticeSpecError(f"cannot parse {text!r} as an element of {self.name}") from e
        self.require(value)
        return value

    def format_element(self, u: Element) -> str:
        return str(u)

    # ---- numpy ----
    def vector_ops(self, window: Optional[Window] = None) -> VectorOps:
        """Index-table view of the carrier built from the scalar operations."""
        if window is None and self._vector_cache is not None:
            return self._vector_cache
        ops = table_vector_ops(self, self.enumerate(window))
        if window is None:
            self._vector_cache = ops
        return ops


def table_vector_ops(lattice: LatticeDescriptor, carrier: Sequence[Element]) -> VectorOps:
    """Materialize meet/join of ``carrier`` as index tables.

    Raises:
        EnumerationError: If the carrier is too large or not closed
    """
    n = len(carrier)
    if n > MAX_TABLE_CARRIER:
        raise EnumerationError(
            f"carrier of {lattice.name} has {n} elements; tables stop at {MAX_TABLE_CARRIER}"
        )
    index = {u: i for i, u in enumerate(carrier)}
    meet_table = np.empty((n, n), dtype=np.int64)
    join_table = np.empty((n, n), dtype=np.int64)
    try:
        for i, u in enumerate(carrier):
            for j in range(i, n):
                v = carrier[j]
                meet_table[i, j] = meet_table[j, i] = index[lattice.raw_meet(u, v)]
                join_table[i, j] = join_table[j, i] = index[lattice.raw_join(u, v)]
    except KeyError as e:
        raise EnumerationError(
            f"window of {lattice.name} is not closed under meet and join"
        ) from e
    logger.debug(f"Built {n}x{n} operation tables for {lattice.name}")
    return VectorOps(
        codes=np.arange(n, dtype=np.int64),
        meet=lambda u, v: meet_table[u, v],
        join=lambda u, v: join_table[u, v],
    )


def require_quintuple(lattice: LatticeDescriptor, q: Sequence[Element]) -> Quintuple:
    """Coerce ``q`` to a ``Quintuple`` whose five components belong to ``lattice``."""
    if len(q) != 5:
        raise DomainError(f"a quintuple has five components, got {len(q)}", q)
    quintuple = Quintuple(*q)
    lattice.require(*quintuple)
    return quintuple
