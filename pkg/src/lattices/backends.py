"""Integer-valued lattice backends: arithmetic, chains, power sets, finite
tables and divisor intervals."""

import logging
import math
import random
import re
from itertools import product
from typing import List, Literal, Optional, Tuple

import numpy as np
from pydantic import Field, PrivateAttr, field_validator, model_validator

from src.shared.errors import (
    DomainError,
    LatticeAxiomError,
    LatticeSpecError,
)
from src.shared.number_theory import UINT64_MAX, checked_lcm, divisors

from .base import Element, LatticeDescriptor, VectorOps, Window

logger = logging.getLogger(__name__)

# np.lcm on int64 stays exact for L and U terms below this window bound.
NUMPY_ARITHMETIC_LIMIT = 2**15


def _is_int(u: Element) -> bool:
    return isinstance(u, (int, np.integer)) and not isinstance(u, bool)


class ArithmeticLattice(LatticeDescriptor):
    """Non-negative integers with meet = lcm and join = gcd.

    Integer 0 is the bottom and 1 the top; ``u <= v`` iff ``v`` divides ``u``.
    """

    kind: Literal["arithmetic"] = "arithmetic"

    @property
    def name(self) -> str:
        return "arithmetic"

    def contains(self, u: Element) -> bool:
        return _is_int(u) and 0 <= u <= UINT64_MAX

    def raw_meet(self, u: int, v: int) -> int:
        return checked_lcm(u, v)

    def raw_join(self, u: int, v: int) -> int:
        return math.gcd(u, v)

    def bounds(self) -> Tuple[int, int]:
        return (0, 1)

    def _window_carrier(self, window: Window) -> List[int]:
        lo, hi = window
        return list(range(max(lo, 0), min(hi, UINT64_MAX) + 1))

    def sample(self, rng: random.Random, window: Window) -> int:
        lo, hi = window
        return rng.randint(max(lo, 0), min(hi, UINT64_MAX))

    def vector_ops(self, window: Optional[Window] = None) -> VectorOps:
        carrier = self.enumerate(window)
        if carrier and carrier[-1] < NUMPY_ARITHMETIC_LIMIT:
            return VectorOps(
                codes=np.asarray(carrier, dtype=np.int64), meet=np.lcm, join=np.gcd
            )
        return super().vector_ops(window)


class ChainLattice(LatticeDescriptor):
    """Integers under min and max; ``size`` bounds it to ``{0, ..., size-1}``."""

    kind: Literal["chain"] = "chain"
    size_: Optional[int] = Field(default=None, ge=1, alias="size")

    @property
    def name(self) -> str:
        return "chain" if self.size_ is None else f"chain:{self.size_}"

    def contains(self, u: Element) -> bool:
        if not _is_int(u):
            return False
        return self.size_ is None or 0 <= u < self.size_

    def raw_meet(self, u: int, v: int) -> int:
        return min(u, v)

    def raw_join(self, u: int, v: int) -> int:
        return max(u, v)

    def raw_leq(self, u: int, v: int) -> bool:
        return u <= v

    def bounds(self) -> Optional[Tuple[int, int]]:
        if self.size_ is None:
            return None
        return (0, self.size_ - 1)

    def size(self) -> Optional[int]:
        return self.size_

    def _carrier(self) -> List[int]:
        return list(range(self.size_ or 0))

    def _window_carrier(self, window: Window) -> List[int]:
        lo, hi = window
        return list(range(lo, hi + 1))

    def sample(self, rng: random.Random, window: Window) -> int:
        if self.size_ is not None:
            return rng.randrange(self.size_)
        return rng.randint(*window)

    def vector_ops(self, window: Optional[Window] = None) -> VectorOps:
        return VectorOps(
            codes=np.asarray(self.enumerate(window), dtype=np.int64),
            meet=np.minimum,
            join=np.maximum,
        )


class PowerSetLattice(LatticeDescriptor):
    """Subsets of ``{0, ..., n-1}`` stored as bit vectors in one int."""

    kind: Literal["powerset"] = "powerset"
    universe_size: int = Field(ge=0, le=64)

    @property
    def name(self) -> str:
        return f"powerset:{self.universe_size}"

    @property
    def full(self) -> int:
        return (1 << self.universe_size) - 1

    @property
    def is_boolean(self) -> bool:
        return True

    def contains(self, u: Element) -> bool:
        return _is_int(u) and 0 <= u <= self.full

    def raw_meet(self, u: int, v: int) -> int:
        return u & v

    def raw_join(self, u: int, v: int) -> int:
        return u | v

    def raw_leq(self, u: int, v: int) -> bool:
        return u & ~v == 0

    def complement(self, u: int) -> int:
        self.require(u)
        return self.full ^ u

    def bounds(self) -> Tuple[int, int]:
        return (0, self.full)

    def size(self) -> int:
        return 1 << self.universe_size

    def _carrier(self) -> List[int]:
        return list(range(self.size()))

    def sample(self, rng: random.Random, window: Window) -> int:
        return rng.getrandbits(self.universe_size) if self.universe_size else 0

    def from_members(self, members: List[int]) -> int:
        mask = 0
        for i in members:
            if not 0 <= i < self.universe_size:
                raise DomainError(f"{i} is outside the universe of {self.name}", i)
            mask |= 1 << i
        return mask

    def members(self, u: int) -> List[int]:
        return [i for i in range(self.universe_size) if u >> i & 1]

    def parse_element(self, text: str) -> int:
        text = text.strip()
        if text.startswith("{") and text.endswith("}"):
            body = text[1:-1].strip()
            items = [int(t) for t in body.split(",")] if body else []
            return self.from_members(items)
        return super().parse_element(text)

    def format_element(self, u: int) -> str:
        return "{" + ",".join(str(i) for i in self.members(u)) + "}"

    def vector_ops(self, window: Optional[Window] = None) -> VectorOps:
        if self.universe_size > 62:
            return super().vector_ops(window)
        return VectorOps(
            codes=np.arange(self.size(), dtype=np.int64),
            meet=np.bitwise_and,
            join=np.bitwise_or,
        )


class FiniteTableLattice(LatticeDescriptor):
    """Finite lattice given by explicit meet and join tables over indices.

    The lattice axioms are checked exhaustively at construction.
    """

    kind: Literal["table"] = "table"
    element_names: Tuple[str, ...]
    meet_table: Tuple[Tuple[int, ...], ...]
    join_table: Tuple[Tuple[int, ...], ...]
    label: Optional[str] = None

    _bounds: Optional[Tuple[int, int]] = PrivateAttr(default=None)

    @field_validator("element_names")
    @classmethod
    def validate_names(cls, v: Tuple[str, ...]) -> Tuple[str, ...]:
        if not v:
            raise ValueError("a lattice needs at least one element")
        if len(set(v)) != len(v):
            raise ValueError("element names must be distinct")
        return v

    @model_validator(mode="after")
    def validate_axioms(self) -> "FiniteTableLattice":
        n = len(self.element_names)
        for label, table in (("meet", self.meet_table), ("join", self.join_table)):
            if len(table) != n or any(len(row) != n for row in table):
                raise LatticeSpecError(f"{label} table must be {n}x{n}")
            for row in table:
                for k in row:
                    if not 0 <= k < n:
                        raise LatticeSpecError(f"{label} table entry {k} out of range")
        m, j = self.meet_table, self.join_table
        for label, t in (("meet", m), ("join", j)):
            for u in range(n):
                if t[u][u] != u:
                    raise LatticeAxiomError(f"{label} idempotence", (u,))
                for v in range(n):
                    if t[u][v] != t[v][u]:
                        raise LatticeAxiomError(f"{label} commutativity", (u, v))
        for u, v, w in product(range(n), repeat=3):
            if m[m[u][v]][w] != m[u][m[v][w]]:
                raise LatticeAxiomError("meet associativity", (u, v, w))
            if j[j[u][v]][w] != j[u][j[v][w]]:
                raise LatticeAxiomError("join associativity", (u, v, w))
        for u in range(n):
            for v in range(n):
                if j[u][m[u][v]] != u:
                    raise LatticeAxiomError("absorption u v (u ^ v) = u", (u, v))
                if m[u][j[u][v]] != u:
                    raise LatticeAxiomError("absorption u ^ (u v v) = u", (u, v))
        return self

    @property
    def name(self) -> str:
        return self.label or f"table[{len(self.element_names)}]"

    def contains(self, u: Element) -> bool:
        return _is_int(u) and 0 <= u < len(self.element_names)

    def raw_meet(self, u: int, v: int) -> int:
        return self.meet_table[u][v]

    def raw_join(self, u: int, v: int) -> int:
        return self.join_table[u][v]

    def bounds(self) -> Tuple[int, int]:
        if self._bounds is None:
            bottom, top = 0, 0
            for u in range(len(self.element_names)):
                bottom = self.meet_table[bottom][u]
                top = self.join_table[top][u]
            self._bounds = (bottom, top)
        return self._bounds

    def size(self) -> int:
        return len(self.element_names)

    def _carrier(self) -> List[int]:
        return list(range(self.size()))

    def element(self, name: str) -> int:
        """Index of the element called ``name``."""
        try:
            return self.element_names.index(name)
        except ValueError as e:
            raise LatticeSpecError(f"{self.name} has no element {name!r}") from e

    def parse_element(self, text: str) -> int:
        text = text.strip()
        if text in self.element_names:
            return self.element_names.index(text)
        return super().parse_element(text)

    def format_element(self, u: int) -> str:
        return self.element_names[u]

    def vector_ops(self, window: Optional[Window] = None) -> VectorOps:
        meet_table = np.asarray(self.meet_table, dtype=np.int64)
        join_table = np.asarray(self.join_table, dtype=np.int64)
        return VectorOps(
            codes=np.arange(self.size(), dtype=np.int64),
            meet=lambda u, v: meet_table[u, v],
            join=lambda u, v: join_table[u, v],
        )


class DivisorIntervalLattice(LatticeDescriptor):
    """The interval ``[K, N] = {d : K | d and d | N}`` of the arithmetic lattice.

    Bottom is ``N``, top is ``K``; enumeration is by ascending divisor.
    """

    kind: Literal["divisors"] = "divisors"
    K: int = Field(ge=1)
    N: int = Field(ge=1, le=UINT64_MAX)

    _divisors: Optional[List[int]] = PrivateAttr(default=None)

    @model_validator(mode="after")
    def validate_interval(self) -> "DivisorIntervalLattice":
        if self.N % self.K != 0:
            raise LatticeSpecError(f"K={self.K} does not divide N={self.N}")
        return self

    @property
    def name(self) -> str:
        return f"divisors:{self.K}:{self.N}"

    def contains(self, u: Element) -> bool:
        return _is_int(u) and u >= 1 and self.N % u == 0 and u % self.K == 0

    def raw_meet(self, u: int, v: int) -> int:
        return checked_lcm(u, v)

    def raw_join(self, u: int, v: int) -> int:
        return math.gcd(u, v)

    def raw_leq(self, u: int, v: int) -> bool:
        return u % v == 0

    def bounds(self) -> Tuple[int, int]:
        return (self.N, self.K)

    def _carrier(self) -> List[int]:
        if self._divisors is None:
            self._divisors = [d for d in divisors(self.N) if d % self.K == 0]
        return list(self._divisors)

    def size(self) -> int:
        return len(self._carrier())

    def conjugate(self, d: int) -> int:
        """The anti-automorphism ``d -> K*N/d``."""
        self.require(d)
        return self.K * self.N // d
