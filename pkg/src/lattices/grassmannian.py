"""Subspace lattices of GF(p)^d.

Subspaces are stored in reduced row-echelon form, so two ``SubspaceBasis``
values are equal iff they span the same subspace. Meet is intersection
(Zassenhaus reduction), join is the sum.
"""

import logging
from itertools import combinations, product
from typing import List, Literal, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from pydantic import Field, PrivateAttr, model_validator

from src.shared.errors import EnumerationError, FieldError, LatticeSpecError
from src.shared.number_theory import is_prime

from .base import Element, LatticeDescriptor

logger = logging.getLogger(__name__)

MAX_PRIME = 13
MAX_DIMENSION = 4

Row = Tuple[int, ...]


class SubspaceBasis(NamedTuple):
    """Canonical (RREF) basis of a subspace of GF(p)^d."""

    p: int
    d: int
    rows: Tuple[Row, ...]

    @property
    def rank(self) -> int:
        return len(self.rows)


def _check_field(p: int, d: int) -> None:
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if d < 0:
        raise FieldError(f"dimension must be non-negative, got {d}")


def row_reduce(matrix: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row-echelon form of ``matrix`` over GF(p).

    Args:
        matrix: Integer matrix (m x n)
        p: Prime modulus

    Returns:
        (R, pivot_cols): R has the nonzero rows first, pivots equal to 1 and
        zeros above and below every pivot.
    """
    R = np.asarray(matrix, dtype=np.int64) % p
    m, n = R.shape
    pivot_cols: List[int] = []
    pivot_row = 0
    for col in range(n):
        if pivot_row == m:
            break
        nonzero = np.flatnonzero(R[pivot_row:, col])
        if nonzero.size == 0:
            continue
        found = pivot_row + int(nonzero[0])
        if found != pivot_row:
            R[[pivot_row, found]] = R[[found, pivot_row]]
        R[pivot_row] = (R[pivot_row] * pow(int(R[pivot_row, col]), -1, p)) % p
        for row in range(m):
            if row != pivot_row and R[row, col]:
                R[row] = (R[row] - R[row, col] * R[pivot_row]) % p
        pivot_cols.append(col)
        pivot_row += 1
    return R, pivot_cols


def canonicalize(p: int, d: int, generators: Sequence[Sequence[int]]) -> SubspaceBasis:
    """Canonical basis of the span of ``generators``.

    Raises:
        FieldError: If ``p`` is not prime or a vector has length other than ``d``
    """
    _check_field(p, d)
    for v in generators:
        if len(v) != d:
            raise FieldError(f"vector {tuple(v)} does not have length {d}")
    if not generators or d == 0:
        return SubspaceBasis(p, d, ())
    R, pivots = row_reduce(np.array(generators, dtype=np.int64), p)
    rows = tuple(tuple(int(c) for c in R[i]) for i in range(len(pivots)))
    return SubspaceBasis(p, d, rows)


def _require_same_space(u: SubspaceBasis, v: SubspaceBasis) -> None:
    if (u.p, u.d) != (v.p, v.d):
        raise FieldError(
            f"subspaces of GF({u.p})^{u.d} and GF({v.p})^{v.d} cannot be combined"
        )


def subspace_join(u: SubspaceBasis, v: SubspaceBasis) -> SubspaceBasis:
    _require_same_space(u, v)
    return canonicalize(u.p, u.d, list(u.rows) + list(v.rows))


def subspace_meet(u: SubspaceBasis, v: SubspaceBasis) -> SubspaceBasis:
    """Intersection by Zassenhaus reduction of ``[[u, u], [v, 0]]``.

    After row reduction, rows whose left half vanishes carry a basis of
    ``u & v`` in their right half.
    """
    _require_same_space(u, v)
    p, d = u.p, u.d
    if not u.rows or not v.rows:
        return SubspaceBasis(p, d, ())
    block = [list(r) + list(r) for r in u.rows] + [list(r) + [0] * d for r in v.rows]
    R, _ = row_reduce(np.array(block, dtype=np.int64), p)
    common = [
        R[i, d:]
        for i in range(R.shape[0])
        if not R[i, :d].any() and R[i, d:].any()
    ]
    return canonicalize(p, d, [[int(c) for c in r] for r in common])


def _rref_matrices(p: int, d: int, k: int) -> List[Tuple[Row, ...]]:
    """Every k x d RREF matrix over GF(p) with nonzero rows, lexicographic."""
    result: List[Tuple[Row, ...]] = []
    for pivots in combinations(range(d), k):
        free = [
            (i, c)
            for i, pc in enumerate(pivots)
            for c in range(pc + 1, d)
            if c not in pivots
        ]
        for values in product(range(p), repeat=len(free)):
            rows = [[0] * d for _ in range(k)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, c), val in zip(free, values):
                rows[i][c] = val
            result.append(tuple(tuple(r) for r in rows))
    return sorted(result)


def gaussian_binomial(d: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of GF(p)^d."""
    num, den = 1, 1
    for i in range(k):
        num *= p ** (d - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def enumerate_subspaces(
    p: int, d: int, max_subspaces: Optional[int] = None
) -> List[SubspaceBasis]:
    """All subspaces of GF(p)^d ordered by rank, then lexicographic RREF.

    Raises:
        FieldError: If ``p`` is not prime
        EnumerationError: If the count exceeds ``max_subspaces``
    """
    _check_field(p, d)
    count = sum(gaussian_binomial(d, k, p) for k in range(d + 1))
    if max_subspaces is not None and count > max_subspaces:
        raise EnumerationError(
            f"GF({p})^{d} has {count} subspaces; budget is {max_subspaces}"
        )
    result = [
        SubspaceBasis(p, d, rows)
        for k in range(d + 1)
        for rows in _rref_matrices(p, d, k)
    ]
    logger.debug(f"Enumerated {len(result)} subspaces of GF({p})^{d}")
    return result


class SubspaceLattice(LatticeDescriptor):
    """Lattice of subspaces of GF(p)^d with meet = intersection, join = sum."""

    kind: Literal["subspace"] = "subspace"
    p: int = Field(ge=2, le=MAX_PRIME)
    d: int = Field(ge=0, le=MAX_DIMENSION)
    max_subspaces: int = Field(default=4096, ge=1)

    _carrier_cache: Optional[List[SubspaceBasis]] = PrivateAttr(default=None)

    @model_validator(mode="after")
    def validate_field(self) -> "SubspaceLattice":
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")
        return self

    @property
    def name(self) -> str:
        return f"gf:{self.p}:{self.d}"

    def contains(self, u: Element) -> bool:
        if not isinstance(u, SubspaceBasis) or (u.p, u.d) != (self.p, self.d):
            return False
        return canonicalize(self.p, self.d, list(u.rows)) == u

    def raw_meet(self, u: SubspaceBasis, v: SubspaceBasis) -> SubspaceBasis:
        return subspace_meet(u, v)

    def raw_join(self, u: SubspaceBasis, v: SubspaceBasis) -> SubspaceBasis:
        return subspace_join(u, v)

    def bounds(self) -> Tuple[SubspaceBasis, SubspaceBasis]:
        identity = [[int(i == j) for j in range(self.d)] for i in range(self.d)]
        return (SubspaceBasis(self.p, self.d, ()), canonicalize(self.p, self.d, identity))

    def _carrier(self) -> List[SubspaceBasis]:
        if self._carrier_cache is None:
            self._carrier_cache = enumerate_subspaces(
                self.p, self.d, self.max_subspaces
            )
        return list(self._carrier_cache)

    def size(self) -> int:
        return sum(gaussian_binomial(self.d, k, self.p) for k in range(self.d + 1))

    def parse_element(self, text: str) -> SubspaceBasis:
        """Parse ``<v1;v2;...>`` where each vector is comma separated."""
        text = text.strip()
        if not (text.startswith("<") and text.endswith(">")):
            raise LatticeSpecError(f"subspaces look like '<1,0;0,1>', got {text!r}")
        body = text[1:-1].strip()
        try:
            vectors = [
                [int(c) % self.p for c in part.split(",")]
                for part in body.split(";")
                if part.strip()
            ]
        except ValueError as e:
            raise LatticeSpecError(f"cannot parse {text!r}") from e
        return canonicalize(self.p, self.d, vectors)

    def format_element(self, u: SubspaceBasis) -> str:
        return "<" + ";".join(",".join(str(c) for c in r) for r in u.rows) + ">"
