"""Finite-cofinite algebra of the set of prime powers (1 included).

A ``FinCofSet`` stores its finite side: the set itself when finite, its
complement when cofinite. Every set operation reduces to one of four
polarity cases on those finite sets.
"""

import random
from itertools import combinations
from typing import Iterable, List, Literal, NamedTuple, Optional, Tuple

from src.shared.errors import EnumerationError, LatticeSpecError
from src.shared.number_theory import is_prime_power, prime_power_divisors

from .base import Element, LatticeDescriptor, Window

# Windowed enumeration builds 2 * 2**k sets from k prime powers.
MAX_FINCOF_POOL = 8


class FinCofSet(NamedTuple):
    """A finite subset of prime powers, or the complement of one."""

    cofinite: bool
    members: Tuple[int, ...]

    @classmethod
    def finite(cls, members: Iterable[int] = ()) -> "FinCofSet":
        return cls(False, tuple(sorted(set(members))))

    @classmethod
    def cofinite_of(cls, missing: Iterable[int] = ()) -> "FinCofSet":
        return cls(True, tuple(sorted(set(missing))))


def _union(u: Tuple[int, ...], v: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(sorted(set(u) | set(v)))


def _intersection(u: Tuple[int, ...], v: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(sorted(set(u) & set(v)))


def _difference(u: Tuple[int, ...], v: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(sorted(set(u) - set(v)))


def intersect(u: FinCofSet, v: FinCofSet) -> FinCofSet:
    if not u.cofinite and not v.cofinite:
        return FinCofSet(False, _intersection(u.members, v.members))
    if not u.cofinite:
        return FinCofSet(False, _difference(u.members, v.members))
    if not v.cofinite:
        return FinCofSet(False, _difference(v.members, u.members))
    return FinCofSet(True, _union(u.members, v.members))


def unite(u: FinCofSet, v: FinCofSet) -> FinCofSet:
    if not u.cofinite and not v.cofinite:
        return FinCofSet(False, _union(u.members, v.members))
    if not u.cofinite:
        return FinCofSet(True, _difference(v.members, u.members))
    if not v.cofinite:
        return FinCofSet(True, _difference(u.members, v.members))
    return FinCofSet(True, _intersection(u.members, v.members))


class FinCofLattice(LatticeDescriptor):
    """Boolean algebra of finite and cofinite sets of prime powers."""

    kind: Literal["fincof"] = "fincof"

    @property
    def name(self) -> str:
        return "fincof"

    @property
    def is_boolean(self) -> bool:
        return True

    def contains(self, u: Element) -> bool:
        if not isinstance(u, FinCofSet) or not isinstance(u.cofinite, bool):
            return False
        members = u.members
        if list(members) != sorted(set(members)):
            return False
        return all(isinstance(m, int) and is_prime_power(m) for m in members)

    def raw_meet(self, u: FinCofSet, v: FinCofSet) -> FinCofSet:
        return intersect(u, v)

    def raw_join(self, u: FinCofSet, v: FinCofSet) -> FinCofSet:
        return unite(u, v)

    def raw_leq(self, u: FinCofSet, v: FinCofSet) -> bool:
        return intersect(u, v) == u

    def complement(self, u: FinCofSet) -> FinCofSet:
        self.require(u)
        return FinCofSet(not u.cofinite, u.members)

    def bounds(self) -> Tuple[FinCofSet, FinCofSet]:
        return (FinCofSet.finite(), FinCofSet.cofinite_of())

    def _window_carrier(self, window: Window) -> List[FinCofSet]:
        lo, hi = window
        pool = [m for m in range(max(lo, 1), hi + 1) if is_prime_power(m)]
        if len(pool) > MAX_FINCOF_POOL:
            raise EnumerationError(
                f"window {lo}:{hi} holds {len(pool)} prime powers; "
                f"enumeration stops at {MAX_FINCOF_POOL}"
            )
        subsets = [c for k in range(len(pool) + 1) for c in combinations(pool, k)]
        return [FinCofSet(False, s) for s in subsets] + [
            FinCofSet(True, s) for s in subsets
        ]

    def sample(self, rng: random.Random, window: Window) -> FinCofSet:
        lo, hi = window
        n = rng.randint(max(lo, 1), max(hi, 1))
        members = tuple(prime_power_divisors(n))
        if rng.random() < 0.5:
            return FinCofSet(False, members)
        return FinCofSet(True, members)

    def parse_element(self, text: str) -> FinCofSet:
        text = text.strip()
        polarity: Optional[bool] = None
        for prefix, cofinite in (("fin", False), ("cof", True)):
            if text.startswith(prefix + "{") and text.endswith("}"):
                polarity = cofinite
                body = text[len(prefix) + 1 : -1].strip()
        if polarity is None:
            raise LatticeSpecError(
                f"fincof elements look like 'fin{{1,2}}' or 'cof{{5}}', got {text!r}"
            )
        try:
            items = [int(t) for t in body.split(",")] if body else []
        except ValueError as e:
            raise LatticeSpecError(f"cannot parse {text!r}") from e
        u = FinCofSet(polarity, tuple(sorted(set(items))))
        self.require(u)
        return u

    def format_element(self, u: FinCofSet) -> str:
        prefix = "cof" if u.cofinite else "fin"
        return prefix + "{" + ",".join(str(m) for m in u.members) + "}"
