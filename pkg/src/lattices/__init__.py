"""Lattice backends and the functional lattice interface.

Every other package computes exclusively through ``meet``, ``join``, ``leq``,
``bounds`` and ``enumerate`` of a ``LatticeDescriptor``.
"""

from typing import List, Optional, Tuple

from .backends import (
    ArithmeticLattice,
    ChainLattice,
    DivisorIntervalLattice,
    FiniteTableLattice,
    PowerSetLattice,
)
from .base import Element, LatticeDescriptor, Quintuple, VectorOps, Window
from .fincof import FinCofLattice, FinCofSet
from .grassmannian import (
    SubspaceBasis,
    SubspaceLattice,
    canonicalize,
    enumerate_subspaces,
    subspace_join,
    subspace_meet,
)
from .registry import (
    construct_lattice,
    diamond,
    load_lattice_document,
    pentagon,
    product_lattice,
)


def meet(lattice: LatticeDescriptor, u: Element, v: Element) -> Element:
    return lattice.meet(u, v)


def join(lattice: LatticeDescriptor, u: Element, v: Element) -> Element:
    return lattice.join(u, v)


def leq(lattice: LatticeDescriptor, u: Element, v: Element) -> bool:
    return lattice.leq(u, v)


def bounds(lattice: LatticeDescriptor) -> Optional[Tuple[Element, Element]]:
    return lattice.bounds()


def enumerate_lattice(
    lattice: LatticeDescriptor, window: Optional[Window] = None
) -> List[Element]:
    return lattice.enumerate(window)


__all__ = [
    "ArithmeticLattice",
    "ChainLattice",
    "DivisorIntervalLattice",
    "Element",
    "FinCofLattice",
    "FinCofSet",
    "FiniteTableLattice",
    "LatticeDescriptor",
    "PowerSetLattice",
    "Quintuple",
    "SubspaceBasis",
    "SubspaceLattice",
    "VectorOps",
    "Window",
    "bounds",
    "canonicalize",
    "construct_lattice",
    "diamond",
    "enumerate_lattice",
    "enumerate_subspaces",
    "join",
    "leq",
    "load_lattice_document",
    "meet",
    "pentagon",
    "product_lattice",
    "subspace_join",
    "subspace_meet",
]
