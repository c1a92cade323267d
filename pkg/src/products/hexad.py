"""The six binary products obtained from L by fixing y and two more slots.

A ``ProductSpec`` at the principal vertex ``e`` fixes ``(a, y, b)`` and
multiplies ``u = x`` with ``v = z``. Every other vertex moves the principal
slot assignment by its S3 label, so the six specs built from one triple
``(t1, y, t3)`` are:

    e      L(u, t1, y, t3, v)       (23)   L(u, t3, y, t1, v)
    (12)   L(t1, u, y, t3, v)       (123)  L(t3, u, y, t1, v)
    (13)   L(t3, t1, y, u, v)       (132)  L(t1, t3, y, u, v)

Vertices joined by the transposition (23) are opposite: their products
agree after swapping the arguments.
"""

import logging
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from src.lattices.base import Element, LatticeDescriptor, Quintuple
from src.quintary.symmetry import (
    HEXAD_VERTICES,
    SymmetryLabel,
    apply_symmetry,
    opposite_vertex,
)
from src.quintary.terms import big_l

logger = logging.getLogger(__name__)

PRINCIPAL = "e"
_SLOT_NAMES = ("x", "a", "y", "b", "z")


class ProductSpec(BaseModel):
    """One vertex of the hexad over a fixed triple ``(t1, y, t3)``."""

    model_config = ConfigDict(frozen=True)

    lattice: LatticeDescriptor
    vertex: str = PRINCIPAL
    triple: Tuple[Element, Element, Element]

    @field_validator("vertex")
    @classmethod
    def validate_vertex(cls, v: str) -> str:
        if v not in HEXAD_VERTICES:
            raise ValueError(f"vertex must be one of {HEXAD_VERTICES}, got {v!r}")
        return v

    @model_validator(mode="after")
    def validate_triple(self) -> "ProductSpec":
        self.lattice.require(*self.triple)
        return self

    @classmethod
    def principal(
        cls, lattice: LatticeDescriptor, a: Element, y: Element, b: Element
    ) -> "ProductSpec":
        return cls(lattice=lattice, vertex=PRINCIPAL, triple=(a, y, b))

    def quintuple(self, u: Element, v: Element) -> Quintuple:
        """Slot assignment ``(x, a, y, b, z)`` for the arguments ``u, v``."""
        t1, y, t3 = self.triple
        return apply_symmetry((u, t1, y, t3, v), SymmetryLabel.from_vertex(self.vertex))

    @property
    def fixed(self) -> Dict[str, Element]:
        """Fixed slot names mapped to their values, y included."""
        marker = object()
        q = self.quintuple(marker, marker)
        return {name: value for name, value in zip(_SLOT_NAMES, q) if value is not marker}

    @property
    def varying(self) -> Tuple[str, str]:
        """Slot names receiving the left and right argument."""
        left, right = object(), object()
        q = self.quintuple(left, right)
        names = {id(value): name for name, value in zip(_SLOT_NAMES, q)}
        return names[id(left)], names[id(right)]

    def describe(self) -> str:
        args = []
        for name, value in zip(_SLOT_NAMES, self.quintuple("u", "v")):
            args.append(value if name in self.varying else self.lattice.format_element(value))
        return f"{self.vertex}: L({', '.join(args)})"


def eval_product(spec: ProductSpec, u: Element, v: Element) -> Element:
    """``u . v`` at the vertex of ``spec``.

    Raises:
        LatticeMismatchError: If ``u`` or ``v`` is not in the lattice
        ArithmeticOverflowError: If an arithmetic meet overflows
    """
    spec.lattice.require(u, v)
    lattice = spec.lattice
    return big_l(lattice.raw_meet, lattice.raw_join, *spec.quintuple(u, v))


def product_function(spec: ProductSpec) -> Callable[[Element, Element], Element]:
    """Unchecked binary operation of ``spec`` for tight loops."""
    m, j = spec.lattice.raw_meet, spec.lattice.raw_join
    t1, y, t3 = spec.triple
    s = SymmetryLabel.from_vertex(spec.vertex)

    def multiply(u: Element, v: Element) -> Element:
        return big_l(m, j, *apply_symmetry((u, t1, y, t3, v), s))

    return multiply


def opposite(spec: ProductSpec) -> ProductSpec:
    """Vertex composed with (23); for the principal product a and b swap."""
    return spec.model_copy(update={"vertex": opposite_vertex(spec.vertex)})


def hexad(
    lattice: LatticeDescriptor, t1: Element, y: Element, t3: Element
) -> List[ProductSpec]:
    """The six product specs over one triple, in ``HEXAD_VERTICES`` order."""
    return [
        ProductSpec(lattice=lattice, vertex=vertex, triple=(t1, y, t3))
        for vertex in HEXAD_VERTICES
    ]


def product_bounds(spec: ProductSpec) -> Tuple[Optional[Element], Optional[Element]]:
    """Elements below and above every product ``u . v``.

    Principal and (23) are bounded by the meet and join of the triple; the
    vertices fixing ``x, a`` by ``x ^ a`` and the lattice top; those fixing
    ``x, b`` by the lattice bottom and ``x v b``. Opposite vertices share
    their bounds. A missing lattice bound is ``None``.
    """
    m, j = spec.lattice.raw_meet, spec.lattice.raw_join
    extremes = spec.lattice.bounds()
    bottom, top = extremes if extremes is not None else (None, None)
    t1, y, t3 = spec.triple
    fixed = spec.fixed
    if "x" not in fixed:
        return m(m(t1, y), t3), j(j(t1, y), t3)
    if "a" in fixed:
        return m(fixed["x"], fixed["a"]), top
    return bottom, j(fixed["x"], fixed["b"])
