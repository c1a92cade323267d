"""Slot permutations of (x, a, b, z) and their hexad labels.

``SymmetryLabel.perm[i]`` is the image of slot ``i`` (0=x, 1=a, 2=b, 3=z);
``y`` is never moved. L and U are invariant under the Klein four-group, so
a permutation only matters through its coset, an element of S3 written in
cycle notation on the slots x=1, a=2, b=3.
"""

from itertools import permutations
from typing import Dict, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

from src.lattices.base import Element, Quintuple

SLOTS = ("x", "a", "b", "z")
_QUINTUPLE_POSITION = (0, 1, 3, 4)

S3_LABELS: Dict[Tuple[int, int, int], str] = {
    (0, 1, 2): "e",
    (1, 0, 2): "(12)",
    (2, 1, 0): "(13)",
    (0, 2, 1): "(23)",
    (1, 2, 0): "(123)",
    (2, 0, 1): "(132)",
}
HEXAD_VERTICES = tuple(S3_LABELS.values())


class SymmetryLabel(BaseModel):
    """An element of S4 acting on the slots (x, a, b, z)."""

    model_config = ConfigDict(frozen=True)

    perm: Tuple[int, int, int, int]

    @field_validator("perm")
    @classmethod
    def validate_perm(cls, v: Tuple[int, int, int, int]) -> Tuple[int, int, int, int]:
        if sorted(v) != [0, 1, 2, 3]:
            raise ValueError(f"{v} is not a permutation of four slots")
        return v

    @classmethod
    def identity(cls) -> "SymmetryLabel":
        return cls(perm=(0, 1, 2, 3))

    @classmethod
    def from_vertex(cls, label: str) -> "SymmetryLabel":
        """The coset representative fixing z of an S3 hexad label."""
        for images, name in S3_LABELS.items():
            if name == label:
                return cls(perm=(*images, 3))
        raise ValueError(f"unknown hexad vertex {label!r}")

    @classmethod
    def from_swaps(cls, *pairs: Tuple[str, str]) -> "SymmetryLabel":
        """Product of disjoint transpositions given by slot names."""
        perm = list(range(4))
        for left, right in pairs:
            i, j = SLOTS.index(left), SLOTS.index(right)
            perm[i], perm[j] = perm[j], perm[i]
        return cls(perm=tuple(perm))

    def compose(self, other: "SymmetryLabel") -> "SymmetryLabel":
        """``self o other``: apply ``other`` first."""
        return SymmetryLabel(perm=tuple(self.perm[other.perm[i]] for i in range(4)))

    def inverse(self) -> "SymmetryLabel":
        inv = [0] * 4
        for i, image in enumerate(self.perm):
            inv[image] = i
        return SymmetryLabel(perm=tuple(inv))

    @property
    def coset_label(self) -> str:
        """S3 label of this permutation's Klein-four coset."""
        target = self.inverse().perm[3]
        klein = next(k for k in KLEIN_GROUP if k.perm[3] == target)
        fixed_z = self.compose(klein)
        return S3_LABELS[fixed_z.perm[:3]]

    @property
    def hexad_vertex(self) -> str:
        return self.coset_label

    @property
    def opposite(self) -> "SymmetryLabel":
        """``self o (23)``: the opposite hexad vertex."""
        return self.compose(SymmetryLabel.from_vertex("(23)"))


KLEIN_GROUP: List[SymmetryLabel] = [
    SymmetryLabel.identity(),
    SymmetryLabel.from_swaps(("x", "a"), ("b", "z")),
    SymmetryLabel.from_swaps(("x", "b"), ("a", "z")),
    SymmetryLabel.from_swaps(("x", "z"), ("a", "b")),
]

SYMMETRIC_GROUP: List[SymmetryLabel] = [
    SymmetryLabel(perm=p) for p in permutations(range(4))
]


def apply_symmetry(q: Sequence[Element], s: SymmetryLabel) -> Quintuple:
    """Move the value in slot ``i`` to slot ``s.perm[i]``; y stays put."""
    values = list(q)
    result = list(q)
    for i, image in enumerate(s.perm):
        result[_QUINTUPLE_POSITION[image]] = values[_QUINTUPLE_POSITION[i]]
    return Quintuple(*result)


def opposite_vertex(label: str) -> str:
    return SymmetryLabel.from_vertex(label).opposite.coset_label
