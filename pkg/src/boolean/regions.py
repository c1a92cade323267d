"""Six-region decomposition of a power set by the membership of each point in
``a``, ``y`` and ``b``.

On every region the principal product ``x . z = L(x, a, y, b, z)`` acts
pointwise as one of the six non-group semigroup laws on ``{0, 1}``.
"""

import logging
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from src.identities.report import CheckReport, point_report
from src.identities.search import (
    QUINTUPLE_LABELS,
    SearchParameters,
    pairs_differ,
    resolve_parameters,
    search_tuples,
)
from src.lattices.backends import PowerSetLattice
from src.products.hexad import ProductSpec, product_bounds
from src.quintary.terms import big_l
from src.shared.errors import DomainError

logger = logging.getLogger(__name__)


class RegionLabel(str, Enum):
    TRUE = "true"
    FALSE = "false"
    RIGHT = "right"
    LEFT = "left"
    OR = "or"
    AND = "and"


class Connector(str, Enum):
    """Binary operations on one bit, named after their truth tables."""

    CONST_1 = "const-1"
    CONST_0 = "const-0"
    SECOND = "second"
    FIRST = "first"
    OR = "or"
    AND = "and"


REGION_CONNECTOR: Dict[RegionLabel, Connector] = {
    RegionLabel.TRUE: Connector.CONST_1,
    RegionLabel.FALSE: Connector.CONST_0,
    RegionLabel.RIGHT: Connector.SECOND,
    RegionLabel.LEFT: Connector.FIRST,
    RegionLabel.OR: Connector.OR,
    RegionLabel.AND: Connector.AND,
}

_CLASSIFICATION: Dict[Tuple[int, int, int], RegionLabel] = {
    (1, 1, 1): RegionLabel.TRUE,
    (0, 0, 0): RegionLabel.FALSE,
    (0, 0, 1): RegionLabel.RIGHT,
    (0, 1, 1): RegionLabel.RIGHT,
    (1, 0, 0): RegionLabel.LEFT,
    (1, 1, 0): RegionLabel.LEFT,
    (1, 0, 1): RegionLabel.OR,
    (0, 1, 0): RegionLabel.AND,
}


def classify_point(in_a: int, in_y: int, in_b: int) -> RegionLabel:
    """Region of a point from its membership bits in ``a``, ``y``, ``b``."""
    return _CLASSIFICATION[(int(bool(in_a)), int(bool(in_y)), int(bool(in_b)))]


def eval_connector(connector: Connector, x_bit: int, z_bit: int) -> int:
    x_bit, z_bit = int(bool(x_bit)), int(bool(z_bit))
    if connector is Connector.CONST_1:
        return 1
    if connector is Connector.CONST_0:
        return 0
    if connector is Connector.SECOND:
        return z_bit
    if connector is Connector.FIRST:
        return x_bit
    if connector is Connector.OR:
        return x_bit | z_bit
    return x_bit & z_bit


class RegionPartition(BaseModel):
    """Region of every point of ``{0, ..., n-1}``."""

    model_config = ConfigDict(frozen=True)

    universe_size: int
    labels: Tuple[RegionLabel, ...]

    def mask(self, region: RegionLabel) -> int:
        """The region as a subset bit mask."""
        bits = 0
        for i, label in enumerate(self.labels):
            if label is region:
                bits |= 1 << i
        return bits

    def points(self, region: RegionLabel) -> List[int]:
        return [i for i, label in enumerate(self.labels) if label is region]

    def masks(self) -> Dict[RegionLabel, int]:
        return {region: self.mask(region) for region in RegionLabel}


def _require_powerset(lattice: PowerSetLattice) -> None:
    if not isinstance(lattice, PowerSetLattice):
        raise DomainError(f"region decomposition needs a power set, got {lattice.name}")


def region_masks(lattice: PowerSetLattice, a: int, y: int, b: int) -> Dict[RegionLabel, int]:
    """Bit masks of the six regions computed by set algebra."""
    _require_powerset(lattice)
    lattice.require(a, y, b)
    full = lattice.full
    return {
        RegionLabel.TRUE: a & y & b,
        RegionLabel.FALSE: full & ~(a | y | b),
        RegionLabel.RIGHT: b & ~a,
        RegionLabel.LEFT: a & ~b,
        RegionLabel.OR: a & b & ~y,
        RegionLabel.AND: y & ~(a | b),
    }


def partition(lattice: PowerSetLattice, a: int, y: int, b: int) -> RegionPartition:
    """Classify every point of the universe."""
    _require_powerset(lattice)
    lattice.require(a, y, b)
    labels = tuple(
        classify_point(a >> i & 1, y >> i & 1, b >> i & 1)
        for i in range(lattice.universe_size)
    )
    return RegionPartition(universe_size=lattice.universe_size, labels=labels)


def product_via_partition(
    lattice: PowerSetLattice, a: int, y: int, b: int, x: int, z: int
) -> int:
    """``x . z`` assembled region by region from the connectors."""
    lattice.require(x, z)
    masks = region_masks(lattice, a, y, b)
    return (
        masks[RegionLabel.TRUE]
        | masks[RegionLabel.RIGHT] & z
        | masks[RegionLabel.LEFT] & x
        | masks[RegionLabel.OR] & (x | z)
        | masks[RegionLabel.AND] & x & z
    )


def bottom_top(spec: ProductSpec) -> Tuple[int, int]:
    """``(bottom, top complement)`` of a hexad product on a power set.

    ``bottom`` is the set where the product is constantly 1 and the top
    complement the set where it is constantly 0; opposite vertices agree.
    """
    lattice = spec.lattice
    _require_powerset(lattice)  # type: ignore[arg-type]
    bottom, top = product_bounds(spec)
    return bottom, lattice.complement(top)


def _periodicity_pairs(
    lattice: PowerSetLattice, a: int, y: int, b: int, x: int, z: int, literal: bool
) -> List[Tuple[str, int, int]]:
    m, j = lattice.raw_meet, lattice.raw_join
    x_shift, z_shift = (a & y, b & y) if literal else (b & y, a & y)
    product = big_l(m, j, x, a, y, b, z)
    return [
        ("x shifted", big_l(m, j, x | x_shift, a, y, b, z), product),
        ("z shifted", big_l(m, j, x, a, y, b, z | z_shift), product),
    ]


def check_periodicity(
    lattice: PowerSetLattice,
    a: Optional[int] = None,
    y: Optional[int] = None,
    b: Optional[int] = None,
    x: Optional[int] = None,
    z: Optional[int] = None,
    literal: bool = False,
    params: Optional[SearchParameters] = None,
) -> CheckReport:
    """``(x v (b ^ y)) . z = x . z`` and ``x . (z v (a ^ y)) = x . z``.

    Given all five sets the check runs at that point; otherwise it runs over
    all quintuples of the power set, or seeded samples when that exceeds
    the budget. ``literal=True`` checks the variant with ``a`` and ``b``
    exchanged, which fails on the left region.
    """
    _require_powerset(lattice)
    params = params or resolve_parameters()
    check = "periodicity (literal)" if literal else "periodicity"
    point = (x, a, y, b, z)

    def predicate(x: int, a: int, y: int, b: int, z: int) -> Optional[Dict[str, Any]]:
        return pairs_differ(_periodicity_pairs(lattice, a, y, b, x, z, literal))

    if all(v is not None for v in point):
        lattice.require(*point)
        differing = predicate(*point)  # type: ignore[arg-type]
        return point_report(check, lattice.name, QUINTUPLE_LABELS, point, differing, 2)
    domain_or_sampler = (
        lattice.enumerate()
        if lattice.size() ** 5 <= params.budget
        else (lambda rng: lattice.sample(rng, params.window))
    )
    return search_tuples(
        check, lattice.name, domain_or_sampler, 5, predicate, params, QUINTUPLE_LABELS
    )
