"""The ternary product ``(xyz) = L(x, a, y, b, z)`` for fixed ``a, b``."""

import logging
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from src.identities.report import CheckReport, combine_reports
from src.identities.search import (
    Domain,
    SearchParameters,
    carrier_or_sampler,
    pairs_differ,
    resolve_parameters,
    search_tuples,
)
from src.lattices.base import Element, LatticeDescriptor
from src.quintary.terms import big_l

logger = logging.getLogger(__name__)


class TernarySpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    lattice: LatticeDescriptor
    a: Element
    b: Element

    @model_validator(mode="after")
    def validate_parameters(self) -> "TernarySpec":
        self.lattice.require(self.a, self.b)
        return self


def eval_ternary(spec: TernarySpec, x: Element, y: Element, z: Element) -> Element:
    """``(xyz)_{ab}``; with y fixed this is the principal binary product."""
    lattice = spec.lattice
    lattice.require(x, y, z)
    return big_l(lattice.raw_meet, lattice.raw_join, x, spec.a, y, spec.b, z)


def check_torsor_laws(
    spec: TernarySpec,
    domain: Optional[Domain] = None,
    params: Optional[SearchParameters] = None,
) -> CheckReport:
    """Associativity, para-associativity and the middle-operator identities.

    Over ``domain**5``:
    ``((x x' y) z' z) = (x (x' y z') z) = (x (z' y x') z) = (x x' (y z' z))``;
    over ``domain**3``: ``(x (xyz) z) = (xyz) = (x (zyx) z)``.
    """
    params = params or resolve_parameters()
    if domain is None:
        domain = carrier_or_sampler(spec.lattice, params.window)
    m, j = spec.lattice.raw_meet, spec.lattice.raw_join
    a, b = spec.a, spec.b

    def t(x: Element, y: Element, z: Element) -> Element:
        return big_l(m, j, x, a, y, b, z)

    def para(x: Element, x_: Element, y: Element, z_: Element, z: Element) -> Optional[Dict[str, Any]]:
        left = t(t(x, x_, y), z_, z)
        return pairs_differ(
            [
                ("(x (x'yz') z)", left, t(x, t(x_, y, z_), z)),
                ("(x (z'yx') z)", left, t(x, t(z_, y, x_), z)),
                ("(x x' (yz'z))", left, t(x, x_, t(y, z_, z))),
            ]
        )

    def middle(x: Element, y: Element, z: Element) -> Optional[Dict[str, Any]]:
        xyz = t(x, y, z)
        return pairs_differ(
            [
                ("(x (xyz) z)", t(x, xyz, z), xyz),
                ("(x (zyx) z)", t(x, t(z, y, x), z), xyz),
            ]
        )

    name = spec.lattice.name
    check = f"torsor laws (a={spec.a}, b={spec.b})"
    reports = [
        search_tuples(
            "para-associativity", name, domain, 5, para, params, ("x", "x'", "y", "z'", "z")
        ),
        search_tuples("middle operators", name, domain, 3, middle, params, ("x", "y", "z")),
    ]
    return combine_reports(check, name, reports)
