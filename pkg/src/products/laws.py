"""Semigroup laws of the hexad products.

Scalar checks search ``domain**3`` (or ``domain**2``) through the shared
search engine; table checks verify a closed Cayley table in one vectorized
pass.
"""

import logging
from typing import Any, Dict, Optional, Sequence

import numpy as np

from src.identities.report import CheckReport, Counterexample
from src.identities.search import (
    Domain,
    SearchParameters,
    carrier_or_sampler,
    pairs_differ,
    resolve_parameters,
    search_tuples,
)
from src.lattices.base import Element

from .hexad import ProductSpec, product_function

logger = logging.getLogger(__name__)

# Index tables of side n need n**3 cells for the associativity pass.
MAX_TABLE_SIDE = 256


def _domain(spec: ProductSpec, domain: Optional[Domain], params: SearchParameters) -> Domain:
    if domain is not None:
        return domain
    return carrier_or_sampler(spec.lattice, params.window)


def _check_name(law: str, spec: ProductSpec) -> str:
    return f"{law} at {spec.vertex}"


def check_associativity(
    spec: ProductSpec,
    domain: Optional[Domain] = None,
    params: Optional[SearchParameters] = None,
) -> CheckReport:
    """(u . v) . w = u . (v . w) over ``domain**3``."""
    params = params or resolve_parameters()
    mul = product_function(spec)

    def predicate(u: Element, v: Element, w: Element) -> Optional[Dict[str, Any]]:
        return pairs_differ([("associativity", mul(mul(u, v), w), mul(u, mul(v, w)))])

    return search_tuples(
        _check_name("associativity", spec),
        spec.lattice.name,
        _domain(spec, domain, params),
        3,
        predicate,
        params,
        ("u", "v", "w"),
    )


def check_weak_band(
    spec: ProductSpec,
    domain: Optional[Domain] = None,
    params: Optional[SearchParameters] = None,
) -> CheckReport:
    """(u . u) . v = u . v = (u . v) . v and u . (u . v) = u . v = u . (v . v)."""
    params = params or resolve_parameters()
    mul = product_function(spec)

    def predicate(u: Element, v: Element) -> Optional[Dict[str, Any]]:
        uv = mul(u, v)
        return pairs_differ(
            [
                ("(u.u).v", mul(mul(u, u), v), uv),
                ("(u.v).v", mul(uv, v), uv),
                ("u.(u.v)", mul(u, uv), uv),
                ("u.(v.v)", mul(u, mul(v, v)), uv),
            ]
        )

    return search_tuples(
        _check_name("weak band", spec),
        spec.lattice.name,
        _domain(spec, domain, params),
        2,
        predicate,
        params,
        ("u", "v"),
    )


def _table_report(
    check: str,
    name: str,
    carrier: Sequence[Element],
    bad: np.ndarray,
    labels: Sequence[str],
    values: Any,
) -> CheckReport:
    hits = np.argwhere(bad)
    if hits.size == 0:
        return CheckReport(
            check=check, lattice=name, verdict="holds", mode="exhaustive", evaluations=int(bad.size)
        )
    first = tuple(int(i) for i in hits[0])
    arguments = tuple(carrier[i] for i in first)
    logger.warning(f"{check} fails on {name} at {arguments}")
    return CheckReport(
        check=check,
        lattice=name,
        verdict="fails",
        mode="exhaustive",
        evaluations=int(bad.size),
        counterexample=Counterexample(
            labels=tuple(labels),
            arguments=arguments,
            values=values(first),
            index=int(np.ravel_multi_index(first, bad.shape)),
        ),
    )


def index_table(carrier: Sequence[Element], values: Sequence[Sequence[Element]]) -> np.ndarray:
    """Cayley table rewritten as carrier indices.

    Raises:
        ValueError: If some product falls outside the carrier
    """
    position = {u: i for i, u in enumerate(carrier)}
    try:
        return np.array([[position[v] for v in row] for row in values], dtype=np.int64)
    except KeyError as e:
        raise ValueError(f"table is not closed over its carrier: {e.args[0]} is missing") from e


def check_table_associativity(
    name: str, carrier: Sequence[Element], table: np.ndarray
) -> CheckReport:
    """Associativity of a closed index table, all ``n**3`` triples at once."""
    n = len(carrier)
    if n > MAX_TABLE_SIDE:
        raise ValueError(f"table side {n} exceeds {MAX_TABLE_SIDE}")
    left = table[table, :]  # left[i, j, k] = T[T[i, j], k]
    right = table[:, table]  # right[i, j, k] = T[i, T[j, k]]
    bad = left != right

    def values(ijk: Any) -> Dict[str, Any]:
        i, j, k = ijk
        return {
            "(u.v).w": carrier[int(left[i, j, k])],
            "u.(v.w)": carrier[int(right[i, j, k])],
        }

    return _table_report("table associativity", name, carrier, bad, ("u", "v", "w"), values)


def check_table_weak_band(
    name: str, carrier: Sequence[Element], table: np.ndarray
) -> CheckReport:
    """Weak-band law of a closed index table."""
    n = len(carrier)
    idx = np.arange(n)
    square = table[idx, idx]
    uu_v = table[square[:, None], idx[None, :]]
    uv_v = table[table, idx[None, :]]
    u_uv = table[idx[:, None], table]
    u_vv = table[idx[:, None], square[None, :]]
    bad = (uu_v != table) | (uv_v != table) | (u_uv != table) | (u_vv != table)

    def values(ij: Any) -> Dict[str, Any]:
        i, j = ij
        return {
            "u.v": carrier[int(table[i, j])],
            "(u.u).v": carrier[int(uu_v[i, j])],
            "(u.v).v": carrier[int(uv_v[i, j])],
            "u.(u.v)": carrier[int(u_uv[i, j])],
            "u.(v.v)": carrier[int(u_vv[i, j])],
        }

    return _table_report("table weak band", name, carrier, bad, ("u", "v"), values)
