"""Periods, degenerate triples and value ranges of ``x . z = L(x, a, y, b, z)``
on the non-negative integers."""

import logging
import math
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from src.identities.report import CheckReport, combine_reports, point_report
from src.identities.search import SearchParameters, resolve_parameters, search_tuples
from src.lattices.backends import NUMPY_ARITHMETIC_LIMIT, ArithmeticLattice
from src.products.hexad import ProductSpec, product_function
from src.quintary.terms import big_l
from src.shared.errors import DomainError
from src.shared.number_theory import checked_lcm, divisors, gcd_all, lcm_all

from .valuations import valuation

logger = logging.getLogger(__name__)

ARITHMETIC = ArithmeticLattice()


class PeriodData(BaseModel):
    """Line period ``n``, column period ``m``, square period ``N`` and base ``K``."""

    model_config = ConfigDict(frozen=True)

    a: int
    y: int
    b: int
    n: int
    m: int
    N: int
    K: int

    @property
    def degenerate(self) -> bool:
        return self.N == 0


def _require_triple(a: int, y: int, b: int) -> None:
    for value in (a, y, b):
        if not ARITHMETIC.contains(value):
            raise DomainError(f"{value} is not a non-negative 64-bit integer", value)


def periods(a: int, y: int, b: int) -> PeriodData:
    """n = lcm(y, b), m = lcm(y, a), N = lcm(a, y, b), K = gcd(a, y, b).

    Raises:
        ArithmeticOverflowError: If N overflows 64 bits
    """
    _require_triple(a, y, b)
    return PeriodData(
        a=a,
        y=y,
        b=b,
        n=checked_lcm(y, b),
        m=checked_lcm(y, a),
        N=lcm_all((a, y, b)),
        K=gcd_all((a, y, b)),
    )


def principal_product(a: int, y: int, b: int) -> Callable[[int, int], int]:
    return product_function(ProductSpec.principal(ARITHMETIC, a, y, b))


def product_grid(a: int, y: int, b: int, xs: Sequence[int], zs: Sequence[int]) -> np.ndarray:
    """``values[i, j] = xs[i] . zs[j]`` for the principal product.

    Small arguments go through ``np.lcm``/``np.gcd`` in one pass; larger
    ones fall back to exact Python integers.
    """
    _require_triple(a, y, b)
    largest = max([a, y, b, *xs, *zs, 0])
    if largest < NUMPY_ARITHMETIC_LIMIT:
        x = np.asarray(xs, dtype=np.int64)[:, None]
        z = np.asarray(zs, dtype=np.int64)[None, :]
        return np.asarray(big_l(np.lcm, np.gcd, x, a, y, b, z), dtype=np.int64)
    mul = principal_product(a, y, b)
    return np.array([[mul(x, z) for z in zs] for x in xs], dtype=object)


def _least_period(grid: np.ndarray, bound: int, span: int, axis: int) -> int:
    for d in divisors(bound):
        if axis == 0 and np.array_equal(grid[d : d + span, :span], grid[:span, :span]):
            return d
        if axis == 1 and np.array_equal(grid[:span, d : d + span], grid[:span, :span]):
            return d
    return bound


def effective_periods(a: int, y: int, b: int) -> Tuple[int, int]:
    """Least row and column periods, scanned over one square period.

    Both divide ``(n, m)`` because period sets are closed under gcd.

    Raises:
        DomainError: If N = 0
    """
    data = periods(a, y, b)
    if data.degenerate:
        raise DomainError(f"({a}, {y}, {b}) has N = 0 and no finite period")
    span = data.N
    grid = product_grid(a, y, b, range(span + data.n), range(span + data.m))
    px = _least_period(grid, data.n, span, axis=0)
    pz = _least_period(grid, data.m, span, axis=1)
    logger.debug(f"Effective periods of ({a}, {y}, {b}): {px}, {pz}")
    return px, pz


def check_arithmetic_periodicity(
    a: int, y: int, b: int, window: Optional[int] = None
) -> CheckReport:
    """x = x' mod n and z = z' mod m give equal products, over ``[0, window)**2``.

    The default window is ``2N``.
    """
    data = periods(a, y, b)
    if data.degenerate:
        raise DomainError(f"({a}, {y}, {b}) has N = 0 and no finite period")
    span = window if window is not None else 2 * data.N
    grid = product_grid(a, y, b, range(span + data.n), range(span + data.m))
    base = grid[:span, :span]
    rows = grid[data.n : data.n + span, :span] != base
    cols = grid[:span, data.m : data.m + span] != base
    name = f"arithmetic({a},{y},{b})"
    evaluations = 2 * span * span
    shifts = (("line", rows, data.n, 0), ("column", cols, 0, data.m))
    for label, bad, dx, dz in shifts:
        hits = np.argwhere(bad)
        if hits.size:
            x, z = (int(v) for v in hits[0])
            differing = {
                "period": label,
                "x.z": int(base[x, z]),
                "shifted": int(grid[x + dx, z + dz]),
            }
            return point_report("periodicity", name, ("x", "z"), (x, z), differing, evaluations)
    return point_report("periodicity", name, (), (), None, evaluations)


def degenerate_eval(a: int, y: int, b: int, x: int, z: int) -> int:
    """Closed form of ``x . z`` when ``N = 0``.

    y = 0 gives ``(b ^ z) v (a ^ x)``; otherwise a = 0 gives
    ``z ^ (b v (x ^ y))`` and b = 0 gives ``x ^ (a v (z ^ y))``.

    Raises:
        DomainError: If none of a, y, b is 0
    """
    _require_triple(a, y, b)
    lcm, gcd = checked_lcm, math.gcd
    if y == 0:
        return gcd(lcm(b, z), lcm(a, x))
    if a == 0:
        return lcm(z, gcd(b, lcm(x, y)))
    if b == 0:
        return lcm(x, gcd(a, lcm(z, y)))
    raise DomainError(f"({a}, {y}, {b}) is not degenerate: N = {lcm_all((a, y, b))}")


def prime_power_eval(p: int, exponents: Tuple[int, int, int], x: int, z: int) -> int:
    """``x . z`` for the triple ``(p**i, p**j, p**k)`` with ``exponents = (i, j, k)``,
    computed from the p-adic valuations alone.

    On exponents lcm is max and gcd is min; valuation infinity maps back
    to 0.
    """
    vx, vz = valuation(p, x), valuation(p, z)
    i, j, k = exponents
    e = big_l(max, min, vx, i, j, k, vz)
    return 0 if e == math.inf else p ** int(e)


def corners(a: int, y: int, b: int) -> Dict[str, int]:
    """The products ``0.0 = N``, ``0.1 = b``, ``1.0 = a`` and ``1.1 = K``."""
    mul = principal_product(a, y, b)
    return {f"{x}.{z}": mul(x, z) for x in (0, 1) for z in (0, 1)}


def range_check(
    a: int, y: int, b: int, params: Optional[SearchParameters] = None
) -> CheckReport:
    """K divides every product and every product divides N.

    The four corners are checked first, then seeded samples from the window.
    """
    data = periods(a, y, b)
    if data.degenerate:
        raise DomainError(f"({a}, {y}, {b}) has N = 0; products are unbounded")
    params = params or resolve_parameters()
    mul = principal_product(a, y, b)
    name = f"arithmetic({a},{y},{b})"

    def predicate(x: int, z: int) -> Optional[Dict[str, Any]]:
        value = mul(x, z)
        if value == 0 or value % data.K or data.N % value:
            return {"x.z": value, "K": data.K, "N": data.N}
        return None

    expected = {"0.0": data.N, "0.1": b, "1.0": a, "1.1": data.K}
    found = corners(a, y, b)
    wrong = {k: (found[k], v) for k, v in expected.items() if found[k] != v}
    corner_report = point_report("corners", name, ("a", "y", "b"), (a, y, b), wrong or None, 4)
    lo, hi = params.window
    sampled = search_tuples(
        "value range",
        name,
        lambda rng: rng.randint(max(lo, 0), hi),
        2,
        predicate,
        params,
        ("x", "z"),
    )
    return combine_reports("value range", name, [corner_report, sampled])
