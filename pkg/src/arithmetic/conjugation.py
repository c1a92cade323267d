"""Conjugate divisors ``d -> KN/d`` and the conjugate product."""

import logging
from typing import Any, Dict, Optional, Tuple

from src.identities.report import CheckReport, combine_reports
from src.identities.search import SearchParameters, resolve_parameters, search_tuples
from src.shared.errors import DomainError
from src.shared.number_theory import divisors

from .periods import PeriodData, periods, principal_product

logger = logging.getLogger(__name__)


def _positive_periods(a: int, y: int, b: int) -> PeriodData:
    if min(a, y, b) < 1:
        raise DomainError(f"conjugation needs a, y, b >= 1, got ({a}, {y}, {b})")
    return periods(a, y, b)


def gamma(a: int, y: int, b: int, d: int) -> int:
    """The conjugate divisor ``KN/d``.

    Raises:
        DomainError: If ``d`` does not divide ``KN``
    """
    data = _positive_periods(a, y, b)
    kn = data.K * data.N
    if d < 1 or kn % d:
        raise DomainError(f"{d} does not divide KN = {kn}", d)
    return kn // d


def conjugate_triple(a: int, y: int, b: int) -> Tuple[int, int, int]:
    """Parameters ``(b', y', a')`` of the conjugate product."""
    return gamma(a, y, b, b), gamma(a, y, b, y), gamma(a, y, b, a)


def check_conjugation_iso(
    a: int, y: int, b: int, params: Optional[SearchParameters] = None
) -> CheckReport:
    """gamma(u . v) = gamma(u) .' gamma(v) on the divisors of KN and on [K, N]."""
    data = _positive_periods(a, y, b)
    params = params or resolve_parameters()
    mul = principal_product(a, y, b)
    conj = principal_product(*conjugate_triple(a, y, b))
    kn = data.K * data.N

    def predicate(u: int, v: int) -> Optional[Dict[str, Any]]:
        left = kn // mul(u, v)
        right = conj(kn // u, kn // v)
        if left != right:
            return {"gamma(u.v)": left, "gamma(u).'gamma(v)": right}
        return None

    name = f"arithmetic({a},{y},{b})"
    full = divisors(kn)
    interval = [d for d in divisors(data.N) if d % data.K == 0]
    reports = [
        search_tuples("conjugation on [1, KN]", name, full, 2, predicate, params, ("u", "v")),
        search_tuples("conjugation on [K, N]", name, interval, 2, predicate, params, ("u", "v")),
    ]
    return combine_reports("conjugation isomorphism", name, reports)
