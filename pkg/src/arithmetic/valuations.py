"""p-adic valuations and the embedding of the arithmetic lattice into the
finite-cofinite algebra of prime powers."""

import math
from typing import Union

from src.lattices.fincof import FinCofSet
from src.shared.errors import DomainError
from src.shared.number_theory import is_prime, prime_power_divisors

Valuation = Union[int, float]


def valuation(p: int, x: int) -> Valuation:
    """Exponent of ``p`` in ``x``; ``math.inf`` for ``x = 0``.

    Raises:
        DomainError: If ``p`` is not prime or ``x`` is negative
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime", p)
    if x < 0:
        raise DomainError(f"valuation of negative {x}", x)
    if x == 0:
        return math.inf
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def lambda_embed(x: int) -> FinCofSet:
    """Prime-power divisors of ``x`` (1 included); all prime powers for 0.

    lcm goes to union and gcd to intersection.
    """
    if x < 0:
        raise DomainError(f"cannot embed negative {x}", x)
    if x == 0:
        return FinCofSet.cofinite_of(())
    return FinCofSet.finite(prime_power_divisors(x))
