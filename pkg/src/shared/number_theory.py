"""Integer helpers for the arithmetic lattice: checked lcm, trial division.

All inputs are desk-scale 64-bit integers, so factorization is plain trial
division up to the square root.
"""

import math
from functools import reduce
from typing import Dict, Iterable, List

from .errors import ArithmeticOverflowError, DomainError

UINT64_MAX = 2**64 - 1


def check_uint64(value: int) -> int:
    """Return ``value`` if it is a non-negative 64-bit integer.

    Raises:
        ArithmeticOverflowError: If ``value`` is outside ``[0, 2**64 - 1]``
    """
    if value < 0 or value > UINT64_MAX:
        raise ArithmeticOverflowError(f"{value} does not fit in 64 unsigned bits")
    return value


def checked_lcm(u: int, v: int) -> int:
    """Least common multiple with ``lcm(0, x) = 0`` and overflow detection."""
    if u == 0 or v == 0:
        return 0
    result = (u // math.gcd(u, v)) * v
    if result > UINT64_MAX:
        raise ArithmeticOverflowError(f"lcm({u}, {v}) = {result} overflows 64 bits")
    return result


def lcm_all(values: Iterable[int]) -> int:
    """lcm of several integers; the empty lcm is 1."""
    return reduce(checked_lcm, values, 1)


def gcd_all(values: Iterable[int]) -> int:
    """gcd of several integers; the empty gcd is 0."""
    return reduce(math.gcd, values, 0)


def factorize(n: int) -> Dict[int, int]:
    """Prime factorization of ``n >= 1`` as ``{prime: exponent}``.

    Raises:
        DomainError: If ``n < 1``
    """
    if n < 1:
        raise DomainError(f"cannot factor {n}", n)
    factors: Dict[int, int] = {}
    while n % 2 == 0:
        factors[2] = factors.get(2, 0) + 1
        n //= 2
    p = 3
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            return False
        p += 2
    return True


def is_prime_power(n: int) -> bool:
    """True for 1 and for p**k with p prime, k >= 1."""
    if n < 1:
        return False
    return len(factorize(n)) <= 1


def divisors(n: int) -> List[int]:
    """Ascending divisors of ``n >= 1``."""
    if n < 1:
        raise DomainError(f"divisors of {n} are not a finite set", n)
    small: List[int] = []
    large: List[int] = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def prime_power_divisors(n: int) -> List[int]:
    """Ascending prime-power divisors of ``n >= 1``, including 1."""
    result = [1]
    for p, e in factorize(n).items():
        result.extend(p**k for k in range(1, e + 1))
    return sorted(result)
