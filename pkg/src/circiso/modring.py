"""Exact arithmetic on Z_n: reflexive reduction, units, and modulus gates.

The reflexive reduction of a value v maps it to the representative of
{v mod n, n - v mod n} lying in [0, n/2].  Jump sets of circulant graphs
are always handled in this reduced form.
"""

from __future__ import annotations

import math
from typing import Iterable

from .errors import DomainError

# Orders are capped so that 64-bit intermediate products never overflow
# and subset scans stay at desk scale.
MAX_ORDER = 1 << 20
MIN_ORDER = 3


def check_order(n: int) -> int:
    """Validate a graph order, returning it unchanged."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"order must be an integer, got {n!r}")
    if not MIN_ORDER <= n <= MAX_ORDER:
        raise DomainError(f"order must be in [{MIN_ORDER}, {MAX_ORDER}], got {n}")
    return n


def reduce_one(n: int, v: int) -> int:
    """Reflexively reduce a single integer into [0, n/2]."""
    v %= n
    return n - v if 2 * v > n else v


def reflexive_reduce(n: int, values: Iterable[int]) -> frozenset[int]:
    """Reflexively reduce a multiset of integers to a duplicate-free jump set.

    Negative inputs are allowed.  A resulting 0 marks a self-loop jump and is
    kept in the output; callers decide whether that is an error.
    """
    check_order(n)
    half = n // 2
    out = set()
    for v in values:
        v %= n
        out.add(n - v if v > half else v)
    return frozenset(out)


def units(n: int) -> tuple[int, ...]:
    """All x in [1, n) with gcd(x, n) = 1, sorted ascending."""
    check_order(n)
    return tuple(x for x in range(1, n) if math.gcd(x, n) == 1)


def totient(n: int) -> int:
    """Euler's totient via trial-division factorization."""
    check_order(n)
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result -= result // m
    return result


def is_prime(p: int) -> bool:
    """Trial-division primality, adequate for desk-scale parameters."""
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def valid_type2_moduli(n: int, jumps: Iterable[int]) -> list[int]:
    """All m > 1 with m**3 | n and m | gcd(n, r) for at least one jump r.

    The jump set is expected in reduced form.  Returned ascending.
    """
    check_order(n)
    js = set(jumps)
    out = []
    m = 2
    while m * m * m <= n:
        if n % (m * m * m) == 0 and any(math.gcd(n, r) % m == 0 for r in js):
            out.append(m)
        m += 1
    return out
