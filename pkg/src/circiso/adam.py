"""Unit-multiplication isomorphism: x.R orbits and their witnesses.

Multiplying a jump set by a unit x of Z_n induces the vertex bijection
v -> x.v mod n and therefore a graph isomorphism.  Pairs related this
way are Type-1 isomorphic; the orbit of a connection set under all
units is the set of its Type-1 partners.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .circulant import ConnectionSet
from .errors import DomainError
from .modring import units


@dataclass(frozen=True)
class AdamOrbit:
    """Distinct unit-multiples of ``base``; ``witness`` maps each to its smallest unit."""

    base: ConnectionSet
    members: frozenset[ConnectionSet]
    witness: dict[ConnectionSet, int]


def multiply(cs: ConnectionSet, x: int) -> ConnectionSet:
    """The reduced jump set {x.r : r in R}; x must be a unit of Z_n."""
    if math.gcd(x, cs.n) != 1:
        raise DomainError(f"{x} is not a unit modulo {cs.n}")
    out = ConnectionSet.from_values(cs.n, (x * r for r in cs.jumps))
    # unit multiplication is injective on reflexive classes
    assert len(out.jumps) == len(cs.jumps)
    return out


def orbit(cs: ConnectionSet) -> AdamOrbit:
    """All distinct unit-multiples of ``cs`` with smallest-unit witnesses."""
    witness: dict[ConnectionSet, int] = {}
    for x in units(cs.n):
        member = multiply(cs, x)
        if member not in witness:
            witness[member] = x
    return AdamOrbit(base=cs, members=frozenset(witness), witness=witness)


def type1_witness(a: ConnectionSet, b: ConnectionSet) -> int | None:
    """Smallest unit x with x.a = b, or None when no unit works."""
    if a.n != b.n:
        raise DomainError(f"mismatched orders {a.n} and {b.n}")
    if len(a.jumps) != len(b.jumps):
        return None
    target = b
    for x in units(a.n):
        if multiply(a, x) == target:
            return x
    return None
