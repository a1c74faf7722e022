"""Pair classification: identical, unit-multiplication, or rotation-map isomorphism.

The decision procedure mirrors the three-step scheme the tabulations use:
equal reduced sets first, then the unit search (Type-1 takes precedence),
then the residue-class rotation search over every admissible modulus m and
shift t, in both directions.  A pair that survives all three is reported as
not isomorphic *by these methods* — the mechanisms are sound, not complete.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .adam import orbit, type1_witness
from .circulant import ConnectionSet
from .errors import DomainError
from .modring import valid_type2_moduli
from .theta import ThetaParams, apply, image_jumps


@dataclass(frozen=True)
class Identical:
    pass


@dataclass(frozen=True)
class Type1:
    witness_x: int


@dataclass(frozen=True)
class Type2:
    m: int
    witness_t: int
    image_check: bool
    reverse: bool = False  # witness maps B to A rather than A to B


@dataclass(frozen=True)
class NotIsomorphicByTheseMethods:
    pass


PairClassification = Union[Identical, Type1, Type2, NotIsomorphicByTheseMethods]


def _type2_search(a: ConnectionSet, b: ConnectionSet) -> tuple[int, int] | None:
    """Smallest (m, t) whose rotation map sends a to b, edge-verified."""
    if len(a.jumps) != len(b.jumps) or len(a.jumps) < 3:
        return None
    shared = set(a.jumps) & set(b.jumps)
    for m in valid_type2_moduli(a.n, a.jumps):
        # the mechanism needs a jump divisible by m on both sides; the map
        # fixes such jumps, so it must be shared
        if not any(r % m == 0 for r in shared):
            continue
        for t in range(1, a.n // m):
            params = ThetaParams(a.n, m, t)
            if image_jumps(params, a) == b:
                confirmed = apply(params, a).circulant_result == b
                assert confirmed, "jump-level image disagreed with edge-level image"
                return m, t
    return None


def classify_pair(a: ConnectionSet, b: ConnectionSet) -> PairClassification:
    """Classify an unordered pair with deterministic smallest witnesses.

    Precedence: Identical, then Type-1 (smallest unit), then Type-2
    (smallest (m, t), searching a->b before b->a).  Type-2 is only
    reported when no unit maps a to b.
    """
    if a.n != b.n:
        raise DomainError(f"mismatched orders {a.n} and {b.n}")
    if a == b:
        return Identical()
    x = type1_witness(a, b)
    if x is not None:
        return Type1(witness_x=x)
    hit = _type2_search(a, b)
    if hit is not None:
        return Type2(m=hit[0], witness_t=hit[1], image_check=True)
    hit = _type2_search(b, a)
    if hit is not None:
        return Type2(m=hit[0], witness_t=hit[1], image_check=True, reverse=True)
    return NotIsomorphicByTheseMethods()


def type2_partners(a: ConnectionSet) -> list[tuple[int, int, ConnectionSet]]:
    """Every distinct circulant image outside the unit orbit, with smallest (m, t).

    Requires at least three jumps; returns [(m, t, partner), ...] sorted by
    the (m, t) witness.
    """
    if len(a.jumps) < 3:
        raise DomainError("rotation-map partners are defined for at least 3 jumps")
    members = orbit(a).members
    found: dict[ConnectionSet, tuple[int, int]] = {}
    for m in valid_type2_moduli(a.n, a.jumps):
        for t in range(1, a.n // m):
            params = ThetaParams(a.n, m, t)
            image = image_jumps(params, a)
            if image is None or image == a or image in members:
                continue
            if image not in found:
                assert apply(params, a).circulant_result == image
                found[image] = (m, t)
    return sorted(((m, t, cs) for cs, (m, t) in found.items()), key=lambda e: (e[0], e[1], e[2].jumps))


def extend_pair(
    a: ConnectionSet, b: ConnectionSet, m: int, extra: set[int]
) -> tuple[ConnectionSet, ConnectionSet]:
    """Adjoin jumps divisible by m to both sides of a Type-2 pair.

    The extended pair is isomorphic (the rotation map fixes every added
    jump) but may classify Type-1; no Type-2 promise is made.
    """
    if a.n != b.n:
        raise DomainError(f"mismatched orders {a.n} and {b.n}")
    half = a.n // 2
    for v in extra:
        if v % m != 0:
            raise DomainError(f"extension jump {v} is not a multiple of {m}")
        if not 1 <= v <= half:
            raise DomainError(f"extension jump {v} outside [1, {half}]")
        if v in a.jumps or v in b.jumps:
            raise DomainError(f"extension jump {v} already present")
    ea = ConnectionSet(a.n, tuple(sorted(set(a.jumps) | extra)))
    eb = ConnectionSet(b.n, tuple(sorted(set(b.jumps) | extra)))
    return ea, eb
