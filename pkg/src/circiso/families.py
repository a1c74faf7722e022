"""Parametric Type-2 families at order n.p**3 for odd primes p.

For parameters (p, n, x, y) with 1 <= x <= p-1, 0 <= y <= n.p - 1 and
1 <= x + y.p <= n.p**2 - 1, define d_i = (i-1).x.p.n + x + y.p for
i in [1, p].  The i-th member is the order-n.p**3 connection set built
from the multiset

    {p, n.p**3 - p}  u  {k.n.p**2 + d_i : 0 <= k <= p-1}
                     u  {k.n.p**2 - d_i : 1 <= k <= p},

reflexively reduced.  The rotation map with modulus p and shift j.n
carries member i to member i+j (indices mod p), and no two members are
related by unit multiplication, so the p members form a Type-2 class
w.r.t. p.
"""

from __future__ import annotations

from dataclasses import dataclass

from .adam import type1_witness
from .circulant import ConnectionSet
from .errors import DomainError
from .modring import is_prime
from .theta import ThetaParams, apply


@dataclass(frozen=True)
class FamilyParams:
    p: int
    n: int
    x: int
    y: int

    def __post_init__(self) -> None:
        if self.p % 2 == 0 or not is_prime(self.p):
            raise DomainError(f"p must be an odd prime, got {self.p}")
        if self.n < 1:
            raise DomainError(f"n must be positive, got {self.n}")
        if not 1 <= self.x <= self.p - 1:
            raise DomainError(f"x must lie in [1, {self.p - 1}], got {self.x}")
        if not 0 <= self.y <= self.n * self.p - 1:
            raise DomainError(f"y must lie in [0, {self.n * self.p - 1}], got {self.y}")
        base = self.x + self.y * self.p
        if not 1 <= base <= self.n * self.p ** 2 - 1:
            raise DomainError(
                f"x + y.p = {base} outside [1, {self.n * self.p ** 2 - 1}]"
            )

    @property
    def order(self) -> int:
        return self.n * self.p ** 3

    def d_values(self) -> tuple[int, ...]:
        base = self.x + self.y * self.p
        step = self.x * self.p * self.n
        return tuple((i - 1) * step + base for i in range(1, self.p + 1))


@dataclass(frozen=True)
class FamilyCheck:
    """Outcome of verifying one family: the full (i, j) rotation table and
    the absence of unit witnesses between members."""

    params: FamilyParams
    members: tuple[ConnectionSet, ...]
    rotation_table: tuple[tuple[int, int, int, bool], ...]  # (i, j, t, ok)
    unit_free: bool
    passed: bool


def family_generate(fp: FamilyParams) -> list[ConnectionSet]:
    """The p member connection sets of the family, in index order."""
    order = fp.order
    block = fp.n * fp.p ** 2
    members = []
    for d in fp.d_values():
        values = [fp.p, order - fp.p]
        values.extend(k * block + d for k in range(fp.p))
        values.extend(k * block - d for k in range(1, fp.p + 1))
        members.append(ConnectionSet.from_values(order, values))
    return members


def family_verify(fp: FamilyParams) -> FamilyCheck:
    """Check every rotation j carries member i to member i+j, and that no
    unordered member pair has a unit witness."""
    members = family_generate(fp)
    order = fp.order
    table = []
    all_ok = True
    for i in range(1, fp.p + 1):
        for j in range(1, fp.p + 1):
            t = j * fp.n
            target = members[(i + j - 1) % fp.p]
            image = apply(ThetaParams(order, fp.p, t), members[i - 1]).circulant_result
            ok = image == target
            all_ok = all_ok and ok
            table.append((i, j, t, ok))
    unit_free = True
    for i in range(fp.p):
        for j in range(i + 1, fp.p):
            if members[i] == members[j] or type1_witness(members[i], members[j]) is not None:
                unit_free = False
    return FamilyCheck(
        params=fp,
        members=tuple(members),
        rotation_table=tuple(table),
        unit_free=unit_free,
        passed=all_ok and unit_free,
    )
