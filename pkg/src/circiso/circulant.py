"""Connection sets, explicit edge realization, spectra, and scaling.

A circulant graph of order n is identified by its reduced jump set
R within [1, n//2]: vertices x and y are adjacent iff the reflexive
residue of x - y lies in R.  Two circulant graphs are equal exactly
when their (n, R) pairs match after reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DomainError
from .modring import check_order, reflexive_reduce

# Absolute tolerance for every spectrum comparison in the package.
SPECTRUM_TOL = 1e-9


@dataclass(frozen=True, order=True)
class ConnectionSet:
    """Order n plus a sorted, duplicate-free jump tuple in [1, n//2]."""

    n: int
    jumps: tuple[int, ...]

    def __post_init__(self) -> None:
        check_order(self.n)
        half = self.n // 2
        if list(self.jumps) != sorted(set(self.jumps)):
            raise DomainError(f"jumps must be sorted and duplicate-free: {self.jumps}")
        for r in self.jumps:
            if not 1 <= r <= half:
                raise DomainError(f"jump {r} outside [1, {half}] for order {self.n}")

    @classmethod
    def from_values(cls, n: int, values: Iterable[int]) -> "ConnectionSet":
        """Reduce arbitrary integers into a ConnectionSet; 0-jumps are rejected."""
        reduced = reflexive_reduce(n, values)
        if 0 in reduced:
            raise DomainError("reduction produced a self-loop jump (0); graphs here are simple")
        return cls(n, tuple(sorted(reduced)))

    @classmethod
    def parse(cls, n: int, text: str) -> "ConnectionSet":
        """Parse the comma-separated jump syntax, e.g. ``"1,2,15"`` (order-insensitive)."""
        parts = [p for p in text.replace(" ", "").split(",") if p]
        if not parts:
            raise DomainError("empty jump list")
        try:
            values = [int(p) for p in parts]
        except ValueError as exc:
            raise DomainError(f"bad jump list {text!r}") from exc
        return cls.from_values(n, values)

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.jumps)


@dataclass(frozen=True)
class EdgeSet:
    """Explicit undirected edges {a, b} with 0 <= a < b < n."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for a, b in self.edges:
            if not (0 <= a < b < self.n):
                raise DomainError(f"bad edge ({a}, {b}) for order {self.n}")

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out


def realize(cs: ConnectionSet) -> EdgeSet:
    """Materialize the edge set {{x, x+r mod n} : x in [0, n), r in R}."""
    n = cs.n
    edges = set()
    for x in range(n):
        for r in cs.jumps:
            y = (x + r) % n
            edges.add((x, y) if x < y else (y, x))
    return EdgeSet(n, frozenset(edges))


def degree(cs: ConnectionSet) -> int:
    """Common vertex degree: 2 per jump below n/2, 1 for the n/2 jump."""
    half2 = cs.n // 2 if cs.n % 2 == 0 else -1
    return sum(1 if r == half2 else 2 for r in cs.jumps)


def spectrum(cs: ConnectionSet) -> tuple[float, ...]:
    """Adjacency eigenvalues, sorted ascending with ties preserved.

    lambda_j = sum over jumps r < n/2 of 2 cos(2 pi j r / n), plus (-1)^j
    when n/2 is a jump.
    """
    n = cs.n
    j = np.arange(n)
    vals = np.zeros(n, dtype=float)
    for r in cs.jumps:
        if 2 * r == n:
            vals += (-1.0) ** j
        else:
            vals += 2.0 * np.cos(2.0 * np.pi * j * r / n)
    vals.sort()
    return tuple(float(v) for v in vals)


def cospectral(a: ConnectionSet, b: ConnectionSet, tol: float = SPECTRUM_TOL) -> bool:
    """Whether sorted spectra agree within absolute tolerance ``tol``."""
    if a.n != b.n:
        return False
    sa = np.asarray(spectrum(a))
    sb = np.asarray(spectrum(b))
    return bool(np.max(np.abs(sa - sb)) <= tol)


def scale(cs: ConnectionSet, k: int) -> ConnectionSet:
    """The order-kn graph with every jump multiplied by k."""
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"scale factor must be a positive integer, got {k!r}")
    if k == 1:
        return cs
    return ConnectionSet.from_values(cs.n * k, (k * r for r in cs.jumps))
