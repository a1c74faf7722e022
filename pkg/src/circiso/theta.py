"""The residue-class rotation map on circulant graph vertices.

For a modulus m with m**3 | n and a shift parameter t, the vertex map
sends v_x to v_{x + j.t.m} where j = x mod m: each residue class mod m
is rotated by its own multiple of t.m.  Jumps divisible by m are left
untouched; the other jumps move, and for particular t the transformed
edge set is again circulant with a jump set not obtainable by unit
multiplication — the second isomorphism mechanism this package exists
to enumerate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circulant import ConnectionSet, EdgeSet, realize
from .errors import DomainError
from .modring import check_order, reduce_one, reflexive_reduce


@dataclass(frozen=True)
class ThetaParams:
    """Transformation triple (n, m, t) with m > 1, m**3 | n, 0 <= t <= n/m - 1."""

    n: int
    m: int
    t: int

    def __post_init__(self) -> None:
        check_order(self.n)
        if self.m <= 1:
            raise DomainError(f"modulus m must exceed 1, got {self.m}")
        if self.n % (self.m ** 3) != 0:
            raise DomainError(f"m**3 = {self.m ** 3} does not divide n = {self.n}")
        if not 0 <= self.t <= self.n // self.m - 1:
            raise DomainError(f"shift t = {self.t} outside [0, {self.n // self.m - 1}]")


@dataclass(frozen=True)
class ThetaImage:
    """Result of applying the map to a graph: the image edges and, when the
    image is circulant, its connection set."""

    params: ThetaParams
    source: ConnectionSet
    image_edges: EdgeSet
    circulant_result: ConnectionSet | None


def vertex_map(params: ThetaParams, x: int) -> int:
    """Image of vertex x: (x + (x mod m).t.m) mod n."""
    n, m, t = params.n, params.m, params.t
    if not 0 <= x < n:
        raise DomainError(f"vertex index {x} outside [0, {n})")
    return (x + (x % m) * t * m) % n


def jump_shortcut(params: ThetaParams, cs: ConnectionSet) -> frozenset[int]:
    """Reduced difference set of vertex 0's image neighborhood.

    Computed directly from the jumps: {s + (s mod m).t.m : s in R u (n-R)}
    reduced.  This is the circulant candidate, not a circularity proof.
    """
    if cs.n != params.n:
        raise DomainError(f"mismatched orders {cs.n} and {params.n}")
    n, m, t = params.n, params.m, params.t
    residues = set(cs.jumps) | {n - r for r in cs.jumps}
    return reflexive_reduce(n, ((s + (s % m) * t * m) for s in residues))


def image_jumps(params: ThetaParams, cs: ConnectionSet) -> ConnectionSet | None:
    """Jump set of the image graph when the image is circulant, else None.

    Jumps divisible by m are fixed.  Every other jump r with class
    c = r mod m contributes the two reduced values r + c.t.m and
    r + c.t.m - t.m**2; the image is circulant exactly when those
    contributions collapse back to as many distinct jumps as moved.
    Edge-level equality of this criterion is enforced by ``apply`` and
    cross-checked in the test suite.
    """
    if cs.n != params.n:
        raise DomainError(f"mismatched orders {cs.n} and {params.n}")
    n, m, t = params.n, params.m, params.t
    fixed = []
    moved = set()
    moving_count = 0
    for r in cs.jumps:
        c = r % m
        if c == 0:
            fixed.append(r)
        else:
            moving_count += 1
            base = r + c * t * m
            moved.add(reduce_one(n, base))
            moved.add(reduce_one(n, base - t * m * m))
    if len(moved) != moving_count:
        return None
    return ConnectionSet(n, tuple(sorted(moved.union(fixed))))


def detect_circulant(edge_set: EdgeSet) -> ConnectionSet | None:
    """Recover a connection set from explicit edges, or None.

    The candidate is the reduced difference set of vertex 0's neighborhood;
    it is returned only when its realization reproduces the edge set exactly.
    """
    nbrs = edge_set.neighbors(0)
    candidate = reflexive_reduce(edge_set.n, nbrs)
    if 0 in candidate:
        # a self-loop difference cannot arise from a vertex bijection
        return None
    cs = ConnectionSet(edge_set.n, tuple(sorted(candidate)))
    if realize(cs).edges == edge_set.edges:
        return cs
    return None


def apply(params: ThetaParams, cs: ConnectionSet) -> ThetaImage:
    """Map every edge of the realized graph and test the image for circularity.

    Circularity is decided by full edge-set equality against the realized
    candidate, never by the jump shortcut alone.
    """
    if cs.n != params.n:
        raise DomainError(f"mismatched orders {cs.n} and {params.n}")
    n = params.n
    source_edges = realize(cs)
    mapped = set()
    for a, b in source_edges.edges:
        fa = vertex_map(params, a)
        fb = vertex_map(params, b)
        assert fa != fb
        mapped.add((fa, fb) if fa < fb else (fb, fa))
    image = EdgeSet(n, frozenset(mapped))
    assert len(image.edges) == len(source_edges.edges)
    result = detect_circulant(image)
    return ThetaImage(params=params, source=cs, image_edges=image, circulant_result=result)
