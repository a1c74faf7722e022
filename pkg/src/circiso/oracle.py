"""Independent ground truth: brute-force isomorphism and invariant fingerprints.

Nothing here trusts the unit-multiplication or rotation-map machinery.
The backtracking search works on explicit edge sets; fingerprints combine
order, degree, the rounded spectrum, and per-vertex triangle counts.
Equal fingerprints are necessary for isomorphism, and a differing
spectrum proves non-isomorphism, which is what makes the all-pairs
cross-validation affordable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .adam import type1_witness
from .circulant import ConnectionSet, EdgeSet, degree, realize, spectrum
from .classify import NotIsomorphicByTheseMethods, classify_pair
from .errors import DomainError

DEFAULT_BOUND = 16


@dataclass(frozen=True)
class IsoWitness:
    mapping: tuple[int, ...]
    verified: bool


@dataclass(frozen=True)
class CrossValidation:
    """Outcome of comparing the two mechanisms against brute force.

    ``refutations`` must always be empty: a mechanism witness is an explicit
    isomorphism.  ``missed`` lists isomorphic pairs neither mechanism
    explains; the mechanisms are not claimed complete, so this may be
    nonempty.
    """

    n: int
    m: int
    sets_checked: int
    pairs_compared: int
    refutations: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    missed: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]


def _adjacency_masks(edge_set: EdgeSet) -> list[int]:
    adj = [0] * edge_set.n
    for a, b in edge_set.edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return adj


def verify_mapping(a: EdgeSet, b: EdgeSet, mapping: Sequence[int]) -> bool:
    """Linear-time check that ``mapping`` carries a's edges exactly onto b's."""
    if a.n != b.n or len(mapping) != a.n or len(set(mapping)) != a.n:
        return False
    mapped = set()
    for u, v in a.edges:
        x, y = mapping[u], mapping[v]
        mapped.add((x, y) if x < y else (y, x))
    return mapped == set(b.edges)


def brute_force_isomorphic(
    a: EdgeSet, b: EdgeSet, bound: int = DEFAULT_BOUND
) -> IsoWitness | None:
    """Deterministic backtracking over vertex maps, or None.

    Branches in lexicographic target order; prunes on degree and on
    adjacency consistency with the mapped prefix.  Refuses orders above
    ``bound`` — beyond it, verify explicit witnesses instead of searching.
    """
    if a.n != b.n:
        raise DomainError(f"mismatched orders {a.n} and {b.n}")
    if a.n > bound:
        raise DomainError(
            f"brute-force search is limited to order <= {bound}; "
            f"got {a.n} (raise the bound explicitly if you really mean it)"
        )
    if len(a.edges) != len(b.edges):
        return None
    n = a.n
    adj_a = _adjacency_masks(a)
    adj_b = _adjacency_masks(b)
    deg_a = [m.bit_count() for m in adj_a]
    deg_b = [m.bit_count() for m in adj_b]
    if sorted(deg_a) != sorted(deg_b):
        return None

    mapping = [-1] * n
    used = [False] * n

    def backtrack(v: int) -> bool:
        if v == n:
            return True
        av = adj_a[v]
        for w in range(n):
            if used[w] or deg_b[w] != deg_a[v]:
                continue
            ok = True
            for u in range(v):
                if ((av >> u) & 1) != ((adj_b[w] >> mapping[u]) & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if backtrack(v + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    if not backtrack(0):
        return None
    witness = tuple(mapping)
    assert verify_mapping(a, b, witness)
    return IsoWitness(mapping=witness, verified=True)


def _triangle_profile(edge_set: EdgeSet) -> tuple[int, ...]:
    adj = _adjacency_masks(edge_set)
    counts = []
    for v in range(edge_set.n):
        c = 0
        mask = adj[v]
        while mask:
            low = mask & -mask
            u = low.bit_length() - 1
            mask ^= low
            c += (adj[v] & adj[u]).bit_count()
        counts.append(c // 2)
    return tuple(sorted(counts))


def fingerprint(cs: ConnectionSet) -> tuple:
    """(n, degree, rounded sorted spectrum, sorted triangle counts)."""
    spec = tuple(round(v, 9) for v in spectrum(cs))
    return (cs.n, degree(cs), spec, _triangle_profile(realize(cs)))


def _mechanism_isomorphic(a: ConnectionSet, b: ConnectionSet) -> bool:
    if type1_witness(a, b) is not None:
        return True
    return not isinstance(classify_pair(a, b), NotIsomorphicByTheseMethods)


def cross_validate(n: int, m: int, min_size: int = 3, bound: int = DEFAULT_BOUND) -> CrossValidation:
    """Compare mechanism verdicts with brute force over all pairs at order n.

    Considers every connection set with at least ``min_size`` jumps.  Pairs
    with different fingerprints are non-isomorphic outright (the spectrum is
    an isomorphism invariant); equal-fingerprint pairs go to the search.
    """
    if n > bound:
        raise DomainError(f"cross-validation is limited to order <= {bound}")
    if m <= 1 or n % (m ** 3) != 0:
        raise DomainError(f"need m > 1 with m**3 | n; got n={n}, m={m}")
    half = n // 2
    from itertools import combinations

    sets = []
    for size in range(min_size, half + 1):
        for jumps in combinations(range(1, half + 1), size):
            sets.append(ConnectionSet(n, jumps))

    by_fp: dict[tuple, list[ConnectionSet]] = {}
    for cs in sets:
        by_fp.setdefault(fingerprint(cs), []).append(cs)

    refutations = []
    missed = []
    pairs_compared = 0
    edge_cache: dict[ConnectionSet, EdgeSet] = {}

    def edges(cs: ConnectionSet) -> EdgeSet:
        if cs not in edge_cache:
            edge_cache[cs] = realize(cs)
        return edge_cache[cs]

    for group in by_fp.values():
        for a, b in combinations(group, 2):
            pairs_compared += 1
            mech = _mechanism_isomorphic(a, b)
            oracle = brute_force_isomorphic(edges(a), edges(b), bound=bound) is not None
            if mech and not oracle:
                refutations.append((a.jumps, b.jumps))
            elif oracle and not mech:
                missed.append((a.jumps, b.jumps))

    return CrossValidation(
        n=n,
        m=m,
        sets_checked=len(sets),
        pairs_compared=pairs_compared,
        refutations=tuple(sorted(refutations)),
        missed=tuple(sorted(missed)),
    )
