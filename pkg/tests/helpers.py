"""Independent reference implementations for cross-checking.

Everything here is written directly from the definitions on plain ints,
frozensets, and explicit edge sets — deliberately brute-force and free of
package imports — so tests can compare the production code against an
implementation that shares none of its shortcuts.
"""

import math
from itertools import combinations


def ref_reduce(n, values):
    out = set()
    for v in values:
        v %= n
        out.add(n - v if v > n // 2 else v)
    return frozenset(out)


def ref_units(n):
    return [x for x in range(1, n) if math.gcd(x, n) == 1]


def ref_totient(n):
    return sum(1 for x in range(1, n) if math.gcd(x, n) == 1)


def ref_edges(n, jumps):
    edges = set()
    for x in range(n):
        for r in jumps:
            y = (x + r) % n
            edges.add(frozenset((x, y)))
    return frozenset(edges)


def ref_theta_edges(n, m, t, jumps):
    """Map every realized edge through v -> v + (v mod m).t.m."""
    out = set()
    for edge in ref_edges(n, jumps):
        a, b = sorted(edge)
        fa = (a + (a % m) * t * m) % n
        fb = (b + (b % m) * t * m) % n
        out.add(frozenset((fa, fb)))
    return frozenset(out)


def ref_detect(n, edges):
    """Vertex-0 neighborhood candidate, accepted only on exact realization."""
    nbrs = set()
    for edge in edges:
        if 0 in edge:
            nbrs.add(max(edge))
    cand = ref_reduce(n, nbrs)
    if 0 in cand:
        return None
    if ref_edges(n, cand) == edges:
        return cand
    return None


def ref_orbit(n, jumps):
    return {ref_reduce(n, {x * r for r in jumps}) for x in ref_units(n)}


def ref_enumerate_pairs(n, m, min_size=3):
    """Full-scan reference enumeration: every admissible R, every t, explicit
    edge sets throughout.  Returns unordered pairs of frozensets."""
    half = n // 2
    pairs = set()
    for size in range(min_size, half + 1):
        for picked in combinations(range(1, half + 1), size):
            R = frozenset(picked)
            if not any(r % m == 0 for r in R):
                continue
            orb = None
            for t in range(1, n // m):
                image = ref_theta_edges(n, m, t, R)
                S = ref_detect(n, image)
                if S is None or S == R:
                    continue
                if orb is None:
                    orb = ref_orbit(n, R)
                if S in orb:
                    continue
                pairs.add(frozenset((R, S)))
    return pairs
