# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernel: subset-image DP over 64-bit jump masks.

Same contract and output as ``_scan_py.scan_family_maps``; restricted to
at most 63 moving jumps (callers fall back to the pure lane beyond that).
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    int __builtin_popcountll(unsigned long long x)
    int __builtin_ctzll(unsigned long long x)


def scan_family_maps(int n, int m, tuple moving, tuple t_values):
    """Scan all nonempty moving-jump subsets against every shift in t_values."""
    cdef int k = len(moving)
    if k > 63:
        raise ValueError("compiled kernel supports at most 63 moving jumps")
    cdef unsigned long long total = 1ULL << k
    cdef unsigned long long pmask, img, low
    cdef unsigned long long *per_bit = NULL
    cdef unsigned long long *image = NULL
    cdef long long evals = 0, circ = 0
    cdef int i, t, r, c, a, b, half
    cdef list hits = []
    cdef dict pos = {r: i for i, r in enumerate(moving)}

    half = n // 2
    per_bit = <unsigned long long *> malloc(k * sizeof(unsigned long long))
    image = <unsigned long long *> malloc(total * sizeof(unsigned long long))
    if per_bit == NULL or image == NULL:
        free(per_bit)
        free(image)
        raise MemoryError()
    try:
        image[0] = 0
        for t in t_values:
            for i in range(k):
                r = moving[i]
                c = r % m
                a = (r + c * t * m) % n
                if 2 * a > n:
                    a = n - a
                b = (r + c * t * m - t * m * m) % n
                if b < 0:
                    b += n
                if 2 * b > n:
                    b = n - b
                per_bit[i] = (1ULL << <int> pos[a]) | (1ULL << <int> pos[b])
            for pmask in range(1, total):
                low = pmask & (~pmask + 1)
                img = image[pmask ^ low] | per_bit[__builtin_ctzll(low)]
                image[pmask] = img
                evals += 1
                if __builtin_popcountll(img) == __builtin_popcountll(pmask):
                    circ += 1
                    if img != pmask:
                        hits.append((int(pmask), int(t), int(img)))
    finally:
        free(per_bit)
        free(image)
    return hits, int(evals), int(circ)
