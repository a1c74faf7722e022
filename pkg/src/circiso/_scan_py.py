"""Pure-Python scan kernel.

Enumerates, for every nonempty subset P of the moving (non-multiple-of-m)
jumps and every shift t, the jump-level image of P under the residue-class
rotation map, emitting the subsets whose image collapses to exactly |P|
distinct jumps.  Images are computed with a subset DP over bitmasks: the
image of P equals the image of P minus its lowest bit, unioned with the
two-jump mask of that bit.

The compiled lane in ``_scan.pyx`` produces identical output; this module
is the fallback selected at import when the extension is unavailable.
"""

from __future__ import annotations

from .modring import reduce_one


def _image_masks(n: int, m: int, moving: tuple[int, ...], t: int) -> list[int]:
    """Per-jump image masks (bit i corresponds to moving[i]) for shift t."""
    pos = {r: i for i, r in enumerate(moving)}
    masks = []
    for r in moving:
        c = r % m
        base = r + c * t * m
        a = reduce_one(n, base)
        b = reduce_one(n, base - t * m * m)
        masks.append((1 << pos[a]) | (1 << pos[b]))
    return masks


def scan_family_maps(
    n: int,
    m: int,
    moving: tuple[int, ...],
    t_values: tuple[int, ...],
) -> tuple[list[tuple[int, int, int]], int, int]:
    """Scan all nonempty moving-jump subsets against every shift in t_values.

    Returns (hits, image_evaluations, circulant_images) where hits are
    (pmask, t, image_mask) triples with image_mask != pmask and equal
    popcount, and circulant_images additionally counts identity images.
    """
    k = len(moving)
    total = 1 << k
    hits: list[tuple[int, int, int]] = []
    evals = 0
    circ = 0
    for t in t_values:
        per_bit = _image_masks(n, m, moving, t)
        image = [0] * total
        for pmask in range(1, total):
            low = pmask & -pmask
            rest = pmask ^ low
            img = image[rest] | per_bit[low.bit_length() - 1]
            image[pmask] = img
            evals += 1
            if img.bit_count() == pmask.bit_count():
                circ += 1
                if img != pmask:
                    hits.append((pmask, t, img))
    return hits, evals, circ
