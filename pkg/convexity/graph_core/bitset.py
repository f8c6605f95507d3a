"""
Bit-mask helpers.

Vertex sets are Python ints: bit v is set iff vertex v is a member.
"""

from collections.abc import Iterable, Iterator


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def lowest_bit(mask: int) -> int:
    """Index of the lowest set bit; mask must be non-zero."""
    return (mask & -mask).bit_length() - 1


def k_subsets(positions: list[int], k: int) -> Iterator[int]:
    """
    Yield every k-subset of positions as a mask, in increasing integer order.

    Gosper's hack runs over compressed indices; because positions are sorted
    ascending, compressed order and mask order coincide.
    """
    size = len(positions)
    if k < 0 or k > size:
        return
    if k == 0:
        yield 0
        return
    limit = 1 << size
    x = (1 << k) - 1
    while x < limit:
        mask = 0
        y = x
        while y:
            low = y & -y
            mask |= 1 << positions[low.bit_length() - 1]
            y ^= low
        yield mask
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r
