"""
Subset Masks

Subsets of a ground set 0..k-1 are plain Python ints with bit x set when
point x is a member. These helpers keep the bit twiddling in one place.
"""

from typing import Iterable, Iterator, List

MAX_POINTS = 64


def bit(x: int) -> int:
    return 1 << x


def full_mask(k: int) -> int:
    """Mask of the whole ground set 0..k-1."""
    return (1 << k) - 1


def mask_of(points: Iterable[int]) -> int:
    mask = 0
    for x in points:
        mask |= 1 << x
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield member points in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def indices(mask: int) -> List[int]:
    return list(iter_bits(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    """Index of the lowest member; mask must be nonzero."""
    return (mask & -mask).bit_length() - 1


def compress(mask: int, keep: int) -> int:
    """Re-express mask relative to keep, renumbering kept points 0..#keep-1."""
    result = 0
    position = 0
    for x in iter_bits(keep):
        if mask >> x & 1:
            result |= 1 << position
        position += 1
    return result


def expand(mask: int, keep: int) -> int:
    """Inverse of compress: map positions inside keep back to original points."""
    result = 0
    for position, x in enumerate(iter_bits(keep)):
        if mask >> position & 1:
            result |= 1 << x
    return result


def submasks(mask: int) -> Iterator[int]:
    """Yield every subset of mask, the empty set first and mask itself last."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def format_mask(mask: int) -> str:
    """Render a mask as a sorted index list, e.g. ``{0,2}``."""
    return "{" + ",".join(str(x) for x in iter_bits(mask)) + "}"
