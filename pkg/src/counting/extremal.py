"""
Extremal Downset Counts

Closed-form maxima of d(P) over posets with k points and a fixed number of
minimal points or a fixed height, with their maximizers.
"""

from math import comb, perm
from typing import Tuple

from src.poset.constructions import antichain, cardinal_sum, chain, ordinal_sum
from src.poset.poset import Poset


def max_d_given_minimals(k: int, m: int) -> Tuple[int, int]:
    """(max d(P), number of labeled maximizers) over k-point posets with m minimal points."""
    if not 1 <= m <= k:
        raise ValueError(f"Need 1 <= m <= k, got m={m}, k={k}")
    value = 2 ** (m - 1) + 2 ** (k - 1)
    return value, (comb(k, m) * m if m < k else 1)


def max_d_given_height(k: int, h: int) -> Tuple[int, int]:
    """(max d(P), number of labeled maximizers) over k-point posets of height h."""
    if not 1 <= h <= k:
        raise ValueError(f"Need 1 <= h <= k, got h={h}, k={k}")
    value = 2 ** (k - h) * (h + 1)
    return value, (perm(k, h) if h > 1 else 1)


def minimals_maximizer(k: int, m: int) -> Poset:
    """A_{m-1} + (A_1 ⊕ A_{k-m})."""
    return cardinal_sum(antichain(m - 1), ordinal_sum(antichain(1), antichain(k - m)))


def height_maximizer(k: int, h: int) -> Poset:
    """C_h + A_{k-h}."""
    return cardinal_sum(chain(h), antichain(k - h))


def within_three_quarters(P: Poset, d: int) -> bool:
    """d(P) <= (3/4)·2^k, compared as 4·d <= 3·2^k."""
    return 4 * d <= 3 * 2 ** P.size
