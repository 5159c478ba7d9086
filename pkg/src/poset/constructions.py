"""
Poset Constructions

Standard families (antichains, chains, fences, zigzags) and the sum and
duality operations. Sums keep the left operand on indices 0..#X-1 and shift
the right operand by #X.
"""

import random
from typing import Optional

from src.poset.bits import full_mask
from src.poset.poset import Poset, from_pairs


def antichain(k: int) -> Poset:
    """The discrete order A_k."""
    return Poset(k, tuple(1 << x for x in range(k)))


def chain(k: int) -> Poset:
    """The chain C_k with 0 < 1 < ... < k-1."""
    return Poset(k, tuple(full_mask(k) & ~full_mask(x) for x in range(k)))


def cardinal_sum(O: Poset, P: Poset) -> Poset:
    shift = O.size
    return Poset(O.size + P.size, O.up + tuple(mask << shift for mask in P.up))


def ordinal_sum(O: Poset, P: Poset) -> Poset:
    """Every point of O below every point of P."""
    shift = O.size
    upper = full_mask(P.size) << shift
    return Poset(
        O.size + P.size,
        tuple(mask | upper for mask in O.up) + tuple(mask << shift for mask in P.up),
    )


def dual(P: Poset) -> Poset:
    return Poset(P.size, P.down)


def zigzag(k: int) -> Poset:
    """Alternating path on k points: even points are minimal, i < i-1 and i < i+1."""
    pairs = []
    for x in range(0, k, 2):
        if x > 0:
            pairs.append((x, x - 1))
        if x + 1 < k:
            pairs.append((x, x + 1))
    return from_pairs(k, pairs)


def fence(t: int) -> Poset:
    """The fence N_t on 2t points."""
    if t < 1:
        raise ValueError(f"Fence length must be positive, got {t}")
    return zigzag(2 * t)


def is_discrete(P: Poset) -> bool:
    """True when no two distinct points are comparable."""
    return all(mask == 1 << x for x, mask in enumerate(P.up))


def random_poset(k: int, rng: random.Random, density: Optional[float] = None) -> Poset:
    """Transitive closure of random pairs i < j; 0..k-1 is always a linear extension."""
    if density is None:
        density = rng.random()
    pairs = [(i, j) for j in range(k) for i in range(j) if rng.random() < density]
    return from_pairs(k, pairs)
