"""
Finite Posets

A poset on points 0..k-1 is stored as the tuple of reflexive up-closures:
up[x] is the mask of all y with x <= y. Down-closures are derived once at
construction. Values are immutable and validated on every construction.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Sequence, Tuple

from src.exceptions import CycleError, PosetError
from src.poset.bits import (
    MAX_POINTS, bit, compress, full_mask, iter_bits, popcount,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Poset:
    """Finite partial order on points 0..size-1.

    Attributes:
        size: Number of points k
        up: Reflexive up-closure mask of every point
    """
    size: int
    up: Tuple[int, ...]
    down: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.size <= MAX_POINTS:
            raise PosetError(f"Point count must be between 0 and {MAX_POINTS}, got {self.size}")
        if len(self.up) != self.size:
            raise PosetError(f"Expected {self.size} up-closures, got {len(self.up)}")
        object.__setattr__(self, 'up', tuple(self.up))
        _check_order_axioms(self.size, self.up)
        down = [0] * self.size
        for x, mask in enumerate(self.up):
            for y in iter_bits(mask):
                down[y] |= 1 << x
        object.__setattr__(self, 'down', tuple(down))

    @property
    def ground(self) -> int:
        """Mask of the whole ground set."""
        return full_mask(self.size)

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def strict_up(self, x: int) -> int:
        return self.up[x] & ~bit(x)

    def strict_down(self, x: int) -> int:
        return self.down[x] & ~bit(x)

    def comparable(self, x: int) -> int:
        """Mask of the points comparable with x, x included."""
        return self.up[x] | self.down[x]

    def relation_pairs(self) -> Iterator[Tuple[int, int]]:
        """Strict pairs (x, y) with x < y, in lexicographic order."""
        for x in range(self.size):
            for y in iter_bits(self.strict_up(x)):
                yield x, y

    def __repr__(self) -> str:
        pairs = " ".join(f"{x}<{y}" for x, y in covers(self))
        return f"Poset(k={self.size}{': ' + pairs if pairs else ''})"


def _check_order_axioms(size: int, up: Sequence[int]) -> None:
    ground = full_mask(size)
    for x, mask in enumerate(up):
        if mask & ~ground:
            raise PosetError(f"Up-closure of {x} refers to points outside 0..{size - 1}")
        if not mask >> x & 1:
            raise PosetError(f"Relation is not reflexive at point {x}")
    for x, mask in enumerate(up):
        for y in iter_bits(mask & ~bit(x)):
            if up[y] & ~mask:
                raise PosetError(f"Relation is not transitive through {x} <= {y}")
            if up[y] >> x & 1:
                raise CycleError(f"Points {x} and {y} are related in both directions")


def from_pairs(k: int, relation_pairs: Iterable[Tuple[int, int]]) -> Poset:
    """Build the smallest partial order on 0..k-1 containing the given pairs.

    Raises:
        PosetError: If an index is out of range
        CycleError: If the closure relates two distinct points both ways
    """
    up = [bit(x) for x in range(k)]
    for i, j in relation_pairs:
        if not (0 <= i < k and 0 <= j < k):
            raise PosetError(f"Relation ({i}, {j}) is outside 0..{k - 1}")
        up[i] |= bit(j)
    # Warshall closure over bit rows
    for middle in range(k):
        middle_bit = bit(middle)
        middle_up = up[middle]
        for x in range(k):
            if up[x] & middle_bit:
                up[x] |= middle_up
    for x in range(k):
        for y in iter_bits(up[x] & ~bit(x)):
            if up[y] >> x & 1:
                raise CycleError(f"Relations force {x} <= {y} <= {x}")
    return Poset(k, tuple(up))


def restrict(P: Poset, A: int) -> Poset:
    """Induced poset on A, points renumbered in ascending original order."""
    A &= P.ground
    return Poset(popcount(A), tuple(compress(P.up[x] & A, A) for x in iter_bits(A)))


def remove(P: Poset, A: int) -> Poset:
    """Induced poset on the complement of A."""
    return restrict(P, P.ground & ~A)


def relabel(P: Poset, order: Sequence[int]) -> Poset:
    """Poset whose point i is the point order[i] of P."""
    position = {x: i for i, x in enumerate(order)}
    if sorted(position) != list(range(P.size)):
        raise PosetError("Relabeling must be a permutation of the ground set")
    up = []
    for x in order:
        mask = 0
        for y in iter_bits(P.up[x]):
            mask |= bit(position[y])
        up.append(mask)
    return Poset(P.size, tuple(up))


def up_closure(P: Poset, A: int) -> int:
    result = 0
    for x in iter_bits(A):
        result |= P.up[x]
    return result


def down_closure(P: Poset, A: int) -> int:
    result = 0
    for x in iter_bits(A):
        result |= P.down[x]
    return result


def minimal_points(P: Poset) -> int:
    return sum(bit(x) for x in range(P.size) if P.down[x] == bit(x))


def maximal_points(P: Poset) -> int:
    return sum(bit(x) for x in range(P.size) if P.up[x] == bit(x))


def linear_extension(P: Poset) -> List[int]:
    """A topological order: points sorted by down-closure size, then index."""
    return sorted(range(P.size), key=lambda x: (popcount(P.down[x]), x))


def levels(P: Poset) -> List[int]:
    """Length of the longest chain ending at each point."""
    level = [0] * P.size
    for x in linear_extension(P):
        below = [level[y] for y in iter_bits(P.strict_down(x))]
        level[x] = 1 + max(below, default=0)
    return level


def height(P: Poset) -> int:
    """Maximal cardinality of a chain; 0 for the empty poset."""
    return max(levels(P), default=0)


def is_antichain(P: Poset, A: int) -> bool:
    return all(P.comparable(x) & A == bit(x) for x in iter_bits(A))


def is_downset(P: Poset, A: int) -> bool:
    return down_closure(P, A) == A


def is_upset(P: Poset, A: int) -> bool:
    return up_closure(P, A) == A


def interior(P: Poset, U: int) -> int:
    """Largest downset inside U: K minus the up-closure of K minus U."""
    ground = P.ground
    return ground & ~up_closure(P, ground & ~U)


def covers(P: Poset) -> List[Tuple[int, int]]:
    """Cover pairs (x, y), x < y with nothing strictly between, sorted."""
    result = []
    for x in range(P.size):
        above = P.strict_up(x)
        beyond = 0
        for z in iter_bits(above):
            beyond |= P.strict_up(z)
        result.extend((x, y) for y in iter_bits(above & ~beyond))
    return result


def components(P: Poset) -> List[int]:
    """Connected components of the comparability graph, as masks."""
    remaining = P.ground
    parts = []
    while remaining:
        frontier = remaining & -remaining
        part = 0
        while frontier:
            part |= frontier
            reach = 0
            for x in iter_bits(frontier):
                reach |= P.comparable(x)
            frontier = reach & ~part
        parts.append(part)
        remaining &= ~part
    return parts
