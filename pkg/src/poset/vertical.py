"""
Vertical Sums

A vertical relation glues a lower poset O on X below an upper poset P on Y
through R ⊆ X × Y. R is valid when OR ∪ RP ⊆ R, read as
    x <=_O x' and x' R y  implies  x R y
    x R y and y <=_P y'   implies  x R y'
so every row R[x] is an upset of P and rows shrink as x moves up in O.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Tuple

from src.exceptions import ClosureError
from src.poset.bits import bit, iter_bits, submasks
from src.poset.constructions import cardinal_sum
from src.poset.poset import Poset, is_upset, linear_extension, up_closure

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerticalRelation:
    """Relation R ⊆ X × Y between a lower and an upper poset, validated eagerly."""
    lower: Poset
    upper: Poset
    pairs: FrozenSet[Tuple[int, int]]
    rows: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, 'pairs', frozenset(self.pairs))
        rows = [0] * self.lower.size
        for x, y in self.pairs:
            if not (0 <= x < self.lower.size and 0 <= y < self.upper.size):
                raise ClosureError(f"Pair ({x}, {y}) lies outside X × Y")
            rows[x] |= bit(y)
        for x, row in enumerate(rows):
            if not is_upset(self.upper, row):
                raise ClosureError(f"Row of lower point {x} is not an upset of the upper poset")
            for above in iter_bits(self.lower.strict_up(x)):
                if rows[above] & ~row:
                    raise ClosureError(
                        f"Lower point {x} <= {above} but misses relations of {above}"
                    )
        object.__setattr__(self, 'rows', tuple(rows))

    @classmethod
    def from_rows(cls, lower: Poset, upper: Poset, rows: Iterable[int]) -> "VerticalRelation":
        pairs = {(x, y) for x, row in enumerate(rows) for y in iter_bits(row)}
        return cls(lower, upper, frozenset(pairs))

    def related_to(self, D: int) -> int:
        """RD: mask of lower points related to some point of D."""
        return sum(bit(x) for x, row in enumerate(self.rows) if row & D)


def vertical_sum(V: VerticalRelation) -> Poset:
    """O ⊕_R P on #X + #Y points, X first."""
    shift = V.lower.size
    up = tuple(mask | (row << shift) for mask, row in zip(V.lower.up, V.rows))
    return Poset(V.lower.size + V.upper.size, up + tuple(mask << shift for mask in V.upper.up))


def _upsets_by_brute_force(P: Poset) -> List[int]:
    return [U for U in submasks(P.ground) if is_upset(P, U)]


def vertical_relations(O: Poset, P: Poset) -> Iterator[VerticalRelation]:
    """Every member of R(O, P); intended for small upper posets."""
    upsets = _upsets_by_brute_force(P)
    order = list(reversed(linear_extension(O)))
    rows = [0] * O.size

    def assign(position: int) -> Iterator[VerticalRelation]:
        if position == len(order):
            yield VerticalRelation.from_rows(O, P, rows)
            return
        x = order[position]
        floor = 0
        for above in iter_bits(O.strict_up(x)):
            floor |= rows[above]
        for U in upsets:
            if U & floor == floor:
                rows[x] = U
                yield from assign(position + 1)
        rows[x] = 0

    yield from assign(0)


def random_vertical_relation(O: Poset, P: Poset, rng: random.Random) -> VerticalRelation:
    """Draw a valid relation: each row is the up-closure of the rows above plus random seeds."""
    density = rng.random()
    rows = [0] * O.size
    for x in reversed(linear_extension(O)):
        seed = sum(bit(y) for y in range(P.size) if rng.random() < density)
        for above in iter_bits(O.strict_up(x)):
            seed |= rows[above]
        rows[x] = up_closure(P, seed)
    return VerticalRelation.from_rows(O, P, rows)


def split_upper(V: VerticalRelation, first: Poset, second: Poset) -> Tuple[VerticalRelation, VerticalRelation]:
    """Split R over an upper poset first + second into two successive gluings.

    Returns (R1, R2) with O ⊕_R (first + second) = (O ⊕_{R1} first) ⊕_{R2} second.
    """
    if cardinal_sum(first, second) != V.upper:
        raise ClosureError("Upper poset is not the cardinal sum of the given parts")
    low_mask = (1 << first.size) - 1
    R1 = VerticalRelation.from_rows(V.lower, first, (row & low_mask for row in V.rows))
    middle = vertical_sum(R1)
    rows2 = [row >> first.size for row in V.rows] + [0] * first.size
    R2 = VerticalRelation.from_rows(middle, second, rows2)
    return R1, R2
