"""
Downset and Antichain Enumeration

Streams downsets, upsets and antichains of a poset, and counts downsets with
the memoized splitting recursion.
"""

import logging
from typing import Dict, Iterator

from src.exceptions import NotAntichain
from src.poset.bits import bit, iter_bits, popcount, submasks
from src.poset.poset import Poset, down_closure, is_antichain, up_closure

logger = logging.getLogger(__name__)

# Largest minimal-point set split on directly; bigger ones use the single-point rule
MIN_SPLIT_LIMIT = 6


def downsets(P: Poset) -> Iterator[int]:
    """Yield every downset once, ascending as integers.

    Points are decided from the highest index down, excluding before
    including, and a branch is entered only if it can still be completed.
    """
    def visit(x: int, chosen: int, required: int, excluded: int) -> Iterator[int]:
        if x < 0:
            yield chosen
            return
        b = bit(x)
        if not required & b:
            yield from visit(x - 1, chosen, required, excluded | b)
        if not P.down[x] & excluded:
            yield from visit(x - 1, chosen | b, required | P.down[x], excluded)

    yield from visit(P.size - 1, 0, 0, 0)


def upsets(P: Poset) -> Iterator[int]:
    """Yield every upset once, as complements of the downsets."""
    ground = P.ground
    for D in downsets(P):
        yield ground & ~D


def antichains(P: Poset) -> Iterator[int]:
    """Yield every antichain once, ascending as integers."""
    def visit(x: int, chosen: int) -> Iterator[int]:
        if x < 0:
            yield chosen
            return
        yield from visit(x - 1, chosen)
        if not P.comparable(x) & chosen:
            yield from visit(x - 1, chosen | bit(x))

    yield from visit(P.size - 1, 0)


def brute_count(P: Poset) -> int:
    """Length of the downset stream."""
    return sum(1 for _ in downsets(P))


class DownsetCounter:
    """Memoized downset counts of the subposets of one fixed poset.

    The memo is keyed by the mask of surviving points and lives as long as
    the counter.
    """

    def __init__(self, P: Poset, split_limit: int = MIN_SPLIT_LIMIT) -> None:
        self.poset = P
        self.split_limit = split_limit
        self._memo: Dict[int, int] = {0: 1}

    def count(self, S: int) -> int:
        """d(P|_S)."""
        cached = self._memo.get(S)
        if cached is not None:
            return cached
        parts = self._components(S)
        if len(parts) > 1:
            result = 1
            for part in parts:
                result *= self.count(part)
        else:
            result = self._split(S)
        self._memo[S] = result
        return result

    def _split(self, S: int) -> int:
        P = self.poset
        minimals = 0
        for x in iter_bits(S):
            if P.down[x] & S == bit(x):
                minimals |= bit(x)
        if popcount(minimals) <= self.split_limit:
            # Sum over B ⊆ Min of d(S - (B ∪ (Min \ B)P))
            total = 0
            for B in submasks(minimals):
                removed = B | up_closure(P, minimals & ~B)
                total += self.count(S & ~removed)
            return total
        pivot = self._pivot(S)
        return self.count(S & ~P.down[pivot]) + self.count(S & ~P.up[pivot])

    def _pivot(self, S: int) -> int:
        best, best_degree = -1, -1
        for x in iter_bits(S):
            degree = popcount(self.poset.comparable(x) & S)
            if degree > best_degree:
                best, best_degree = x, degree
        return best

    def _components(self, S: int) -> list:
        P = self.poset
        parts = []
        remaining = S
        while remaining:
            frontier = remaining & -remaining
            part = 0
            while frontier:
                part |= frontier
                reach = 0
                for x in iter_bits(frontier):
                    reach |= P.comparable(x)
                frontier = reach & S & ~part
            parts.append(part)
            remaining &= ~part
        return parts


def d_count(P: Poset) -> int:
    """Number of downsets of P."""
    return DownsetCounter(P).count(P.ground)


def _split_sum(P: Poset, A: int) -> int:
    counter = DownsetCounter(P)
    ground = P.ground
    total = 0
    for B in submasks(A):
        removed = up_closure(P, A & ~B) | down_closure(P, B)
        total += counter.count(ground & ~removed)
    return total


def d_split(P: Poset, A: int) -> int:
    """d(P) as the sum over B ⊆ A of d(P - ((A\\B)P ∪ PB)) for an antichain A.

    Raises:
        NotAntichain: If two points of A are comparable
    """
    if not is_antichain(P, A):
        raise NotAntichain(f"Split set {A:#x} is not an antichain")
    return _split_sum(P, A)


def d_split_upper_bound(P: Poset, A: int) -> int:
    """The same sum for an arbitrary subset A; never below d(P)."""
    return _split_sum(P, A & P.ground)


def a_count(P: Poset) -> int:
    """Number of antichains, by the include/exclude recursion on the lowest point."""
    memo: Dict[int, int] = {0: 1}

    def count(S: int) -> int:
        cached = memo.get(S)
        if cached is not None:
            return cached
        x = (S & -S).bit_length() - 1
        result = count(S & ~bit(x)) + count(S & ~P.comparable(x))
        memo[S] = result
        return result

    return count(P.ground)
