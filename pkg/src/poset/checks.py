"""
Structural Checks

Randomized sweeps of the order axioms, restriction, duality, closures and
vertical sums over supplied posets.
"""

import logging
import random
from typing import Iterable

from src.poset.bits import expand, iter_bits, popcount, submasks
from src.poset.constructions import cardinal_sum, dual, ordinal_sum, random_poset
from src.poset.poset import (
    Poset, down_closure, maximal_points, minimal_points, restrict, up_closure,
)
from src.poset.vertical import VerticalRelation, random_vertical_relation, split_upper, vertical_sum
from src.report import CheckReport

logger = logging.getLogger(__name__)


def order_axioms_hold(P: Poset) -> bool:
    """Reflexivity, antisymmetry and transitivity checked pair by pair."""
    points = range(P.size)
    for x in points:
        if not P.leq(x, x):
            return False
        for y in points:
            if x != y and P.leq(x, y) and P.leq(y, x):
                return False
            if not P.leq(x, y):
                continue
            for z in points:
                if P.leq(y, z) and not P.leq(x, z):
                    return False
    return True


def _random_mask(rng: random.Random, mask: int) -> int:
    return sum(1 << x for x in iter_bits(mask) if rng.random() < 0.5)


def _closures_hold(P: Poset, A: int, B: int) -> bool:
    for closure in (up_closure, down_closure):
        closed = closure(P, A)
        if closure(P, closed) != closed or A & ~closed:
            return False
        if closed & ~closure(P, A | B):
            return False
    return True


def structure_check(posets: Iterable[Poset], rng: random.Random, samples: int = 4) -> CheckReport:
    """Axioms, restriction composition, duality and closure laws on every poset."""
    report = CheckReport("poset structure")
    axioms = restriction = duality = closures = True
    for P in posets:
        axioms &= order_axioms_hold(P)
        duality &= dual(dual(P)) == P and minimal_points(dual(P)) == maximal_points(P)
        for _ in range(samples):
            A = _random_mask(rng, P.ground)
            B = _random_mask(rng, (1 << popcount(A)) - 1)
            restriction &= restrict(restrict(P, A), B) == restrict(P, expand(B, A))
            closures &= _closures_hold(P, _random_mask(rng, P.ground), _random_mask(rng, P.ground))
    report.add("poset.axioms", axioms)
    report.add("poset.restrict-compose", restriction)
    report.add("poset.dual", duality)
    report.add("poset.closures", closures)
    return report


def vertical_structure_check(rng: random.Random, samples: int = 200, max_points: int = 4) -> CheckReport:
    """Extreme relations give the cardinal and ordinal sums; gluing splits over a cardinal sum."""
    report = CheckReport("vertical sums")
    extremes = associativity = True
    for _ in range(samples):
        O = random_poset(rng.randint(0, max_points), rng)
        first = random_poset(rng.randint(0, max_points // 2), rng)
        second = random_poset(rng.randint(0, max_points // 2), rng)
        P = cardinal_sum(first, second)

        empty = VerticalRelation.from_rows(O, P, [0] * O.size)
        full = VerticalRelation.from_rows(O, P, [P.ground] * O.size)
        extremes &= vertical_sum(empty) == cardinal_sum(O, P)
        extremes &= vertical_sum(full) == ordinal_sum(O, P)

        V = random_vertical_relation(O, P, rng)
        R1, R2 = split_upper(V, first, second)
        associativity &= vertical_sum(R2) == vertical_sum(V)
    report.add("poset.vertical.extremes", extremes, f"{samples} samples")
    report.add("poset.vertical.associativity", associativity, f"{samples} samples")
    return report


def all_subsets_closed(P: Poset) -> bool:
    """Closure laws over every pair A ⊆ B; exhaustive, for small posets."""
    for B in submasks(P.ground):
        for A in submasks(B):
            if not _closures_hold(P, A, B):
                return False
    return True
