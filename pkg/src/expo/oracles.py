"""
Brute-Force Oracles for e(m, P)

Three exhaustive counts, each independent of inclusion-exclusion:
isotone maps into nonempty subsets of an m-set, partial orders on M ∪ K
extending P with Min = M, and m-tuples of upsets covering the ground set.
"""

import logging
from itertools import product
from typing import Iterator, Optional, Tuple

from src.counting.downsets import upsets
from src.exceptions import BudgetExceeded, PosetError
from src.poset.bits import bit, full_mask, iter_bits, submasks
from src.poset.poset import Poset, linear_extension, minimal_points
from src.settings import get_settings

logger = logging.getLogger(__name__)

# Largest m + k for which orders are enumerated
MAX_ORDER_POINTS = 7


def _budget(budget: Optional[int]) -> int:
    return get_settings().oracle_budget if budget is None else budget


def isotone_maps(m: int, P: Poset) -> Iterator[Tuple[int, ...]]:
    """Yield every map x -> f(x) ⊆ {0..m-1}, f(x) nonempty, x <= y implies f(x) ⊆ f(y).

    Maps are tuples indexed by point; each value is a subset mask.
    """
    everything = full_mask(m)
    values = [0] * P.size
    order = linear_extension(P)

    def assign(position: int) -> Iterator[Tuple[int, ...]]:
        if position == len(order):
            yield tuple(values)
            return
        x = order[position]
        floor = 0
        for below in iter_bits(P.strict_down(x)):
            floor |= values[below]
        for extra in submasks(everything & ~floor):
            value = floor | extra
            if value:
                values[x] = value
                yield from assign(position + 1)

    yield from assign(0)


def e_oracle_maps(m: int, P: Poset, budget: Optional[int] = None) -> int:
    """e(m, P) as the number of isotone maps into nonempty subsets.

    Raises:
        BudgetExceeded: If (2^m - 1)^k exceeds the budget
    """
    cap = _budget(budget)
    candidates = (2 ** m - 1) ** P.size
    if candidates > cap:
        raise BudgetExceeded(f"{candidates} candidate maps exceed the budget of {cap}")
    return sum(1 for _ in isotone_maps(m, P))


def extensions(m: int, P: Poset, budget: Optional[int] = None) -> Iterator[Tuple[Poset, Tuple[int, ...]]]:
    """Yield (Q, embedding) for every Q in E(M, P).

    M occupies points 0..m-1 of Q and point x of P sits at m + x. Every
    relation set R ⊆ M × K is tried; Q must be a partial order whose
    minimal points are exactly M.

    Raises:
        BudgetExceeded: If m + k is too large for exhaustive search
    """
    k = P.size
    cap = _budget(budget)
    if m + k > MAX_ORDER_POINTS or 2 ** (m * k) > cap:
        raise BudgetExceeded(f"Order enumeration on {m} + {k} points exceeds the search bound")
    embedding = tuple(m + x for x in range(k))
    upper = tuple(mask << m for mask in P.up)
    wanted = full_mask(m)
    for rows in product(range(1 << k), repeat=m):
        up = tuple(bit(i) | (row << m) for i, row in enumerate(rows)) + upper
        try:
            Q = Poset(m + k, up)
        except PosetError:
            continue
        if minimal_points(Q) == wanted:
            yield Q, embedding


def e_oracle_orders(m: int, P: Poset, budget: Optional[int] = None) -> int:
    """e(m, P) as the number of extensions Q in E(M, P)."""
    return sum(1 for _ in extensions(m, P, budget))


def e_oracle_upsets(m: int, P: Poset, budget: Optional[int] = None) -> int:
    """e(m, P) as the number of m-tuples of upsets whose union is K.

    Raises:
        BudgetExceeded: If d(P)^m exceeds the budget
    """
    family = list(upsets(P))
    cap = _budget(budget)
    if len(family) ** m > cap:
        raise BudgetExceeded(f"{len(family) ** m} upset tuples exceed the budget of {cap}")
    ground = P.ground
    count = 0
    for choice in product(family, repeat=m):
        union = 0
        for U in choice:
            union |= U
        if union == ground:
            count += 1
    return count
