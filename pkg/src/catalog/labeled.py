"""
Labeled Posets

Streams every partial order on the fixed set {0..k-1} and derives p(k), the
number of labeled posets, along several independent routes.
"""

import logging
from collections import Counter
from math import comb
from typing import Dict, Iterator

from src.catalog.aggregate import aggregate_exp_sum
from src.catalog.enumerate import Catalog
from src.counting.downsets import d_count, downsets, upsets
from src.exceptions import BudgetExceeded, IncompleteCatalog, VerificationError
from src.poset.bits import bit, iter_bits
from src.poset.poset import Poset

logger = logging.getLogger(__name__)

# Largest k for which labeled posets are streamed
MAX_LABELED_K = 5


def _insert_last(P: Poset) -> Iterator[Poset]:
    """Every poset on k + 1 points whose restriction to 0..k-1 is P."""
    k = P.size
    new = bit(k)
    family = list(upsets(P))
    for D in downsets(P):
        allowed = P.ground & ~D
        for x in iter_bits(D):
            allowed &= P.strict_up(x)
        for U in family:
            if U & ~allowed:
                continue
            up = [mask | new if D >> x & 1 else mask for x, mask in enumerate(P.up)]
            yield Poset(k + 1, tuple(up) + (new | U,))


def _stream(k: int) -> Iterator[Poset]:
    if k == 0:
        yield Poset(0, ())
        return
    for P in _stream(k - 1):
        yield from _insert_last(P)


def labeled_enumerate(k: int) -> Iterator[Poset]:
    """
    Stream every partial order on {0..k-1}.

    Raises:
        BudgetExceeded: If k exceeds the streaming limit
    """
    if k > MAX_LABELED_K:
        raise BudgetExceeded(f"Labeled enumeration is limited to k <= {MAX_LABELED_K}, got {k}")
    return _stream(k)


def labeled_count(k: int) -> int:
    return sum(1 for _ in labeled_enumerate(k))


def d_histogram(k: int) -> Counter:
    """Number of labeled posets on k points with each downset count."""
    return Counter(d_count(P) for P in labeled_enumerate(k))


def p_routes(catalog: Catalog, k: int) -> Dict[str, int]:
    """
    p(k) from every route the catalog supports.

    Routes:
        copies: Σ i_n over classes on k points
        e_k(1): labeled posets with one extra bottom point
        e_{k-1}(2): labeled posets on k + 1 points with two minimal points
        minimal-sets: Σ_j C(k, j) e_{k-j}(j), classifying by the set of minimal points
    """
    routes: Dict[str, int] = {}
    if k <= catalog.k_max:
        routes['copies'] = sum(entry.copies for entry in catalog.of_size(k))
        routes['e_k(1)'] = aggregate_exp_sum(catalog, k).evaluate(1)
    if 1 <= k <= catalog.k_max + 1:
        routes["e_{k-1}(2)"] = aggregate_exp_sum(catalog, k - 1).evaluate(2)
        routes['minimal-sets'] = sum(
            comb(k, j) * aggregate_exp_sum(catalog, k - j).evaluate(j) for j in range(1, k + 1)
        )
    if k == 0:
        routes['minimal-sets'] = 1
    return routes


def p_count(catalog: Catalog, k: int) -> int:
    """
    p(k) for k <= k_max + 1, via e_{k-1}(2) beyond the catalog.

    Raises:
        IncompleteCatalog: If k is beyond k_max + 1
        VerificationError: If the routes disagree
    """
    routes = p_routes(catalog, k)
    if not routes:
        raise IncompleteCatalog(f"p({k}) needs a catalog through k = {k - 1}")
    values = set(routes.values())
    if len(values) != 1:
        raise VerificationError(f"p({k}) routes disagree: {routes}")
    return values.pop()
