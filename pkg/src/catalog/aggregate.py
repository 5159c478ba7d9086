"""
Aggregated Exponential Sums

Sums of e(m, P_n) over catalog classes weighted by the number of labeled
copies: e_k counts all labeled posets on m + k points whose minimal points
are the first m, e_kn restricts to n minimal points among the last k, and
e_k^h to height h on the last k.
"""

import logging
from typing import Optional

from src.catalog.enumerate import Catalog
from src.expo.expsum import ExpSum

logger = logging.getLogger(__name__)


def aggregate_exp_sum(
    catalog: Catalog,
    k: int,
    min_count: Optional[int] = None,
    height: Optional[int] = None,
) -> ExpSum:
    """Σ i_n · e(m, P_n) over classes on k points, optionally filtered."""
    catalog.require(k)
    pairs = []
    for entry in catalog.of_size(k):
        if min_count is not None and entry.min_count != min_count:
            continue
        if height is not None and entry.height != height:
            continue
        pairs.extend((base, entry.copies * coeff) for base, coeff in entry.exp.terms)
    return ExpSum.from_pairs(pairs)


def aggregate_e_k(catalog: Catalog, k: int, m: int) -> int:
    return aggregate_exp_sum(catalog, k).evaluate(m)


def aggregate_e_kn(catalog: Catalog, k: int, n: int, m: int) -> int:
    return aggregate_exp_sum(catalog, k, min_count=n).evaluate(m)


def aggregate_e_kh(catalog: Catalog, k: int, h: int, m: int) -> int:
    return aggregate_exp_sum(catalog, k, height=h).evaluate(m)
