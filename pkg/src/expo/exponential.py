"""
Exponential Function

e(m, P) counts the posets on M ∪ K that induce P on K and have exactly the
m points of M as minimal points. It is computed by inclusion-exclusion over
subsets of Min P, which yields the exponential-sum normal form directly.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Dict, Tuple

from src.counting.downsets import DownsetCounter, d_count
from src.counting.formulas import fibonacci
from src.expo.expsum import ExpSum
from src.poset.bits import bit, popcount, submasks
from src.poset.poset import Poset, minimal_points

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoeffTable:
    """b(i, j): number of B ⊆ Min P with #B = i and d(P - B) = j."""
    counts: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def get(self, i: int, j: int) -> int:
        return self.counts.get((i, j), 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def exp_sum(self) -> ExpSum:
        """c(j) = Σ_i (-1)^i b(i, j)."""
        return ExpSum.from_pairs(
            (j, (-1) ** i * count) for (i, j), count in self.counts.items()
        )


def coeff_table(P: Poset) -> CoeffTable:
    counter = DownsetCounter(P)
    ground = P.ground
    counts: Counter = Counter()
    for B in submasks(minimal_points(P)):
        counts[(popcount(B), counter.count(ground & ~B))] += 1
    return CoeffTable(dict(counts))


def exp_sum(P: Poset) -> ExpSum:
    """Normal form of m -> e(m, P)."""
    return coeff_table(P).exp_sum()


def e_incl_excl(m: int, P: Poset) -> int:
    """e(m, P) = Σ_{B ⊆ Min P} (-1)^#B d(P - B)^m."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    counter = DownsetCounter(P)
    ground = P.ground
    total = 0
    for B in submasks(minimal_points(P)):
        term = counter.count(ground & ~B) ** m
        total += -term if popcount(B) & 1 else term
    return total


def chain_exp_sum(k: int) -> ExpSum:
    """e(m, C_k) = (k+1)^m - k^m."""
    if k == 0:
        return ExpSum.power(1)
    return ExpSum.from_pairs([(k + 1, 1), (k, -1)])


def antichain_exp_sum(length: int) -> ExpSum:
    """e(m, A_l) = (2^m - 1)^l."""
    return ExpSum.from_pairs(
        (2 ** i, (-1) ** (length - i) * comb(length, i)) for i in range(length + 1)
    )


def antichain_top_formula(length: int, P: Poset) -> ExpSum:
    """e(m, A_l ⊕ P) = Σ_i (-1)^(l-i) C(l, i) (2^i + d(P) - 1)^m."""
    if length < 1:
        raise ValueError(f"Antichain length must be positive, got {length}")
    shift = d_count(P) - 1
    return ExpSum.from_pairs(
        (2 ** i + shift, (-1) ** (length - i) * comb(length, i)) for i in range(length + 1)
    )


def antichain_sum_formula(length: int, P: Poset) -> ExpSum:
    """e(m, A_l + P) = (2^m - 1)^l · e(m, P)."""
    return antichain_exp_sum(length) * exp_sum(P)


def fence_exp_sum(t: int) -> ExpSum:
    """Exponential sum of the fence N_t from Fibonacci products.

    Sums over s = 0..t and index sequences 1 <= j_1 < ... < j_s <= t with
    j_{s+1} = t + 1 of (-1)^s (f_{2 j_1 - 2} · Π_{r>=2} f_{2(j_r - j_{r-1}) - 1})^m.
    """
    if t < 1:
        raise ValueError(f"Fence length must be positive, got {t}")
    pairs = []
    for s in range(t + 1):
        for chosen in combinations(range(1, t + 1), s):
            sequence = list(chosen) + [t + 1]
            base = fibonacci(2 * sequence[0] - 2)
            for previous, current in zip(sequence, sequence[1:]):
                base *= fibonacci(2 * (current - previous) - 1)
            pairs.append((base, (-1) ** s))
    return ExpSum.from_pairs(pairs)


def residual(m: int, P: Poset) -> int:
    """r(m, P) = d(P)^m - e(m, P)."""
    return d_count(P) ** m - e_incl_excl(m, P)


def d_prime(P: Poset) -> int:
    """Largest downset count of a proper induced subposet, over single-point deletions."""
    if P.size == 0:
        raise ValueError("d' is undefined for the empty poset")
    counter = DownsetCounter(P)
    ground = P.ground
    return max(counter.count(ground & ~bit(x)) for x in range(P.size))


def d_prime_exhaustive(P: Poset) -> int:
    """Largest downset count over every proper subset A ⊂ K."""
    if P.size == 0:
        raise ValueError("d' is undefined for the empty poset")
    counter = DownsetCounter(P)
    ground = P.ground
    return max(counter.count(A) for A in submasks(ground) if A != ground)
