"""
Exponential-Function Checks

Per-poset agreement of the independent routes to e(m, P), the normal-form
side conditions and the level recursion, plus the closed forms for chains,
antichains and fences.
"""

import logging
from typing import Iterable, Optional

from src.counting.downsets import d_count
from src.exceptions import BudgetExceeded
from src.expo.exponential import (
    antichain_exp_sum, antichain_sum_formula, antichain_top_formula, chain_exp_sum,
    coeff_table, e_incl_excl, exp_sum, fence_exp_sum,
)
from src.expo.expsum import ExpSum
from src.expo.oracles import MAX_ORDER_POINTS, e_oracle_maps, e_oracle_orders, e_oracle_upsets
from src.expo.recursion import e_levels, upset_partition_check
from src.poset.bits import popcount
from src.poset.constructions import antichain, cardinal_sum, chain, fence, ordinal_sum
from src.poset.poset import Poset, minimal_points
from src.report import CheckReport

logger = logging.getLogger(__name__)

# Printed expansions of the first fences
FENCE_SUMS = {
    1: "+1*3 -1*2",
    2: "+1*8 -1*6 -1*5 +1*4",
    3: "+1*21 -1*16 -1*15 -1*13 +1*12 +2*10 -1*8",
}


def oracle_triangle_check(P: Poset, m_max: int = 3, budget: Optional[int] = None) -> CheckReport:
    """
    Inclusion-exclusion against the normal form and the three brute-force
    oracles for m = 0..m_max. Oracles that would exceed the budget are
    skipped with a note.
    """
    report = CheckReport(f"oracle triangle k={P.size}")
    expo = exp_sum(P)
    oracles = (
        ("expo.oracle.maps", e_oracle_maps),
        ("expo.oracle.orders", e_oracle_orders),
        ("expo.oracle.upsets", e_oracle_upsets),
    )
    for m in range(m_max + 1):
        value = e_incl_excl(m, P)
        report.add("expo.oracle.normal-form", expo.evaluate(m) == value, f"m={m} e={value}")
        for tag, oracle in oracles:
            if oracle is e_oracle_orders and m + P.size > MAX_ORDER_POINTS:
                continue
            try:
                found = oracle(m, P, budget)
            except BudgetExceeded as e:
                report.note(f"{tag} skipped at m={m}: {e}")
                continue
            report.add(tag, found == value, f"m={m} oracle={found} e={value}")
    return report


def side_conditions_check(P: Poset) -> CheckReport:
    """Leading term, coefficient sums, coefficient table total and mass bound."""
    report = CheckReport(f"normal form k={P.size}")
    table = coeff_table(P)
    expo = table.exp_sum()
    d = d_count(P)
    minimals = popcount(minimal_points(P))
    if P.size == 0:
        report.add("expo.normal-form", expo == ExpSum.power(1), expo.format())
    else:
        report.add(
            "expo.normal-form",
            expo.leading == (d, 1) and expo.coefficient_sum == 0 and expo.weighted_sum == 1,
            expo.format(),
        )
    report.add(
        "expo.coeff-table",
        table.get(0, d) == 1 and table.total == 2 ** minimals,
        f"total={table.total}",
    )
    report.add("expo.mass", expo.mass <= 2 ** minimals, f"mass={expo.mass}")
    return report


def partition_check(P: Poset, m_max: int = 4) -> CheckReport:
    """Sum of e over the upset chains equals d^m for every m <= m_max."""
    report = CheckReport(f"upset partition k={P.size}")
    d = d_count(P)
    holds = all(upset_partition_check(m, P) == d ** m for m in range(m_max + 1))
    report.add("expo.partition", holds, f"m <= {m_max}")
    return report


def levels_check(P: Poset, m_max: int = 4) -> CheckReport:
    """The level recursion agrees with inclusion-exclusion for m <= m_max."""
    report = CheckReport(f"level recursion k={P.size}")
    levels = e_levels(P, m_max)
    holds = all(levels[m][P.ground] == e_incl_excl(m, P) for m in range(m_max + 1))
    report.add("expo.recursion", holds, f"m <= {m_max}")
    return report


def recursion_check(P: Poset, m_max: int = 4) -> CheckReport:
    """The upset partition identity and the level recursion for m <= m_max."""
    report = CheckReport(f"upset recursion k={P.size}")
    report.extend(partition_check(P, m_max))
    report.extend(levels_check(P, m_max))
    return report


def closed_forms_check(posets: Iterable[Poset], t_max: int = 4, k_max: int = 6) -> CheckReport:
    """Chain, antichain, fence, sum and shift closed forms against inclusion-exclusion."""
    report = CheckReport("closed forms")
    fences = all(fence_exp_sum(t) == exp_sum(fence(t)) for t in range(1, t_max + 1))
    printed = all(fence_exp_sum(t).format() == text for t, text in FENCE_SUMS.items())
    report.add("expo.closed.fence", fences and printed, f"t <= {t_max}")
    report.add(
        "expo.closed.chain",
        all(chain_exp_sum(k) == exp_sum(chain(k)) for k in range(k_max + 1)),
        f"k <= {k_max}",
    )
    report.add(
        "expo.closed.antichain",
        all(antichain_exp_sum(k) == exp_sum(antichain(k)) for k in range(k_max + 1)),
        f"k <= {k_max}",
    )

    family = list(posets)
    top = sums = product = shift = True
    for P in family:
        for length in range(1, 4):
            top &= antichain_top_formula(length, P) == exp_sum(ordinal_sum(antichain(length), P))
            sums &= antichain_sum_formula(length, P) == exp_sum(cardinal_sum(antichain(length), P))
        for O in family:
            if O.size + P.size > k_max:
                continue
            product &= exp_sum(O) * exp_sum(P) == exp_sum(cardinal_sum(O, P))
            if O.size:
                shift &= exp_sum(O).shift(d_count(P) - 1) == exp_sum(ordinal_sum(O, P))
    report.add("expo.closed.antichain-top", top, f"{len(family)} posets")
    report.add("expo.closed.antichain-sum", sums, f"{len(family)} posets")
    report.add("expo.closed.product", product)
    report.add("expo.closed.shift", shift)
    return report
