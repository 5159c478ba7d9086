"""
Growth Bounds

Finite inequalities on e(m, P), each evaluated with exact integers. The
real-valued bounds are cross-multiplied; the one logarithmic precondition
uses a rational upper bound for ln 2 so it only ever under-applies.
"""

import logging
from fractions import Fraction

from src.counting.downsets import DownsetCounter, d_count, downsets
from src.exceptions import BudgetExceeded
from src.expo.charpoly import extension_census
from src.expo.exponential import d_prime, exp_sum
from src.poset.bits import popcount
from src.poset.constructions import antichain, cardinal_sum, is_discrete, ordinal_sum
from src.poset.poset import Poset, minimal_points, remove, up_closure
from src.report import CheckReport

logger = logging.getLogger(__name__)

# Strictly above ln 2
LN2_UPPER = Fraction(6931471805599453094172321215, 10 ** 28)

# Extension census is attempted only while m·k stays this small
MAX_CENSUS_RELATIONS = 12


def growth_bounds_check(P: Poset, m: int) -> CheckReport:
    """Evaluate every applicable growth inequality for P at m."""
    report = CheckReport(f"growth bounds k={P.size} m={m}")
    expo = exp_sum(P)
    e_m, e_next = expo.evaluate(m), expo.evaluate(m + 1)
    k = P.size
    d = d_count(P)
    minimals = popcount(minimal_points(P))

    if m > 1 and not is_discrete(P):
        report.add(
            "expo.bound.antichain-gap",
            4 ** m * e_m < 3 ** m * (2 ** m - 1) ** k,
            f"e={e_m}",
        )

    if k > 0:
        dp = d_prime(P)
        residual = d ** m - e_m
        ceiling = 2 ** (minimals - 1) * dp ** m
        report.add(
            "expo.bound.residual",
            0 <= residual <= ceiling <= 2 ** ((k - 1) * (m + 1)),
            f"r={residual} bound={ceiling}",
        )
        _ratio_tail(report, m, d, dp, minimals, e_m, e_next)

    if m >= 1:
        report.add(
            "expo.bound.ratio-upper",
            d * e_m <= e_next and m * e_next < d * e_m * (m + 2 ** k * d),
            f"e(m)={e_m} e(m+1)={e_next}",
        )

    report.add("expo.bound.downset-removal", _downset_removal_holds(P, m, e_m))

    if m >= 1:
        _extension_bound(report, P, m, d)
    return report


def _ratio_tail(report: CheckReport, m: int, d: int, dp: int, minimals: int, e_m: int, e_next: int) -> None:
    by_statement = m >= (minimals + 1) * d * LN2_UPPER
    by_proof = 2 ** (minimals + 1) * dp ** m <= d ** m
    if by_statement != by_proof:
        report.note(
            f"ratio precondition forms disagree at d={d} d'={dp} m(P)={minimals} m={m}: "
            f"statement={by_statement} proof={by_proof}"
        )
    if by_statement:
        report.add(
            "expo.bound.ratio-tail",
            d * e_m <= e_next and e_next * d ** m <= d * e_m * (d ** m + 2 ** minimals * dp ** m),
            f"e(m)={e_m} e(m+1)={e_next}",
        )


def _downset_removal_holds(P: Poset, m: int, e_m: int) -> bool:
    for D in downsets(P):
        if not D:
            continue
        spread = popcount(up_closure(P, D) & ~D)
        if m * exp_sum(remove(P, D)).evaluate(m) > 2 ** spread * e_m:
            return False
    return True


def _extension_bound(report: CheckReport, P: Poset, m: int, d: int) -> None:
    ceiling = 2 ** (m - 1) * (d + 1)
    extremal = cardinal_sum(antichain(m - 1), ordinal_sum(antichain(1), P))
    report.add("expo.bound.extension-extremal", d_count(extremal) == ceiling)

    if m * P.size > MAX_CENSUS_RELATIONS:
        report.note(f"extension census skipped for k={P.size} m={m}")
        return
    # Local import: the catalog package depends on this module
    from src.catalog.canonical import canonical_form

    target = canonical_form(extremal).code
    holds = True
    try:
        for Q, _, d_q in extension_census(m, P):
            counted = DownsetCounter(Q).count(Q.ground)
            attains = d_q == ceiling
            if counted != d_q or d_q > ceiling or attains != (canonical_form(Q).code == target):
                holds = False
                break
    except BudgetExceeded:
        report.note(f"extension census skipped for k={P.size} m={m}")
        return
    report.add("expo.bound.extension", holds)
