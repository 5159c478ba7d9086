"""
Counting Cross-Checks

Every route to d(P) against the brute-force downset stream, over any supplied
family of posets (typically the catalog), plus the zigzag Fibonacci law and
the vertical-sum formula on random relations.
"""

import logging
import random
from typing import Iterable

from src.counting.downsets import (
    DownsetCounter, a_count, brute_count, d_count, d_split, d_split_upper_bound, downsets,
)
from src.counting.formulas import d_antichain_formula, d_by_components, d_vertical, fibonacci
from src.poset.bits import popcount
from src.poset.constructions import antichain, random_poset, zigzag
from src.poset.poset import Poset, is_antichain, minimal_points
from src.poset.vertical import random_vertical_relation, vertical_sum
from src.report import CheckReport

logger = logging.getLogger(__name__)


def point_split_holds(P: Poset) -> bool:
    """d(P) = d(P - Px) + d(P - xP) at every point x."""
    counter = DownsetCounter(P)
    d = counter.count(P.ground)
    return all(
        counter.count(P.ground & ~P.down[x]) + counter.count(P.ground & ~P.up[x]) == d
        for x in range(P.size)
    )


def downset_agreement_check(posets: Iterable[Poset], rng: random.Random, samples: int = 3) -> CheckReport:
    """
    Brute force, splitting recursion, antichain count, minimal-point split,
    antichain formula and component product all agree; the split sum over a
    non-antichain never drops below d(P).
    """
    report = CheckReport("downset counting")
    agree = point_split = upper = True
    checked = 0
    for P in posets:
        checked += 1
        d = brute_count(P)
        minimals = minimal_points(P)
        routes = (
            d_count(P), a_count(P), d_split(P, minimals),
            d_antichain_formula(P, minimals), d_by_components(P),
        )
        if any(value != d for value in routes):
            agree = False
            logger.debug(f"Downset routes disagree on {P}: brute {d}, routes {routes}")
        point_split &= point_split_holds(P)
        for _ in range(samples):
            A = sum(1 << x for x in range(P.size) if rng.random() < 0.5)
            if popcount(A) > 1 and not is_antichain(P, A):
                upper &= d_split_upper_bound(P, A) >= d
    report.add("counting.agreement", agree, f"{checked} posets")
    report.add("counting.point-split", point_split, f"{checked} posets")
    report.add("counting.split-upper-bound", upper, f"{checked} posets")
    return report


def fibonacci_check(k_max: int = 14) -> CheckReport:
    """d(zigzag(k)) = f_k and the Fibonacci recurrence through k_max + 2."""
    report = CheckReport("zigzag downsets")
    values = [d_count(zigzag(k)) for k in range(k_max + 3)]
    report.add(
        "counting.fibonacci",
        all(values[k + 2] == values[k + 1] + values[k] for k in range(k_max + 1))
        and all(value == fibonacci(k) for k, value in enumerate(values)),
        f"k <= {k_max + 2}",
    )
    return report


def vertical_count_check(rng: random.Random, samples: int = 200, max_points: int = 4) -> CheckReport:
    """The vertical-sum formula against brute force on random relations."""
    report = CheckReport("vertical-sum counting")
    general = discrete = True
    for _ in range(samples):
        O = random_poset(rng.randint(0, max_points), rng)
        P = random_poset(rng.randint(0, max_points), rng)
        V = random_vertical_relation(O, P, rng)
        general &= d_vertical(V) == brute_count(vertical_sum(V))

        m = rng.randint(0, 3)
        W = random_vertical_relation(antichain(m), P, rng)
        formula = sum(1 << (m - popcount(W.related_to(D))) for D in downsets(P))
        discrete &= formula == brute_count(vertical_sum(W))
    report.add("counting.vertical-sum", general, f"{samples} random relations")
    report.add("counting.vertical-antichain", discrete, f"{samples} random relations")
    return report
