"""
Catalog Sweeps

Checks that range over a whole catalog or over every labeled poset on a few
points: downset histograms, extremal counts, leading terms of the aggregated
sums, labeled counts, antitonicity and the per-class exponential identities.
"""

import logging
from math import comb, factorial, perm
from typing import Any, Dict, List, Tuple

import sympy

from src.catalog.aggregate import aggregate_exp_sum
from src.catalog.canonical import canonical_form
from src.catalog.enumerate import Catalog, CatalogEntry
from src.catalog.labeled import MAX_LABELED_K, d_histogram, labeled_count, labeled_enumerate, p_routes
from src.catalog.reference import stanley_z
from src.counting.downsets import d_count
from src.counting.extremal import (
    height_maximizer, max_d_given_height, max_d_given_minimals, minimals_maximizer,
    within_three_quarters,
)
from src.expo.checks import levels_check, oracle_triangle_check, partition_check, side_conditions_check
from src.expo.exponential import antichain_exp_sum, chain_exp_sum, d_prime, d_prime_exhaustive, exp_sum
from src.expo.recursion import bijection_check
from src.expo.charpoly import polynomial_separation_check
from src.poset.bits import iter_bits, popcount
from src.poset.constructions import is_discrete
from src.poset.poset import Poset, height, minimal_points, restrict
from src.report import CheckReport

logger = logging.getLogger(__name__)


def as_extension(Q: Poset) -> Tuple[Poset, Tuple[int, ...], int]:
    """Read Q as a member of E(Min Q, P): (P, embedding of P into Q, m)."""
    M = minimal_points(Q)
    rest = Q.ground & ~M
    return restrict(Q, rest), tuple(iter_bits(rest)), popcount(M)


def mass_exceptions(catalog: Catalog) -> List[CatalogEntry]:
    """Classes whose coefficient mass falls below 2^min_count."""
    return [entry for entry in catalog if entry.exp.mass < 2 ** entry.min_count]


def stanley_count_check(k: int) -> CheckReport:
    """
    Labeled posets on k points with more than 2^(k-1) downsets: z_i·C(k, i)
    of them have 2^(k-1) + 2^(k-i) downsets and no other count occurs.
    """
    if not 1 <= k <= MAX_LABELED_K:
        raise ValueError(f"Histogram scan needs 1 <= k <= {MAX_LABELED_K}, got {k}")
    report = CheckReport(f"downset histogram k={k}")
    histogram = d_histogram(k)
    half = 2 ** (k - 1)
    report.add("catalog.stanley.top", histogram[2 ** k] == 1, f"{histogram[2 ** k]} posets with d = {2 ** k}")
    for i in range(2, k + 1):
        value = half + 2 ** (k - i)
        expected = stanley_z(i) * comb(k, i)
        report.add(
            "catalog.stanley.count", histogram[value] == expected,
            f"k={k} i={i} d={value}: {histogram[value]} posets, expected {expected}",
        )
    allowed = {half + 2 ** (k - i) for i in range(1, k + 1)}
    stray = sorted(d for d in histogram if d > half and d not in allowed)
    report.add("catalog.stanley.gaps", not stray, f"stray counts {stray}" if stray else "")
    return report


def prime_divisibility_check(catalog: Catalog, k: int, m_max: int) -> CheckReport:
    """
    k | e_k(m) - 2^(mk) - (-1)^k for 1 <= m <= m_max.

    Raises:
        ValueError: If k is not prime
        IncompleteCatalog: If the catalog stops below k
    """
    if not sympy.isprime(k):
        raise ValueError(f"{k} is not prime")
    report = CheckReport(f"prime aggregate divisibility k={k}")
    aggregate = aggregate_exp_sum(catalog, k)
    for m in range(1, m_max + 1):
        value = aggregate.evaluate(m) - 2 ** (m * k) - (-1) ** k
        report.add("catalog.prime-divisibility", value % k == 0, f"k={k} m={m}")
    return report


def _maximizers_match(found: List[Poset], target: Poset) -> bool:
    code = canonical_form(target).hex
    return all(canonical_form(P).hex == code for P in found)


def extremal_scan(k: int) -> CheckReport:
    """
    Exhaustive check of the maximal downset counts for a given number of
    minimal points or a given height, their labeled maximizer counts and
    shapes, and the three-quarter bound for non-antichains.
    """
    if not 1 <= k <= MAX_LABELED_K:
        raise ValueError(f"Extremal scan needs 1 <= k <= {MAX_LABELED_K}, got {k}")
    report = CheckReport(f"extremal downset counts k={k}")
    by_minimals: Dict[int, Tuple[int, List[Poset]]] = {}
    by_height: Dict[int, Tuple[int, List[Poset]]] = {}
    three_quarters = True
    for P in labeled_enumerate(k):
        d = d_count(P)
        for key, table in ((popcount(minimal_points(P)), by_minimals), (height(P), by_height)):
            best, found = table.get(key, (-1, []))
            if d > best:
                table[key] = (d, [P])
            elif d == best:
                found.append(P)
        if not is_discrete(P):
            three_quarters &= within_three_quarters(P, d)

    for m, (best, found) in sorted(by_minimals.items()):
        expected = max_d_given_minimals(k, m)
        report.add(
            "counting.extremal.minimals",
            (best, len(found)) == expected and _maximizers_match(found, minimals_maximizer(k, m)),
            f"k={k} m={m}: max {best} x{len(found)}, expected {expected}",
        )
    for h, (best, found) in sorted(by_height.items()):
        expected = max_d_given_height(k, h)
        report.add(
            "counting.extremal.height",
            (best, len(found)) == expected and _maximizers_match(found, height_maximizer(k, h)),
            f"k={k} h={h}: max {best} x{len(found)}, expected {expected}",
        )
    report.add("counting.three-quarters", three_quarters, f"k={k}")
    return report


def leading_terms_check(catalog: Catalog, k: int) -> CheckReport:
    """Leading terms of e_k, e_kn and e_k^h from their closed forms."""
    report = CheckReport(f"aggregate leading terms k={k}")
    total = aggregate_exp_sum(catalog, k)
    for i in range(2, k + 1):
        base = 2 ** (k - 1) + 2 ** (k - i)
        report.add(
            "catalog.leading.e_k",
            total.coefficient(base) == stanley_z(i) * comb(k, i),
            f"k={k} base={base}",
        )
    for n in range(1, k):
        expected = (2 ** (k - 1) + 2 ** (n - 1), comb(k, n) * n)
        report.add(
            "catalog.leading.e_kn",
            aggregate_exp_sum(catalog, k, min_count=n).leading == expected,
            f"k={k} n={n}",
        )
    if k == 0:
        return report
    report.add(
        "catalog.leading.e_kh",
        aggregate_exp_sum(catalog, k, height=1) == antichain_exp_sum(k)
        and aggregate_exp_sum(catalog, k, height=k) == chain_exp_sum(k).scale(factorial(k)),
        f"k={k} h in (1, k)",
    )
    for h in range(2, k):
        expected = (2 ** (k - h) * (h + 1), perm(k, h))
        report.add(
            "catalog.leading.e_kh",
            aggregate_exp_sum(catalog, k, height=h).leading == expected,
            f"k={k} h={h}",
        )
    return report


def p_identities_check(catalog: Catalog) -> CheckReport:
    """All routes to p(k) agree, and the labeled stream agrees where it runs."""
    report = CheckReport("labeled counts")
    for k in range(catalog.k_max + 2):
        routes = p_routes(catalog, k)
        report.add("catalog.p.routes", len(set(routes.values())) == 1, f"k={k} {routes}")
        if k <= min(MAX_LABELED_K, catalog.k_max):
            streamed = labeled_count(k)
            report.add("catalog.p.stream", streamed == routes['copies'], f"k={k} streamed {streamed}")
    return report


def antitonicity_check(k_max: int = 4, m_values: Tuple[int, ...] = (1, 2, 3)) -> CheckReport:
    """
    For labeled orders O strictly contained in P on the same points,
    e(m, O) > e(m, P) when m > 1 and both equal 1 when m = 1.
    """
    report = CheckReport("antitonicity")
    for k in range(k_max + 1):
        orders = [(P.up, exp_sum(P)) for P in labeled_enumerate(k)]
        strict = unit = True
        pairs = 0
        for smaller_up, smaller in orders:
            for larger_up, larger in orders:
                if smaller_up == larger_up or any(a & ~b for a, b in zip(smaller_up, larger_up)):
                    continue
                pairs += 1
                for m in m_values:
                    low, high = smaller.evaluate(m), larger.evaluate(m)
                    if m == 1:
                        unit &= low == high == 1
                    else:
                        strict &= low > high
        report.add("expo.antitonicity.strict", strict, f"k={k}: {pairs} comparable pairs")
        report.add("expo.antitonicity.unit", unit, f"k={k}")
    return report


def entry_invariants_check(catalog: Catalog) -> CheckReport:
    """Copies times automorphisms is k!, leading base is d, e(1) = 1, k never decreases."""
    report = CheckReport("catalog entries")
    copies = leading = unit = True
    for entry in catalog:
        copies &= entry.copies * entry.automorphisms == factorial(entry.points)
        leading &= entry.exp.leading[0] == entry.downsets
        unit &= entry.exp.evaluate(1) == 1
    points = [entry.points for entry in catalog]
    report.add("catalog.entry.copies", copies)
    report.add("catalog.entry.leading", leading)
    report.add("catalog.entry.unit", unit)
    report.add("catalog.order", points == sorted(points) and catalog[1].points == 0)
    return report


def _sweep(catalog: Catalog, k_max: int, title: str, check: Any) -> CheckReport:
    report = CheckReport(title)
    for entry in catalog:
        if entry.points <= k_max:
            report.extend(check(entry.poset))
    return report


def exponential_sweep(catalog: Catalog, m_max: int = 4) -> CheckReport:
    """
    Per-class exponential identities at their agreed sizes: normal form and
    upset partition on every class, oracles and level recursion through
    k = 4, d' shortcut, bijection and polynomial separation on the smallest
    classes.
    """
    report = CheckReport("exponential identities")
    report.extend(_sweep(catalog, catalog.k_max, "normal form", side_conditions_check))
    report.extend(_sweep(catalog, 4, "oracles", lambda P: oracle_triangle_check(P, 3)))
    report.extend(_sweep(catalog, catalog.k_max, "partition", lambda P: partition_check(P, m_max)))
    report.extend(_sweep(catalog, 4, "recursion", lambda P: levels_check(P, m_max)))

    exact = bounded = True
    for entry in catalog:
        if entry.points == 0:
            continue
        value = d_prime(entry.poset)
        exact &= value == d_prime_exhaustive(entry.poset)
        bounded &= value <= 2 ** (entry.points - 1)
    report.add("expo.d-prime", exact and bounded)

    for entry in catalog:
        if 1 <= entry.points <= 3:
            for m in (1, 2):
                report.extend(bijection_check(m, entry.poset))
            for m in (1, 2, 3):
                report.extend(polynomial_separation_check(m, entry.poset))
    return report

