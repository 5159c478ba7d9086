"""
Verification Driver

Runs every check suite over a catalog and renders the outcome as a
checklist: one line per tag, PASS when every result under the tag passed,
otherwise FAIL with the first failing detail.
"""

import logging
import random
from typing import Any, Callable, Dict, List, Optional, Tuple

from src.catalog.checks import (
    antitonicity_check, entry_invariants_check, exponential_sweep, extremal_scan,
    leading_terms_check, p_identities_check, prime_divisibility_check, stanley_count_check,
)
from src.catalog.enumerate import Catalog, enumerate_catalog
from src.catalog.golden import aggregates_check, census_check, matrices_check, named_classes_check
from src.catalog.labeled import MAX_LABELED_K
from src.catalog.matrices import matrices, matrix_identities_check
from src.counting.checks import downset_agreement_check, fibonacci_check, vertical_count_check
from src.expo.bounds import growth_bounds_check
from src.expo.checks import closed_forms_check
from src.expo.divisibility import divisibility_suite
from src.poset.checks import structure_check, vertical_structure_check
from src.report import CheckReport
from src.utils import log_section_header
from src.workflows.common import per_class

logger = logging.getLogger(__name__)

# Classes the downset algorithms are compared on
AGREEMENT_K = 6

# Growth inequalities: classes with k <= 4, m = 1..8
BOUNDS_K, BOUNDS_M = 4, 8

# Divisibility of e(m, P) - 1: classes with k <= 5, m = 1..13
DIVISIBILITY_K, DIVISIBILITY_M = 5, 13

# Prime aggregate rule k | e_k(m) - 2^(mk) - (-1)^k
PRIME_KS, PRIME_M = (2, 3, 5), 6

# Matrix identities run on this prefix of the catalog
MATRICES_K = 4

# Closed-form products and sums use classes up to this size
CLOSED_FORM_K = 4

Suite = Tuple[str, Callable[[], CheckReport]]


def checklist(report: CheckReport) -> List[Tuple[str, bool, str]]:
    """(tag, passed, detail) per tag, in first-appearance order."""
    order: List[str] = []
    status: Dict[str, Tuple[bool, str]] = {}
    for result in report.results:
        if result.name not in status:
            order.append(result.name)
            status[result.name] = (True, "")
        if status[result.name][0] and not result.passed:
            status[result.name] = (False, result.detail)
    return [(tag, *status[tag]) for tag in order]


def checklist_lines(report: CheckReport) -> List[str]:
    lines = []
    for tag, passed, detail in checklist(report):
        if passed:
            lines.append(f"PASS {tag}")
        else:
            lines.append(f"FAIL {tag}: {detail}" if detail else f"FAIL {tag}")
    return lines


def _entries_upto(catalog: Catalog, k: int):
    return [entry for entry in catalog if entry.points <= k]


def build_suites(catalog: Catalog, m_max: int, seed: int, agreement_k: int = AGREEMENT_K) -> List[Suite]:
    """
    The suites the driver runs, in order, as (name, thunk) pairs.

    Sizes follow the catalog: suites needing more points than the catalog
    holds run on what is there.
    """
    K = catalog.k_max
    posets = [entry.poset for entry in catalog]
    rng = random.Random(seed)

    def downset_counts() -> CheckReport:
        report = CheckReport("downset counts")
        source = catalog if catalog.k_max >= agreement_k else enumerate_catalog(agreement_k)
        report.extend(downset_agreement_check(
            [entry.poset for entry in source if entry.points <= agreement_k], rng,
        ))
        report.extend(fibonacci_check())
        report.extend(vertical_count_check(rng))
        return report

    def poset_structure() -> CheckReport:
        report = structure_check(posets, rng)
        report.extend(vertical_structure_check(rng))
        return report

    def growth_bounds() -> CheckReport:
        def check(P):
            report = CheckReport(f"growth bounds k={P.size}")
            for m in range(1, BOUNDS_M + 1):
                report.extend(growth_bounds_check(P, m))
            return report
        return per_class(_entries_upto(catalog, BOUNDS_K), check, "growth bounds")

    def divisibility() -> CheckReport:
        report = per_class(
            _entries_upto(catalog, DIVISIBILITY_K),
            lambda P: divisibility_suite(P, DIVISIBILITY_M),
            "divisibility",
        )
        for k in PRIME_KS:
            if k <= K:
                report.extend(prime_divisibility_check(catalog, k, PRIME_M))
        return report

    def matrix_identities() -> CheckReport:
        return matrix_identities_check(matrices(catalog, m_max, k_max=min(K, MATRICES_K)))

    def labeled_scans() -> CheckReport:
        report = CheckReport("labeled scans")
        for k in range(1, min(K, MAX_LABELED_K) + 1):
            report.extend(stanley_count_check(k))
            report.extend(extremal_scan(k))
        return report

    def aggregates() -> CheckReport:
        report = CheckReport("aggregated sums")
        for k in range(K + 1):
            report.extend(leading_terms_check(catalog, k))
        report.extend(p_identities_check(catalog))
        report.extend(entry_invariants_check(catalog))
        return report

    def published() -> CheckReport:
        report = census_check(catalog)
        report.extend(aggregates_check(catalog))
        if K >= 3:
            report.extend(matrices_check(catalog))
        report.extend(named_classes_check(catalog))
        return report

    return [
        ("poset structure", poset_structure),
        ("downset counts", downset_counts),
        ("closed forms", lambda: closed_forms_check([P for P in posets if P.size <= CLOSED_FORM_K])),
        ("exponential identities", lambda: exponential_sweep(catalog)),
        ("growth bounds", growth_bounds),
        ("divisibility", divisibility),
        ("matrix identities", matrix_identities),
        ("labeled scans", labeled_scans),
        ("antitonicity", lambda: antitonicity_check(min(K, 4))),
        ("aggregates", aggregates),
        ("published tables", published),
    ]


def run_verification(
    catalog: Catalog,
    m_max: int,
    seed: int,
    progress_stage: Optional[Any] = None,
    agreement_k: int = AGREEMENT_K,
) -> CheckReport:
    """
    Every suite over the catalog, merged into one report.

    Args:
        catalog: Enumerated or loaded catalog
        m_max: Largest m for the matrix identities
        seed: Seed for the randomized property checks
        progress_stage: Optional VerificationStage
        agreement_k: Largest class size for the downset algorithm comparison
    """
    suites = build_suites(catalog, m_max, seed, agreement_k)
    log_section_header(f"VERIFICATION kmax={catalog.k_max} m_max={m_max} seed={seed}")

    if progress_stage:
        try:
            progress_stage.start_suites(len(suites))
        except Exception:
            progress_stage = None

    report = CheckReport(f"verification kmax={catalog.k_max}")
    for name, suite in suites:
        if progress_stage:
            progress_stage.begin_suite(name)
        result = suite()
        failures = len(result.failures)
        logger.info(f"{name}: {len(result.results)} checks, {failures} failed")
        for note in result.notes:
            logger.info(f"{name}: {note}")
        report.extend(result)
        if progress_stage:
            progress_stage.finish_suite(name, failures)

    if progress_stage:
        progress_stage.finish()
    return report


def verification_payload(report: CheckReport, k_max: int, m_max: int, seed: int) -> Dict[str, Any]:
    return {
        'kmax': k_max,
        'm_max': m_max,
        'seed': seed,
        'passed': report.passed,
        'checks': [{'tag': tag, 'passed': passed, 'detail': detail} for tag, passed, detail in checklist(report)],
        'notes': list(report.notes),
    }
