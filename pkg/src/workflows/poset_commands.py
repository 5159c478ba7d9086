"""
Single-Poset Commands

info, downsets and expo: read one poset file and report on it.
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.counting.downsets import brute_count, d_count, d_split, downsets
from src.counting.extremal import max_d_given_height, max_d_given_minimals
from src.counting.formulas import d_antichain_formula
from src.exceptions import VerificationError
from src.expo.bounds import growth_bounds_check
from src.expo.checks import oracle_triangle_check, recursion_check, side_conditions_check
from src.expo.divisibility import divisibility_suite
from src.expo.exponential import exp_sum
from src.io.poset_format import read_poset
from src.poset.bits import format_mask, indices, popcount
from src.poset.poset import Poset, height, minimal_points
from src.report import CheckReport
from src.settings import get_settings
from src.workflows.common import emit
from src.workflows.verification import checklist, checklist_lines

logger = logging.getLogger(__name__)

# Oracle cross-checks in `expo --verify` stop at this m
ORACLE_M_MAX = 3

COUNTERS = {
    'brute': lambda P: brute_count(P),
    'split': lambda P: d_split(P, minimal_points(P)),
    'antichain': lambda P: d_antichain_formula(P, minimal_points(P)),
}


def poset_info(P: Poset) -> Dict[str, Any]:
    """k, Min P, height, d(P), the exponential sum and the extremal slack."""
    expo = exp_sum(P)
    d = d_count(P)
    minimals = minimal_points(P)
    info: Dict[str, Any] = {
        'k': P.size,
        'd': d,
        'exp': expo.format(),
        'min': indices(minimals),
        'height': height(P),
        'bounds': {},
    }
    if P.size:
        by_minimals, _ = max_d_given_minimals(P.size, popcount(minimals))
        by_height, _ = max_d_given_height(P.size, info['height'])
        info['bounds'] = {
            'minimals': {'max': by_minimals, 'slack': by_minimals - d},
            'height': {'max': by_height, 'slack': by_height - d},
        }
    return info


def info_lines(info: Dict[str, Any]) -> List[str]:
    lines = [
        f"k={info['k']} d={info['d']} exp={info['exp']}",
        "min={" + ",".join(str(x) for x in info['min']) + f"}} height={info['height']}",
    ]
    for name, bound in info['bounds'].items():
        lines.append(f"bound[{name}]: d <= {bound['max']} slack={bound['slack']}")
    return lines


def run_info(path: Path, output_format: str = 'text') -> Dict[str, Any]:
    """
    Raises:
        FileNotFoundError: If the file does not exist
        ParseError: If the file is malformed
        CycleError: If the relations are cyclic
    """
    P = read_poset(path)
    logger.info(f"Read {path.name}: {P.size} points")
    info = poset_info(P)
    emit(info_lines(info), info, output_format)
    return info


def run_downsets(path: Path, algo: str = 'split', list_all: bool = False, output_format: str = 'text') -> int:
    """Count (and optionally list) the downsets of the poset in path."""
    if algo not in COUNTERS:
        raise ValueError(f"Unknown algorithm '{algo}', expected one of {sorted(COUNTERS)}")
    P = read_poset(path)
    count = COUNTERS[algo](P)
    logger.info(f"d = {count} via {algo}")

    payload: Dict[str, Any] = {'k': P.size, 'algo': algo, 'd': count}
    lines = [f"d={count}"]
    if list_all:
        found = list(downsets(P))
        payload['downsets'] = [indices(D) for D in found]
        lines.extend(format_mask(D) for D in found)
    emit(lines, payload, output_format)
    return count


def expo_report(P: Poset, m_max: int, budget: Optional[int] = None) -> CheckReport:
    """Oracle, side-condition, recursion, divisibility and bound checks for one poset."""
    report = CheckReport(f"exponential checks k={P.size}")
    report.extend(oracle_triangle_check(P, min(m_max, ORACLE_M_MAX), budget))
    report.extend(side_conditions_check(P))
    report.extend(recursion_check(P, m_max))
    report.extend(divisibility_suite(P, m_max))
    for m in range(1, m_max + 1):
        report.extend(growth_bounds_check(P, m))
    return report


def run_expo(
    path: Path,
    m: Optional[int] = None,
    show_sum: bool = False,
    verify: bool = False,
    m_max: int = 6,
    output_format: str = 'text',
) -> Dict[str, Any]:
    """
    Print e(m, P) and/or its exponential sum; with verify, the cross-checks.

    Raises:
        VerificationError: If a cross-check fails (after printing the checklist)
    """
    P = read_poset(path)
    expo = exp_sum(P)
    payload: Dict[str, Any] = {'k': P.size}
    lines = []
    if show_sum or m is None:
        payload['exp'] = expo.format()
        lines.append(f"exp={payload['exp']}")
    if m is not None:
        payload['m'] = m
        payload['e'] = expo.evaluate(m)
        lines.append(f"e({m})={payload['e']}")

    report = None
    if verify:
        report = expo_report(P, m_max, get_settings().oracle_budget)
        payload['checks'] = [
            {'tag': tag, 'passed': passed, 'detail': detail} for tag, passed, detail in checklist(report)
        ]
        payload['notes'] = list(report.notes)
        lines.extend(checklist_lines(report))
        for note in report.notes:
            logger.info(note)

    emit(lines, payload, output_format)
    if report is not None and not report.passed:
        raise VerificationError(f"{len(report.failures)} check(s) failed for {path.name}")
    return payload
