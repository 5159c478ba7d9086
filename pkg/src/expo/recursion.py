"""
Upset Recursion

Every m-fold extension splits by the upset U of points covered by the first
m coordinates. This gives the partition identity d(P)^m = Σ_U e(m, P|_U) and
the level recursion e(m+1, P) = Σ_U d(U°) e(m, P|_U).
"""

import logging
from collections import Counter
from typing import Dict, List, Mapping, Tuple

from src.counting.downsets import DownsetCounter, upsets
from src.expo.exponential import e_incl_excl
from src.expo.oracles import isotone_maps
from src.poset.bits import bit, full_mask, iter_bits
from src.poset.poset import Poset, interior, is_downset, restrict, up_closure
from src.report import CheckReport

logger = logging.getLogger(__name__)


def upset_partition_check(m: int, P: Poset) -> int:
    """Σ over upsets U of e(m, P|_U); equals d(P)^m."""
    return sum(e_incl_excl(m, restrict(P, U)) for U in upsets(P))


def _next_value(P: Poset, V: int, table: Mapping[int, int], counter: DownsetCounter) -> int:
    """e(m+1, P|_V) from level-m values of the upsets of P inside the upset V."""
    total = 0
    for U in upsets(P):
        if U & ~V:
            continue
        if U not in table:
            raise ValueError(f"Missing level value for upset {U:#x}")
        inner = V & ~up_closure(P, V & ~U)
        total += counter.count(inner) * table[U]
    return total


def e_next(m: int, P: Poset, table: Mapping[int, int]) -> int:
    """e(m+1, P) from the table U -> e(m, P|_U) over all upsets U of P."""
    return _next_value(P, P.ground, table, DownsetCounter(P))


def e_levels(P: Poset, m_max: int) -> List[Dict[int, int]]:
    """Tables U -> e(m, P|_U) for m = 0..m_max, built level by level from e(0, ·)."""
    family = list(upsets(P))
    counter = DownsetCounter(P)
    level = {U: (1 if U == 0 else 0) for U in family}
    tables = [level]
    for _ in range(m_max):
        level = {V: _next_value(P, V, level, counter) for V in family}
        tables.append(level)
    return tables


def split_map(values: Tuple[int, ...], m: int) -> Tuple[int, int, Tuple[int, ...]]:
    """Decompose a map into nonempty subsets of {0..m} by its last coordinate.

    Returns (U, D, g): U is the upset of points meeting {0..m-1}, D the
    downset of points missing coordinate m, and g the restriction to U
    (indexed within U) with coordinate m dropped.
    """
    low = full_mask(m)
    U = sum(bit(x) for x, value in enumerate(values) if value & low)
    D = sum(bit(x) for x, value in enumerate(values) if not value >> m & 1)
    g = tuple(values[x] & low for x in iter_bits(U))
    return U, D, g


def bijection_check(m: int, P: Poset) -> CheckReport:
    """Check that split_map is a bijection onto triples (U, D ⊆ U°, g ∈ F(m, P|_U))."""
    report = CheckReport(f"split bijection m={m}")
    fibres: Counter = Counter()
    seen = set()
    well_formed = True
    for values in isotone_maps(m + 1, P):
        U, D, g = split_map(values, m)
        if not is_downset(P, D) or D & ~interior(P, U) or (U, D, g) in seen:
            well_formed = False
        seen.add((U, D, g))
        fibres[(U, g)] += 1
    report.add("expo.split-bijection.image", well_formed)

    counter = DownsetCounter(P)
    fibre_sizes = all(
        count == counter.count(interior(P, U)) for (U, _), count in fibres.items()
    )
    report.add("expo.split-bijection.fibres", fibre_sizes)

    targets = sum(1 for U in upsets(P) for _ in isotone_maps(m, restrict(P, U)))
    report.add(
        "expo.split-bijection.onto", len(fibres) == targets,
        f"{len(fibres)} (U, g) pairs hit, {targets} expected",
    )
    return report
