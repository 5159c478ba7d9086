"""
Published Table Comparison

Compares a built catalog with the transcribed census. Published class
numbers are mapped to catalog entries through their invariant signature,
and per-k comparisons use multisets, so catalog order never matters.
"""

import logging
from collections import Counter
from typing import Dict, List

import sympy

from src.catalog.aggregate import aggregate_exp_sum
from src.catalog.checks import as_extension, mass_exceptions
from src.catalog.enumerate import Catalog, CatalogEntry, class_counts, upset_classes
from src.catalog.labeled import p_count
from src.catalog.matrices import matrices
from src.catalog.reference import (
    CENSUS, CHAR_POLYS, CLASS_COUNTS, E_K, E_KH, E_KN, LABELED_COUNTS, MASS_EXCEPTIONS,
    UPSET_COUNTS, UPSET_INTERIORS, VALUES,
)
from src.expo.charpoly import Z, CharPoly, char_poly
from src.poset.constructions import fence
from src.report import CheckReport

logger = logging.getLogger(__name__)

# Published upset classes of the two-fence
FENCE_UPSETS = (1, 2, 2, 3, 4, 6, 8, 19)

# Largest point count covered by the transcribed census
CENSUS_K = 5


def published(catalog: Catalog, n: int) -> CatalogEntry:
    """
    The catalog entry for published class n.

    Raises:
        KeyError: If n is not in the census
        IncompleteCatalog: If the catalog stops below the class's size
    """
    row = {row[0]: row for row in CENSUS}[n]
    _, k, min_count, height, automorphisms, _, downsets, _ = row
    return catalog.find(
        points=k, min_count=min_count, height=height,
        automorphisms=automorphisms, downsets=downsets,
    )


def census_check(catalog: Catalog) -> CheckReport:
    """Class counts and per-k multisets of invariants and exponential sums."""
    report = CheckReport("published census")
    top = min(catalog.k_max, CENSUS_K)
    report.add(
        "catalog.census.classes",
        class_counts(catalog)[:top + 1] == list(CLASS_COUNTS[:top + 1]),
        " ".join(str(count) for count in class_counts(catalog)),
    )
    for k in range(top + 1):
        built = Counter(
            (e.min_count, e.height, e.automorphisms, e.copies, e.downsets, e.exp.format())
            for e in catalog.of_size(k)
        )
        expected = Counter(row[2:] for row in CENSUS if row[1] == k)
        report.add("catalog.census.rows", built == expected, f"k={k}: {sum(built.values())} classes")
    return report


def aggregates_check(catalog: Catalog) -> CheckReport:
    """e_k, e_kn and e_k^h against the printed sums, and the labeled counts."""
    report = CheckReport("published aggregates")
    top = min(catalog.k_max, CENSUS_K)
    for k, text in E_K.items():
        if k <= top:
            report.add("catalog.aggregate.e_k", aggregate_exp_sum(catalog, k).format() == text, f"k={k}")
    for (k, n), text in E_KN.items():
        if k <= top:
            found = aggregate_exp_sum(catalog, k, min_count=n).format()
            report.add("catalog.aggregate.e_kn", found == text, f"k={k} n={n}")
    for (k, h), text in E_KH.items():
        if k <= top:
            found = aggregate_exp_sum(catalog, k, height=h).format()
            report.add("catalog.aggregate.e_kh", found == text, f"k={k} h={h}")
    for k, expected in enumerate(LABELED_COUNTS):
        if k <= catalog.k_max + 1:
            report.add("catalog.p.published", p_count(catalog, k) == expected, f"p({k}) = {expected}")
    return report


def matrices_check(catalog: Catalog, m_max: int = 9) -> CheckReport:
    """The printed upset and value blocks of the three-point prefix."""
    report = CheckReport("published matrices")
    M = matrices(catalog, m_max, k_max=3)
    column = {n: published(catalog, n).index - 1 for n in range(1, len(UPSET_COUNTS) + 1)}
    upsets = interiors = True
    for m, row in enumerate(UPSET_COUNTS, start=1):
        for n, value in enumerate(row, start=1):
            upsets &= M.B[column[m], column[n]] == value
            interiors &= M.A[column[m], column[n]] == UPSET_INTERIORS[m - 1][n - 1]
    report.add("catalog.published.upsets", upsets)
    report.add("catalog.published.interiors", interiors)
    values = all(
        M.E[m, column[n]] == row[m - 1]
        for n, row in VALUES.items()
        for m in range(1, min(m_max, len(row)) + 1)
    )
    report.add("catalog.published.values", values, f"m <= {min(m_max, 9)}")
    return report


def _published_char_polys(catalog: Catalog) -> Dict[int, CharPoly]:
    polys = {}
    for n in CHAR_POLYS:
        Q = published(catalog, n).poset
        P, embedding, m = as_extension(Q)
        polys[n] = char_poly(P, Q, m, embedding)
    return polys


def named_classes_check(catalog: Catalog) -> CheckReport:
    """
    The cited five-point classes: their characteristic polynomials, the
    coefficient-mass exceptions and the upset classes of the two-fence.
    """
    report = CheckReport("cited classes")
    if catalog.k_max < 4:
        report.note("Four-point classes not enumerated; cited classes skipped")
        return report
    fence_classes = sorted(entry.index for entry in upset_classes(catalog, fence(2)))
    expected = sorted(published(catalog, n).index for n in FENCE_UPSETS)
    report.add("catalog.published.fence-upsets", fence_classes == expected)
    if catalog.k_max < CENSUS_K:
        report.note("Five-point classes not enumerated; cited polynomials and exceptions skipped")
        return report

    polys = _published_char_polys(catalog)
    for n, coeffs in CHAR_POLYS.items():
        report.add("catalog.published.char-poly", polys[n].coeffs == coeffs, f"P_{n}: {polys[n]}")
    difference = polys[79].to_poly() - polys[78].to_poly()
    report.add(
        "catalog.published.char-poly-difference",
        difference == sympy.Poly(Z ** 2 - 3 * Z + 2, Z, domain='ZZ'),
        str(difference.as_expr()),
    )

    exceptions: List[CatalogEntry] = [e for e in mass_exceptions(catalog) if e.points <= CENSUS_K]
    expected_exceptions = sorted(published(catalog, n).index for n in MASS_EXCEPTIONS)
    report.add(
        "catalog.mass-exceptions",
        sorted(e.index for e in exceptions) == expected_exceptions
        and all(e.min_count == 3 and e.downsets in (12, 16) for e in exceptions),
        f"{len(exceptions)} classes",
    )
    return report
