"""
Representing Matrices

Over a catalog P_1..P_N: b counts the upsets of P_n isomorphic to P_m, a
weights the same upsets by d(U°), C inverts B, and D, E tabulate d(P_n)^m
and e(m, P_n). The identities BC = I, EB = D and E_m A = E_{m+1} tie the
upset partition and the level recursion to the catalog.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import sympy

from src.catalog.enumerate import Catalog, CatalogEntry
from src.counting.downsets import DownsetCounter, upsets
from src.poset.poset import interior, restrict
from src.report import CheckReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CatalogMatrices:
    """Exact integer matrices; column n - 1 belongs to catalog entry n."""
    A: sympy.Matrix
    B: sympy.Matrix
    C: sympy.Matrix
    D: sympy.Matrix
    E: sympy.Matrix

    @property
    def size(self) -> int:
        return self.B.shape[0]

    @property
    def m_max(self) -> int:
        return self.E.shape[0] - 1


def _inverse_by_recursion(B: sympy.Matrix) -> sympy.Matrix:
    """c_mn = δ_mn - Σ_{j > m} b_mj c_jn, filled from the last row up."""
    size = B.shape[0]
    C = sympy.zeros(size, size)
    for m in reversed(range(size)):
        for n in range(m, size):
            total = sum((B[m, j] * C[j, n] for j in range(m + 1, n + 1)), sympy.Integer(0))
            C[m, n] = (1 if m == n else 0) - total
    return C


def matrices(catalog: Catalog, m_max: int, k_max: Optional[int] = None) -> CatalogMatrices:
    """
    A..E over the catalog classes with at most k_max points (default: all).

    Raises:
        IncompleteCatalog: If an upset's class is missing from the catalog
    """
    limit = catalog.k_max if k_max is None else k_max
    catalog.require(limit)
    entries = [entry for entry in catalog if entry.points <= limit]
    size = len(entries)
    A = sympy.zeros(size, size)
    B = sympy.zeros(size, size)
    for column, entry in enumerate(entries):
        P = entry.poset
        counter = DownsetCounter(P)
        for U in upsets(P):
            row = catalog.lookup(restrict(P, U)).index - 1
            B[row, column] += 1
            A[row, column] += counter.count(interior(P, U))
    C = _inverse_by_recursion(B)
    D = sympy.Matrix(m_max + 1, size, lambda m, n: entries[n].downsets ** m)
    E = sympy.Matrix(m_max + 1, size, lambda m, n: _value(entries[n], m))
    logger.debug(f"Matrices over {size} classes, m <= {m_max}")
    return CatalogMatrices(A=A, B=B, C=C, D=D, E=E)


def _value(entry: CatalogEntry, m: int) -> int:
    return entry.exp.evaluate(m)


def matrix_identities_check(M: CatalogMatrices) -> CheckReport:
    """Triangularity, BC = I, EB = D and E_m A = E_{m+1}."""
    report = CheckReport(f"matrices N={M.size}")
    report.add(
        "catalog.matrices.triangular",
        M.A.is_upper and M.B.is_upper and M.C.is_upper
        and all(M.B[i, i] == 1 for i in range(M.size)),
    )
    report.add("catalog.matrices.inverse", M.B * M.C == sympy.eye(M.size))
    report.add("catalog.matrices.partition", M.E * M.B == M.D)
    for m in range(M.m_max):
        report.add(
            "catalog.matrices.recursion",
            M.E.row(m) * M.A == M.E.row(m + 1),
            f"m={m}",
        )
    return report
