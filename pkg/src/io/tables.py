"""
Table Rendering

Printed-table lines for the aggregated exponential sums and p(k), and the
representing matrices as whitespace-aligned rows. Every renderer has a text
form and a dictionary form for JSON output.
"""

import logging
from typing import Any, Dict, List

import sympy

from src.catalog.aggregate import aggregate_exp_sum
from src.catalog.enumerate import Catalog
from src.catalog.labeled import p_count
from src.catalog.matrices import CatalogMatrices

logger = logging.getLogger(__name__)


def aggregate_lines(catalog: Catalog) -> List[str]:
    """e_k(m), then e_kn(m), then e_k^h(m) for every k in the catalog."""
    lines = []
    sizes = range(catalog.k_max + 1)
    for k in sizes:
        lines.append(f"e_{k}(m) = {aggregate_exp_sum(catalog, k).format()}")
    for k in sizes:
        for n in range(1, k + 1):
            lines.append(f"e_{k}{n}(m) = {aggregate_exp_sum(catalog, k, min_count=n).format()}")
    for k in sizes:
        for h in range(1, k + 1):
            lines.append(f"e_{k}^{h}(m) = {aggregate_exp_sum(catalog, k, height=h).format()}")
    return lines


def p_values(catalog: Catalog) -> List[int]:
    """p(0) .. p(k_max + 1); the last one comes from e_{k_max}(2)."""
    return [p_count(catalog, k) for k in range(catalog.k_max + 2)]


def p_line(catalog: Catalog) -> str:
    return "p: " + " ".join(str(value) for value in p_values(catalog))


def tables_dict(catalog: Catalog) -> Dict[str, Any]:
    sizes = range(catalog.k_max + 1)
    return {
        'kmax': catalog.k_max,
        'e_k': {str(k): aggregate_exp_sum(catalog, k).format() for k in sizes},
        'e_kn': {
            f"{k},{n}": aggregate_exp_sum(catalog, k, min_count=n).format()
            for k in sizes for n in range(1, k + 1)
        },
        'e_kh': {
            f"{k},{h}": aggregate_exp_sum(catalog, k, height=h).format()
            for k in sizes for h in range(1, k + 1)
        },
        'p': p_values(catalog),
    }


def matrix_lines(name: str, matrix: sympy.Matrix) -> List[str]:
    """Heading line and right-aligned rows."""
    rows = [[str(value) for value in matrix.row(i)] for i in range(matrix.rows)]
    width = max((len(cell) for row in rows for cell in row), default=1)
    lines = [f"{name} ({matrix.rows}x{matrix.cols})"]
    lines.extend(" ".join(cell.rjust(width) for cell in row) for row in rows)
    return lines


def matrices_lines(M: CatalogMatrices) -> List[str]:
    lines: List[str] = []
    for name in ('A', 'B', 'C', 'D', 'E'):
        if lines:
            lines.append("")
        lines.extend(matrix_lines(name, getattr(M, name)))
    return lines


def matrices_dict(M: CatalogMatrices) -> Dict[str, Any]:
    return {
        name: [[int(value) for value in getattr(M, name).row(i)] for i in range(getattr(M, name).rows)]
        for name in ('A', 'B', 'C', 'D', 'E')
    }
