"""
Catalog Commands

catalog build | verify | matrices | tables. Each loads (or enumerates) the
catalog, renders its result on stdout and returns it for the caller.
"""

import logging
from pathlib import Path
from typing import Optional

from src.catalog.enumerate import Catalog, class_counts
from src.catalog.matrices import CatalogMatrices, matrices
from src.exceptions import VerificationError
from src.io.catalog_file import serialize_catalog, write_catalog
from src.io.tables import aggregate_lines, matrices_dict, matrices_lines, p_line, tables_dict
from src.progress import ProgressTracker, TableStage, VerificationStage
from src.report import CheckReport
from src.utils import log_section_header
from src.workflows.common import emit, load_catalog
from src.workflows.verification import checklist_lines, run_verification, verification_payload

logger = logging.getLogger(__name__)


def run_build(
    max_k: int,
    out: Optional[Path] = None,
    output_format: str = 'text',
    progress_tracker: Optional[ProgressTracker] = None,
) -> Catalog:
    """
    Enumerate every class through max_k and write the catalog file.

    With no out path the file body goes to stdout; with one, stdout gets the
    per-k class counts.
    """
    log_section_header(f"CATALOG BUILD kmax={max_k}")
    catalog = load_catalog(None, max_k, progress_tracker)
    counts = class_counts(catalog)
    if out is None:
        print(serialize_catalog(catalog), end='')
        return catalog

    write_catalog(catalog, out)
    logger.info(f"Wrote {len(catalog)} classes to {out}")
    emit(
        [f"classes: {' '.join(str(count) for count in counts)}", f"written: {out}"],
        {'kmax': max_k, 'classes': counts, 'total': len(catalog), 'out': str(out)},
        output_format,
    )
    return catalog


def run_verify(
    max_k: int,
    m_max: int,
    seed: int,
    input_path: Optional[Path] = None,
    output_format: str = 'text',
    progress_tracker: Optional[ProgressTracker] = None,
) -> CheckReport:
    """
    Print the checklist of every suite over the catalog.

    Raises:
        VerificationError: If any check failed (after printing the checklist)
    """
    catalog = load_catalog(input_path, max_k, progress_tracker)
    stage = None
    if progress_tracker is not None:
        stage = VerificationStage()
        progress_tracker.add_stage(stage)
    report = run_verification(catalog, m_max, seed, progress_stage=stage)

    lines = checklist_lines(report)
    failed = sum(1 for line in lines if line.startswith("FAIL"))
    lines.append(f"summary: {len(lines) - failed} passed, {failed} failed")
    emit(lines, verification_payload(report, catalog.k_max, m_max, seed), output_format)

    if not report.passed:
        raise VerificationError(f"{failed} check tag(s) failed")
    return report


def run_matrices(
    max_k: int,
    m_max: int,
    input_path: Optional[Path] = None,
    output_format: str = 'text',
    progress_tracker: Optional[ProgressTracker] = None,
) -> CatalogMatrices:
    """The matrices A, B, C, D, E over the catalog."""
    catalog = load_catalog(input_path, max_k, progress_tracker)
    stage = _table_stage(progress_tracker, 1)
    M = matrices(catalog, m_max)
    if stage:
        stage.table_done(1, "matrices")
        stage.complete()
    emit(matrices_lines(M), {'kmax': catalog.k_max, 'm_max': m_max, **matrices_dict(M)}, output_format)
    return M


def run_tables(
    max_k: int,
    input_path: Optional[Path] = None,
    output_format: str = 'text',
    progress_tracker: Optional[ProgressTracker] = None,
) -> Catalog:
    """e_k(m), e_kn(m), e_k^h(m) lines and the p(k) list."""
    catalog = load_catalog(input_path, max_k, progress_tracker)
    stage = _table_stage(progress_tracker, 2)
    lines = aggregate_lines(catalog)
    if stage:
        stage.table_done(1, "exponential sums")
    lines.append(p_line(catalog))
    if stage:
        stage.table_done(2, "p(k)")
        stage.complete()
    emit(lines, tables_dict(catalog), output_format)
    return catalog


def _table_stage(progress_tracker: Optional[ProgressTracker], total: int) -> Optional[TableStage]:
    if progress_tracker is None:
        return None
    stage = TableStage()
    progress_tracker.add_stage(stage)
    stage.start_tables(total)
    return stage
