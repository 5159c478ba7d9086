"""
Common Workflow Utilities

Result output (text or JSON on stdout), catalog loading and the per-class
thread pool shared by the command workflows.
"""

import json
import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional

from src.catalog.enumerate import Catalog, CatalogEntry, enumerate_catalog
from src.io.catalog_file import read_catalog
from src.poset.poset import Poset
from src.progress import CatalogBuildStage, ProgressTracker
from src.report import CheckReport
from src.settings import get_settings

logger = logging.getLogger(__name__)


def emit(lines: Iterable[str], payload: Dict[str, Any], output_format: str) -> None:
    """Print a result as text lines or as one JSON document."""
    if output_format == 'json':
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def load_catalog(
    input_path: Optional[Path],
    max_k: int,
    progress_tracker: Optional[ProgressTracker] = None,
) -> Catalog:
    """
    The catalog read from input_path, or enumerated through max_k.

    A file catalog larger than max_k is cut down to max_k; a smaller one is
    used as it is.

    Raises:
        FileNotFoundError: If input_path does not exist
        ParseError: If the file is malformed
        BudgetExceeded: If max_k is beyond the enumerable range
    """
    if input_path is not None:
        catalog = read_catalog(input_path)
        if max_k < catalog.k_max:
            logger.info(f"Restricting {input_path.name} from kmax={catalog.k_max} to {max_k}")
            return Catalog([entry for entry in catalog if entry.points <= max_k], max_k)
        if max_k > catalog.k_max:
            logger.warning(f"{input_path.name} only covers k <= {catalog.k_max}; using that")
        return catalog

    stage = None
    if progress_tracker is not None:
        stage = CatalogBuildStage()
        progress_tracker.add_stage(stage)
    return enumerate_catalog(max_k, progress_stage=stage)


def per_class(
    entries: List[CatalogEntry],
    check: Callable[[Poset], CheckReport],
    title: str,
    threads: Optional[int] = None,
) -> CheckReport:
    """
    Run check on every entry's poset and merge the reports in catalog order.

    Workers only change the schedule; results are keyed by catalog index.
    """
    workers = get_settings().threads if threads is None else threads
    reports: Dict[int, CheckReport] = {}
    if workers <= 1:
        for entry in entries:
            reports[entry.index] = check(entry.poset)
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(check, entry.poset): entry.index for entry in entries}
            for future in as_completed(futures):
                reports[futures[future]] = future.result()

    merged = CheckReport(title)
    for index in sorted(reports):
        merged.extend(reports[index])
    return merged
