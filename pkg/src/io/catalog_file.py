"""
Catalog File

A header line ``posetx-catalog v1 kmax=<K>`` followed by one tab-separated
row per class:

    n  k  min_count  height  aut  copies  d  expsum  canon

Reading rebuilds each class from its canonical code and recomputes every
column, so a file that parses re-serializes to identical bytes.
"""

import csv
import io
import logging
import re
from pathlib import Path
from typing import List

from src.catalog.canonical import poset_from_code
from src.catalog.enumerate import Catalog, CatalogEntry, make_entry
from src.exceptions import ParseError

logger = logging.getLogger(__name__)

HEADER = "posetx-catalog v1 kmax={k_max}"
_HEADER = re.compile(r'^posetx-catalog v1 kmax=(\d+)$')
COLUMNS = ('n', 'k', 'min_count', 'height', 'aut', 'copies', 'd', 'expsum', 'canon')


def entry_row(entry: CatalogEntry) -> List[str]:
    return [
        str(entry.index), str(entry.points), str(entry.min_count), str(entry.height),
        str(entry.automorphisms), str(entry.copies), str(entry.downsets),
        entry.exp.format(), entry.canon,
    ]


def serialize_catalog(catalog: Catalog) -> str:
    buffer = io.StringIO()
    buffer.write(HEADER.format(k_max=catalog.k_max) + "\n")
    writer = csv.writer(buffer, delimiter='\t', lineterminator='\n')
    for entry in catalog:
        writer.writerow(entry_row(entry))
    return buffer.getvalue()


def _rebuild(row: List[str], index: int, line_number: int) -> CatalogEntry:
    if len(row) != len(COLUMNS):
        raise ParseError(f"Expected {len(COLUMNS)} columns, got {len(row)}", line_number)
    try:
        code = bytes.fromhex(row[-1])
        entry = make_entry(index, poset_from_code(code))
    except ValueError as e:
        raise ParseError(f"Invalid canonical code '{row[-1]}': {e}", line_number)
    if entry_row(entry) != row:
        mismatched = [
            name for name, found, expected in zip(COLUMNS, row, entry_row(entry)) if found != expected
        ]
        raise ParseError(f"Columns disagree with the canonical code: {', '.join(mismatched)}", line_number)
    return entry


def parse_catalog(text: str) -> Catalog:
    """
    Parse and re-verify a catalog file.

    Raises:
        ParseError: If the header, a row, or a recomputed column is wrong
    """
    lines = text.splitlines()
    if not lines:
        raise ParseError("Empty catalog file")
    match = _HEADER.match(lines[0].strip())
    if not match:
        raise ParseError(f"Expected '{HEADER}' header, got '{lines[0]}'", 1)
    k_max = int(match.group(1))

    entries = []
    reader = csv.reader(lines[1:], delimiter='\t')
    for line_number, row in enumerate(reader, start=2):
        if not row:
            continue
        entries.append(_rebuild(row, len(entries) + 1, line_number))

    catalog = Catalog(entries, k_max)
    sizes = [entry.points for entry in entries]
    if sizes != sorted(sizes) or any(size > k_max for size in sizes):
        raise ParseError(f"Rows are not ordered by point count within kmax={k_max}")
    if [entry.canon for entry in entries] != sorted(
        (entry.canon for entry in entries), key=lambda code: (bytes.fromhex(code)[0], code)
    ):
        raise ParseError("Rows are not in canonical-code order")
    logger.debug(f"Parsed catalog with {len(catalog)} classes through k={k_max}")
    return catalog


def write_catalog(catalog: Catalog, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize_catalog(catalog), encoding='utf-8')
    logger.info(f"Wrote {len(catalog)} classes to {path}")


def read_catalog(path: Path) -> Catalog:
    """
    Raises:
        FileNotFoundError: If the file does not exist
        ParseError: If the contents are malformed
    """
    if not path.exists():
        raise FileNotFoundError(f"Catalog file not found: {path.absolute()}")
    return parse_catalog(path.read_text(encoding='utf-8'))
