"""File formats and table rendering"""
from src.io.poset_format import parse_poset, serialize_poset, read_poset, write_poset
from src.io.catalog_file import parse_catalog, serialize_catalog, read_catalog, write_catalog
from src.io.tables import (
    aggregate_lines, p_values, p_line, tables_dict, matrices_lines, matrices_dict,
)

__all__ = [
    "parse_poset",
    "serialize_poset",
    "read_poset",
    "write_poset",
    "parse_catalog",
    "serialize_catalog",
    "read_catalog",
    "write_catalog",
    "aggregate_lines",
    "p_values",
    "p_line",
    "tables_dict",
    "matrices_lines",
    "matrices_dict",
]
