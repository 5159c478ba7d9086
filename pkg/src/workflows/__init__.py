"""Command workflows"""
from src.workflows.poset_commands import run_info, run_downsets, run_expo
from src.workflows.catalog_commands import run_build, run_verify, run_matrices, run_tables
from src.workflows.verification import checklist, checklist_lines, run_verification

__all__ = [
    "run_info",
    "run_downsets",
    "run_expo",
    "run_build",
    "run_verify",
    "run_matrices",
    "run_tables",
    "checklist",
    "checklist_lines",
    "run_verification",
]
