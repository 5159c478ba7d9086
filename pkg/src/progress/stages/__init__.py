"""Stages for the catalog build, the verification driver and table rendering."""

from src.progress.stages.catalog_stage import CatalogBuildStage
from src.progress.stages.verification_stage import VerificationStage
from src.progress.stages.table_stage import TableStage

__all__ = [
    'CatalogBuildStage',
    'VerificationStage',
    'TableStage',
]
