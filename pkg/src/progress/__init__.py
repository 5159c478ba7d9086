"""
Progress Tracking

Stage-based progress display on stderr (rich, tqdm, or off) for the long
running commands: catalog build, verification and table rendering.
"""

from src.progress.core.tracker import ProgressTracker, ProgressMode
from src.progress.core.stage import ProgressStage, StageStatus, StageProgress
from src.progress.stages.catalog_stage import CatalogBuildStage
from src.progress.stages.verification_stage import VerificationStage
from src.progress.stages.table_stage import TableStage
from src.progress.utils import create_progress_tracker

__all__ = [
    "ProgressTracker",
    "ProgressMode",
    "ProgressStage",
    "StageStatus",
    "StageProgress",
    "CatalogBuildStage",
    "VerificationStage",
    "TableStage",
    "create_progress_tracker",
]
