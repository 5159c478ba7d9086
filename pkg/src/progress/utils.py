"""
Progress Utilities

Tracker construction and detail formatting shared by the renderers.
"""

import logging
from typing import Any, Dict, List, Optional, Tuple, TYPE_CHECKING

from src.progress.core.tracker import ProgressMode, ProgressTracker

if TYPE_CHECKING:
    from src.logging import LoggingManager

logger = logging.getLogger(__name__)

DETAIL_KEYS_BY_STAGE = {
    "catalog_build": ["k", "classes"],
    "verification": ["suite", "failed"],
    "tables": ["table"],
}


def get_detail_display_items(stage_name: str, details: Dict[str, Any]) -> List[Tuple[str, Any]]:
    """Ordered (label, value) pairs, skipping empty values."""
    keys = DETAIL_KEYS_BY_STAGE.get(stage_name, list(details))
    return [(key, details[key]) for key in keys if details.get(key) not in (None, "")]


def format_details(stage_name: str, details: Dict[str, Any], limit: Optional[int] = None) -> str:
    items = get_detail_display_items(stage_name, details)
    if limit is not None:
        items = items[:limit]
    return ", ".join(f"{label}: {value}" for label, value in items)


def stage_title(stage_name: str) -> str:
    return stage_name.replace('_', ' ').title()


def create_progress_tracker(
    mode_str: str = "auto",
    logging_manager: Optional["LoggingManager"] = None,
) -> ProgressTracker:
    """
    Tracker for a mode string from the command line.

    Args:
        mode_str: "auto", "on" or "off"; anything else falls back to auto
        logging_manager: Manager switched into progress mode while displaying
    """
    try:
        mode = ProgressMode(mode_str.lower())
    except ValueError:
        logger.warning(f"Invalid progress mode '{mode_str}', using 'auto'")
        mode = ProgressMode.AUTO
    return ProgressTracker(mode=mode, logging_manager=logging_manager)
