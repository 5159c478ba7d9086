"""
Progress Configuration

Refresh settings and renderer selection.
"""

import logging
from dataclasses import dataclass
from threading import RLock
from typing import Optional

from src.progress.core.tracker import ProgressRenderer

logger = logging.getLogger(__name__)


@dataclass
class ProgressConfig:
    # Minimum seconds between two renderer updates of the same stage
    min_update_interval: float = 0.1

    # Rich refresh rate (Hz)
    rich_refresh_rate: int = 4


_config = ProgressConfig()
_config_lock = RLock()


def get_config() -> ProgressConfig:
    with _config_lock:
        return _config


def set_config(config: ProgressConfig) -> None:
    global _config
    with _config_lock:
        _config = config


def auto_select_renderer() -> Optional[ProgressRenderer]:
    """Instantiate the rich renderer, else tqdm, else nothing."""
    try:
        from src.progress.display.rich_renderer import RichProgressRenderer, is_rich_available
        if is_rich_available():
            return RichProgressRenderer()
    except Exception as e:
        logger.debug(f"Rich renderer unavailable: {e}")
    try:
        from src.progress.display.tqdm_renderer import TqdmProgressRenderer, is_tqdm_available
        if is_tqdm_available():
            return TqdmProgressRenderer()
    except Exception as e:
        logger.debug(f"tqdm renderer unavailable: {e}")
    return None
