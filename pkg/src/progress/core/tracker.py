"""
Progress Tracker

Coordinates stages and a renderer, and switches the logging manager into
progress mode while a display is live.
"""

import logging
import sys
import time
from abc import ABC, abstractmethod
from enum import Enum
from threading import RLock
from typing import Any, Dict, Optional, TYPE_CHECKING

from src.progress.core.stage import FINISHED, ProgressStage, StageProgress, StageStatus

if TYPE_CHECKING:
    from src.logging import LoggingManager

logger = logging.getLogger(__name__)


class ProgressMode(Enum):
    AUTO = "auto"  # display only when stderr is a terminal
    ON = "on"
    OFF = "off"


class ProgressRenderer(ABC):
    """Display backend for stage snapshots."""

    @abstractmethod
    def start(self) -> None:
        ...

    @abstractmethod
    def stop(self) -> None:
        ...

    @abstractmethod
    def update_stage(self, stage_name: str, stage_progress: StageProgress) -> None:
        ...

    @abstractmethod
    def is_available(self) -> bool:
        ...


class ProgressTracker:
    """
    Owns the stages of one command run.

    Usage:
        with ProgressTracker(ProgressMode.AUTO, LoggingManager.get_instance()) as tracker:
            stage = CatalogBuildStage()
            tracker.add_stage(stage)
            enumerate_catalog(5, progress_stage=stage)
    """

    def __init__(
        self,
        mode: ProgressMode = ProgressMode.AUTO,
        logging_manager: Optional["LoggingManager"] = None,
    ) -> None:
        self.mode = mode
        self._lock = RLock()
        self._stages: Dict[str, ProgressStage] = {}
        self._renderer: Optional[ProgressRenderer] = None
        self._started = False
        self._displaying = False
        self._logging_manager = logging_manager
        self._logging_mode_active = False
        self._last_update: Dict[str, float] = {}

    @property
    def enabled(self) -> bool:
        if self.mode == ProgressMode.OFF:
            return False
        if self.mode == ProgressMode.AUTO:
            return bool(getattr(sys.stderr, 'isatty', lambda: False)())
        return True

    def add_stage(self, stage: ProgressStage) -> None:
        with self._lock:
            self._stages[stage.name] = stage
            stage.add_callback(self._on_stage_update)

    def get_stage(self, stage_name: str) -> Optional[ProgressStage]:
        with self._lock:
            return self._stages.get(stage_name)

    def set_renderer(self, renderer: Optional[ProgressRenderer]) -> None:
        with self._lock:
            self._renderer = renderer

    def start(self) -> None:
        with self._lock:
            if self._started:
                return
            self._started = True
            if not self.enabled:
                return

            if self._renderer is None:
                from src.progress.config import auto_select_renderer
                self._renderer = auto_select_renderer()
            if self._renderer is None:
                logger.debug("No progress renderer available; continuing without display")
                return

            if self._logging_manager:
                self._logging_manager.enable_progress_mode()
                self._logging_mode_active = True
            try:
                self._renderer.start()
                self._displaying = True
                logger.debug(f"Started {type(self._renderer).__name__}")
            except Exception as e:
                logger.warning(f"Progress display failed to start: {e}")
                self._displaying = False
                self._renderer = None
                self._release_logging()

    def stop(self) -> None:
        with self._lock:
            if not self._started:
                return
            if self._renderer and self._displaying:
                try:
                    self._renderer.stop()
                except Exception as e:
                    logger.warning(f"Error stopping progress display: {e}")
            self._displaying = False
            self._release_logging()
            self._started = False

    def _release_logging(self) -> None:
        if self._logging_manager and self._logging_mode_active:
            self._logging_manager.disable_progress_mode()
            self._logging_mode_active = False

    def _on_stage_update(self, stage_name: str, stage_progress: StageProgress) -> None:
        if not (self._renderer and self._displaying):
            return
        from src.progress.config import get_config

        now = time.time()
        urgent = stage_progress.status in FINISHED or stage_progress.error
        if not urgent and now - self._last_update.get(stage_name, 0.0) < get_config().min_update_interval:
            return
        self._last_update[stage_name] = now
        try:
            self._renderer.update_stage(stage_name, stage_progress)
        except Exception as e:
            logger.warning(f"Progress display update failed for {stage_name}: {e}")

    def get_summary(self) -> Dict[str, Dict[str, Any]]:
        with self._lock:
            return {name: stage.get_display_info() for name, stage in self._stages.items()}

    def has_failures(self) -> bool:
        with self._lock:
            return any(stage.progress.status == StageStatus.FAILED for stage in self._stages.values())

    def __enter__(self) -> "ProgressTracker":
        self.start()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        self.stop()
