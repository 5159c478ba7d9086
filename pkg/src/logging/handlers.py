"""
Progress-Aware Console Handler

Console handler on stderr that stays quiet while a progress display owns the
terminal. Command results go to stdout and are never routed through logging.
"""

import logging
import sys
from typing import Optional, TYPE_CHECKING

if TYPE_CHECKING:
    from src.logging.manager import LoggingManager


class ProgressAwareConsoleHandler(logging.StreamHandler):
    """
    Stream handler with a progress mode.

    While progress mode is on:
    - ERROR and above are handed to the manager for a panel display
    - WARNING is buffered by the manager and replayed afterwards
    - INFO and DEBUG are dropped from the console (the file keeps them)
    """

    def __init__(self, stream=None, logging_manager: Optional['LoggingManager'] = None) -> None:
        super().__init__(stream or sys.stderr)
        self._logging_manager = logging_manager
        self._progress_mode = False

    def set_progress_mode(self, enabled: bool) -> None:
        self._progress_mode = enabled

    @property
    def progress_mode(self) -> bool:
        return self._progress_mode

    def emit(self, record: logging.LogRecord) -> None:
        try:
            if not self._progress_mode:
                super().emit(record)
                return
            if self._logging_manager is None:
                return
            if record.levelno >= logging.ERROR:
                self._logging_manager.display_critical_error(record)
            elif record.levelno >= logging.WARNING:
                self._logging_manager.buffer_warning(record)
        except Exception:
            self.handleError(record)

    def handleError(self, record: logging.LogRecord) -> None:
        if not self._progress_mode:
            super().handleError(record)
            return
        try:
            sys.stderr.write(f"Logging failed for a {record.levelname} record from {record.name}\n")
            sys.stderr.flush()
        except Exception:
            pass
