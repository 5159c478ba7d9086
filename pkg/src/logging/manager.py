"""
Logging Manager

Process-wide owner of the root logger's handlers: a DEBUG file log and a
progress-aware console handler on stderr. Progress mode is reference counted
so nested displays (catalog build inside verification) share one session.
"""

import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from threading import RLock
from typing import Iterator, List, Optional

from src.logging.handlers import ProgressAwareConsoleHandler

try:
    from rich.console import Console
    from rich.panel import Panel
    from rich.text import Text
    RICH_AVAILABLE = True
except ImportError:
    Console = None
    Panel = None
    Text = None
    RICH_AVAILABLE = False

logger = logging.getLogger(__name__)

# Oldest buffered warnings are dropped beyond this many
MAX_BUFFERED_WARNINGS = 50


class LoggingManager:
    """
    Singleton that installs the handlers and switches progress mode.

    Usage:
        manager = LoggingManager.get_instance()
        manager.setup(Path("logs/posetx.log"), console_level=logging.INFO)
        with manager.progress_mode():
            ...  # console quiet, file logging unchanged
    """

    _global_lock = RLock()
    _instance: Optional['LoggingManager'] = None

    def __init__(self) -> None:
        self._lock = RLock()
        self._console_handler: Optional[ProgressAwareConsoleHandler] = None
        self._file_handler: Optional[logging.FileHandler] = None
        self._original_handlers: List[logging.Handler] = []
        self._progress_depth = 0
        self._buffered_warnings: List[str] = []
        self._rich_console: Optional[object] = None

    @classmethod
    def get_instance(cls) -> 'LoggingManager':
        with cls._global_lock:
            if cls._instance is None:
                cls._instance = LoggingManager()
            return cls._instance

    def setup(self, log_file: Path, console_level: int = logging.WARNING) -> None:
        """
        Replace the root logger's handlers.

        Args:
            log_file: File receiving every record at DEBUG level
            console_level: Threshold for stderr (WARNING, INFO with --verbose,
                DEBUG with --debug)
        """
        with self._lock:
            log_file.parent.mkdir(parents=True, exist_ok=True)

            self._file_handler = logging.FileHandler(log_file, encoding='utf-8')
            self._file_handler.setLevel(logging.DEBUG)
            self._file_handler.setFormatter(
                logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
            )

            self._console_handler = ProgressAwareConsoleHandler(stream=sys.stderr, logging_manager=self)
            self._console_handler.setLevel(console_level)
            self._console_handler.setFormatter(logging.Formatter(
                '%(message)s' if console_level < logging.INFO else '%(levelname)s - %(message)s'
            ))

            root = logging.getLogger()
            root.setLevel(logging.DEBUG)
            self._original_handlers = root.handlers.copy()
            root.handlers.clear()
            root.addHandler(self._file_handler)
            root.addHandler(self._console_handler)
            logger.debug(f"Logging to {log_file} (console level {logging.getLevelName(console_level)})")

    def enable_progress_mode(self) -> None:
        with self._lock:
            self._progress_depth += 1
            if self._progress_depth == 1:
                self._buffered_warnings.clear()
                if self._console_handler:
                    self._console_handler.set_progress_mode(True)
                logger.debug("Progress mode on")

    def disable_progress_mode(self) -> None:
        """Leave one level of progress mode; the last exit replays buffered warnings."""
        with self._lock:
            if self._progress_depth == 0:
                return
            self._progress_depth -= 1
            if self._progress_depth == 0:
                if self._console_handler:
                    self._console_handler.set_progress_mode(False)
                self._replay_warnings()
                logger.debug("Progress mode off")

    @contextmanager
    def progress_mode(self) -> Iterator[None]:
        self.enable_progress_mode()
        try:
            yield
        finally:
            self.disable_progress_mode()

    def is_progress_mode_active(self) -> bool:
        with self._lock:
            return self._progress_depth > 0

    def buffer_warning(self, record: logging.LogRecord) -> None:
        with self._lock:
            if len(self._buffered_warnings) >= MAX_BUFFERED_WARNINGS:
                self._buffered_warnings.pop(0)
            handler = self._console_handler
            self._buffered_warnings.append(handler.format(record) if handler else record.getMessage())

    def display_critical_error(self, record: logging.LogRecord) -> None:
        """Show an error while progress is on, as a rich panel when available."""
        message = record.getMessage()
        if RICH_AVAILABLE:
            try:
                if self._rich_console is None:
                    self._rich_console = Console(stderr=True)
                text = Text()
                text.append("ERROR", style="bold red")
                text.append(f" ({record.name})", style="dim red")
                text.append(f": {message}", style="red")
                self._rich_console.print(Panel(text, title="Error", border_style="red", expand=False))
                return
            except Exception:
                pass
        sys.stderr.write(f"ERROR: {message} ({record.name})\n")
        sys.stderr.flush()

    def _replay_warnings(self) -> None:
        if not self._buffered_warnings:
            return
        try:
            sys.stderr.write(f"\n{len(self._buffered_warnings)} warning(s) during progress:\n")
            for message in self._buffered_warnings:
                sys.stderr.write(f"  {message}\n")
            sys.stderr.flush()
        finally:
            self._buffered_warnings.clear()

    def cleanup(self) -> None:
        """Restore the original root handlers and close the file log."""
        with self._lock:
            self._progress_depth = 0
            if self._console_handler:
                self._console_handler.set_progress_mode(False)
            self._replay_warnings()
            root = logging.getLogger()
            root.handlers.clear()
            root.handlers.extend(self._original_handlers)
            if self._file_handler:
                self._file_handler.close()
                self._file_handler = None
            self._console_handler = None
