"""
Progress-Aware Logging

Every record reaches the DEBUG log file. The console handler writes to stderr
and goes quiet while a progress display is active: errors appear as panels,
warnings are replayed once the display closes, INFO and DEBUG stay in the
file. Stdout is reserved for command results.

Usage:
    from src.logging import LoggingManager

    manager = LoggingManager.get_instance()
    manager.setup(log_file, console_level)
    with manager.progress_mode():
        ...
"""

from src.logging.manager import LoggingManager
from src.logging.handlers import ProgressAwareConsoleHandler

__all__ = [
    'LoggingManager',
    'ProgressAwareConsoleHandler'
]
