"""
Rich Progress Renderer

One rich progress bar per stage on a stderr console.
"""

import logging
from threading import RLock
from typing import Dict, Optional

from rich.console import Console
from rich.progress import (
    BarColumn, Progress, SpinnerColumn, TaskID, TextColumn, TimeElapsedColumn,
)

from src.progress.core.stage import StageProgress, StageStatus
from src.progress.core.tracker import ProgressRenderer
from src.progress.utils import format_details, stage_title

logger = logging.getLogger(__name__)

STATUS_STYLES = {
    StageStatus.PENDING: "dim",
    StageStatus.RUNNING: "cyan",
    StageStatus.COMPLETED: "green",
    StageStatus.FAILED: "red",
    StageStatus.SKIPPED: "yellow",
}


class RichProgressRenderer(ProgressRenderer):

    def __init__(self, console: Optional[Console] = None) -> None:
        from src.progress.config import get_config

        self.console = console or Console(stderr=True)
        self._lock = RLock()
        self._progress = Progress(
            SpinnerColumn(),
            TextColumn("{task.description}"),
            BarColumn(),
            TextColumn("{task.completed}/{task.total}"),
            TimeElapsedColumn(),
            console=self.console,
            refresh_per_second=get_config().rich_refresh_rate,
        )
        self._tasks: Dict[str, TaskID] = {}
        self._running = False

    def is_available(self) -> bool:
        return is_rich_available()

    def start(self) -> None:
        with self._lock:
            if not self._running:
                self._progress.start()
                self._running = True

    def stop(self) -> None:
        with self._lock:
            if self._running:
                self._progress.stop()
                self._running = False

    def update_stage(self, stage_name: str, stage_progress: StageProgress) -> None:
        with self._lock:
            if not self._running:
                return
            description = self._describe(stage_name, stage_progress)
            task = self._tasks.get(stage_name)
            if task is None:
                self._tasks[stage_name] = self._progress.add_task(
                    description, total=stage_progress.total, completed=stage_progress.current,
                )
                return
            self._progress.update(
                task,
                description=description,
                total=stage_progress.total,
                completed=stage_progress.current,
            )
            if stage_progress.status == StageStatus.FAILED and stage_progress.error:
                self.console.print(f"[red]{stage_title(stage_name)} failed:[/red] {stage_progress.error}")

    def _describe(self, stage_name: str, stage_progress: StageProgress) -> str:
        style = STATUS_STYLES.get(stage_progress.status, "white")
        text = f"[{style}]{stage_title(stage_name)}[/{style}]"
        if stage_progress.message:
            text += f" {stage_progress.message}"
        details = format_details(stage_name, stage_progress.details)
        if details:
            text += f" [dim]({details})[/dim]"
        return text


def is_rich_available() -> bool:
    try:
        import rich  # noqa: F401
        return True
    except ImportError:
        return False
