"""
tqdm Progress Renderer

Fallback display with one ASCII bar per stage.
"""

import sys
from threading import RLock
from typing import Dict, Optional, TextIO

try:
    from tqdm import tqdm
    TQDM_AVAILABLE = True
except ImportError:
    tqdm = None
    TQDM_AVAILABLE = False

from src.progress.core.stage import StageProgress, StageStatus
from src.progress.core.tracker import ProgressRenderer
from src.progress.utils import format_details, stage_title

STATUS_MARKS = {
    StageStatus.COMPLETED: "done",
    StageStatus.FAILED: "FAILED",
    StageStatus.SKIPPED: "skipped",
}


class TqdmProgressRenderer(ProgressRenderer):

    def __init__(self, file: Optional[TextIO] = None) -> None:
        self.file = file or sys.stderr
        self._lock = RLock()
        self._bars: Dict[str, "tqdm"] = {}
        self._running = False

    def is_available(self) -> bool:
        return TQDM_AVAILABLE

    def start(self) -> None:
        with self._lock:
            self._running = TQDM_AVAILABLE

    def stop(self) -> None:
        with self._lock:
            for bar in self._bars.values():
                try:
                    bar.close()
                except Exception:
                    pass
            self._bars.clear()
            self._running = False

    def update_stage(self, stage_name: str, stage_progress: StageProgress) -> None:
        with self._lock:
            if not self._running:
                return
            bar = self._bars.get(stage_name)
            if bar is None:
                bar = tqdm(
                    desc=self._describe(stage_name, stage_progress),
                    total=stage_progress.total,
                    initial=stage_progress.current,
                    file=self.file,
                    ascii=True,
                    dynamic_ncols=True,
                    position=len(self._bars),
                )
                self._bars[stage_name] = bar
                return

            bar.set_description(self._describe(stage_name, stage_progress))
            if stage_progress.total is not None and stage_progress.total != bar.total:
                bar.total = stage_progress.total
            step = stage_progress.current - bar.n
            if step:
                bar.update(step)
            if stage_progress.status == StageStatus.FAILED and stage_progress.error:
                bar.write(f"{stage_title(stage_name)} failed: {stage_progress.error}")
            bar.refresh()

    def _describe(self, stage_name: str, stage_progress: StageProgress) -> str:
        text = stage_title(stage_name)
        mark = STATUS_MARKS.get(stage_progress.status)
        if mark:
            text += f" [{mark}]"
        if stage_progress.message:
            text += f": {stage_progress.message}"
        details = format_details(stage_name, stage_progress.details, limit=2)
        if details:
            text += f" ({details})"
        return text


def is_tqdm_available() -> bool:
    return TQDM_AVAILABLE
